#pragma once

// Graded rings with a quantum parameter. A QRing stores structure constants
// for a basis of even-degree classes over Q[q], with deg q = 2*c1. Elements
// are sparse sums of q^d * e_k. Degree strata are finite dimensional, which
// keeps every computation here exact linear algebra.

#include "qcoh/linalg.hpp"
#include "qcoh/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcoh {

struct BasisClass {
    std::string label;
    int degree = 0;
};

struct ProductTerm {
    int k = 0;     // basis index
    int d = 0;     // q power
    Rational c;    // coefficient
};

// Sparse element: (basis index, q power) -> coefficient.
struct QElem {
    std::map<std::pair<int, int>, Rational> terms;

    static QElem basis(int k, int d = 0, Rational c = Rational(1)) {
        QElem e;
        e.add(k, d, c);
        return e;
    }

    void add(int k, int d, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(k, d);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }
    Rational coeff(int k, int d) const {
        auto it = terms.find({k, d});
        return it == terms.end() ? Rational(0) : it->second;
    }

    QElem operator+(const QElem& o) const {
        QElem r = *this;
        for (const auto& [kd, c] : o.terms) r.add(kd.first, kd.second, c);
        return r;
    }
    QElem operator-(const QElem& o) const {
        QElem r = *this;
        for (const auto& [kd, c] : o.terms) r.add(kd.first, kd.second, -c);
        return r;
    }
    QElem operator*(const Rational& s) const {
        QElem r;
        if (s == 0) return r;
        for (const auto& [kd, c] : terms) r.terms[kd] = c * s;
        return r;
    }
    bool operator==(const QElem& o) const { return terms == o.terms; }

    // Multiply by q^d.
    QElem shift_q(int d) const {
        QElem r;
        for (const auto& [kd, c] : terms) r.terms[{kd.first, kd.second + d}] = c;
        return r;
    }
};

struct QRing {
    std::string name;
    std::string provenance = "builtin"; // builtin | completed | external
    int c1 = 0;
    int unit = -1;
    std::vector<BasisClass> basis;
    std::map<std::pair<int, int>, std::vector<ProductTerm>> table; // key i <= j

    int dim() const { return (int)basis.size(); }
    int degree(int k) const { return basis[k].degree; }
    int top_degree() const;
    int index_of_label(const std::string& label) const; // -1 when absent
    int point_index() const; // unique top-degree class
    int h_index() const;     // unique degree-two class

    void set_product(int i, int j, std::vector<ProductTerm> terms);
    const std::vector<ProductTerm>& product(int i, int j) const;

    QElem multiply(const QElem& a, const QElem& b) const;
    QElem multiply_basis(int i, int j) const;

    // Ordered (basis index, q power) pairs spanning the degree-T stratum,
    // q power ascending then index ascending.
    std::vector<std::pair<int, int>> stratum(int T) const;
    QVec to_stratum_vec(const QElem& e, int T) const;
    QElem from_stratum_vec(const QVec& v, int T) const;

    // Matrix of multiplication by e_idx from stratum T to stratum T + deg(e_idx).
    Mat stratum_mult_matrix(int idx, int T) const;

    // Structural soundness: unit behaves as identity, every stored product is
    // graded with nonnegative q powers and in-range indices, and (optionally)
    // multiplication is associative on all basis triples. Returns human
    // readable problems; empty means valid.
    std::vector<std::string> validate(bool check_associativity = true) const;
};

// q d/dq.
QElem psi(const QElem& e);

// Degree-two product through first order in the deformation direction tau:
// classical part h *0 b, plus the correction Psi(tau *0 b) carried by the
// deformation parameter.
struct FirstOrderProduct {
    QElem classical;
    QElem correction;
};
FirstOrderProduct first_order_product(const QRing& r, const QElem& tau, const QElem& b);

} // namespace qcoh
