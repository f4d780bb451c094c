#pragma once

// Dense univariate polynomials over Q: arithmetic, gcd, squarefree
// decomposition, Sturm real-root counting, matrix minimal polynomials, and
// full factorization into irreducibles (Berlekamp mod p + Hensel lifting +
// subset recombination).

#include "qcoh/linalg.hpp"
#include "qcoh/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qcoh {

// Coefficient i multiplies X^i. Invariant: no trailing zero coefficients, so
// the zero polynomial has an empty coefficient vector and degree -1.
struct Poly {
    QVec c;

    Poly() = default;
    explicit Poly(QVec coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rational(1)); }
    static Poly X() { return Poly(QVec{Rational(0), Rational(1)}); }
    static Poly constant(const Rational& r) { return Poly(QVec{r}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& lc() const { return c.back(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < (int)c.size()) ? c[i] : Rational(0);
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator-() const;

    Rational eval(const Rational& x) const;
    Poly monic() const;
};

// Quotient and remainder with deg(rem) < deg(divisor); divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

bool poly_divides(const Poly& div, const Poly& num);

Poly poly_derivative(const Poly& p);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// g = u*a + v*b with g the monic gcd.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_extended_gcd(const Poly& a, const Poly& b);

Poly poly_lcm(const Poly& a, const Poly& b);

// p(X^k).
Poly poly_compose_xpow(const Poly& p, int k);

// Largest squarefree divisor, monic.
Poly squarefree_part(const Poly& p);

// Yun decomposition: p = lc * prod f_i^{m_i} with the f_i monic, squarefree,
// pairwise coprime, listed with their multiplicities m_i in increasing order.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Number of distinct real roots (Sturm chain on the squarefree part).
int count_real_roots(const Poly& p);

// All complex roots real (multiplicities ignored).
bool all_roots_real(const Poly& p);

// Monic minimal polynomial of a square matrix (Krylov local polynomials, lcm).
Poly minimal_polynomial(const Mat& m);

// Horner evaluation p(M).
Mat poly_of_matrix(const Poly& p, const Mat& m);

// p = leading * prod factors[i].first ^ factors[i].second with every factor
// monic and irreducible over Q, sorted by (degree, coefficients).
struct PolyFactors {
    Rational leading;
    std::vector<std::pair<Poly, int>> factors;
};
PolyFactors factor_rational(const Poly& p);

// Human-readable form like "X^3 - 4*X + 2/3" (variable name settable).
std::string poly_to_string(const Poly& p, const std::string& var = "X");

} // namespace qcoh
