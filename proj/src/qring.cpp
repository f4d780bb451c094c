#include "qcoh/qring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcoh {

int QRing::top_degree() const {
    int t = 0;
    for (const auto& b : basis) t = std::max(t, b.degree);
    return t;
}

int QRing::index_of_label(const std::string& label) const {
    for (int k = 0; k < dim(); ++k)
        if (basis[k].label == label) return k;
    return -1;
}

int QRing::point_index() const {
    int t = top_degree(), idx = -1;
    for (int k = 0; k < dim(); ++k) {
        if (basis[k].degree != t) continue;
        if (idx >= 0) throw std::logic_error("top degree class not unique");
        idx = k;
    }
    if (idx < 0) throw std::logic_error("empty ring");
    return idx;
}

int QRing::h_index() const {
    int idx = -1;
    for (int k = 0; k < dim(); ++k) {
        if (basis[k].degree != 2) continue;
        if (idx >= 0) throw std::logic_error("degree two class not unique");
        idx = k;
    }
    if (idx < 0) throw std::logic_error("no degree two class");
    return idx;
}

void QRing::set_product(int i, int j, std::vector<ProductTerm> terms) {
    if (i > j) std::swap(i, j);
    std::sort(terms.begin(), terms.end(), [](const ProductTerm& a, const ProductTerm& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.d < b.d;
    });
    table[{i, j}] = std::move(terms);
}

const std::vector<ProductTerm>& QRing::product(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = table.find({i, j});
    if (it == table.end())
        throw std::out_of_range("missing product " + std::to_string(i) + "," + std::to_string(j));
    return it->second;
}

QElem QRing::multiply(const QElem& a, const QElem& b) const {
    QElem r;
    for (const auto& [kda, ca] : a.terms)
        for (const auto& [kdb, cb] : b.terms) {
            Rational f = ca * cb;
            for (const ProductTerm& t : product(kda.first, kdb.first))
                r.add(t.k, t.d + kda.second + kdb.second, f * t.c);
        }
    return r;
}

QElem QRing::multiply_basis(int i, int j) const {
    QElem r;
    for (const ProductTerm& t : product(i, j)) r.add(t.k, t.d, t.c);
    return r;
}

std::vector<std::pair<int, int>> QRing::stratum(int T) const {
    std::vector<std::pair<int, int>> out;
    if (c1 <= 0) throw std::logic_error("stratum needs positive c1");
    for (int d = 0; 2 * c1 * d <= T; ++d)
        for (int k = 0; k < dim(); ++k)
            if (basis[k].degree + 2 * c1 * d == T) out.emplace_back(k, d);
    return out;
}

QVec QRing::to_stratum_vec(const QElem& e, int T) const {
    auto idx = stratum(T);
    QVec v(idx.size(), Rational(0));
    std::map<std::pair<int, int>, int> pos;
    for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = (int)i;
    for (const auto& [kd, c] : e.terms) {
        auto it = pos.find(kd);
        if (it == pos.end())
            throw std::invalid_argument("element has a term outside the degree stratum");
        v[it->second] = c;
    }
    return v;
}

QElem QRing::from_stratum_vec(const QVec& v, int T) const {
    auto idx = stratum(T);
    if (v.size() != idx.size()) throw std::invalid_argument("stratum vector size mismatch");
    QElem e;
    for (size_t i = 0; i < idx.size(); ++i) e.add(idx[i].first, idx[i].second, v[i]);
    return e;
}

Mat QRing::stratum_mult_matrix(int idx, int T) const {
    auto src = stratum(T);
    int target = T + basis[idx].degree;
    auto dst = stratum(target);
    Mat m((int)dst.size(), (int)src.size());
    QElem mult = QElem::basis(idx);
    for (size_t j = 0; j < src.size(); ++j) {
        QElem img = multiply(mult, QElem::basis(src[j].first, src[j].second));
        QVec col = to_stratum_vec(img, target);
        for (size_t i = 0; i < col.size(); ++i) m.a[i][j] = col[i];
    }
    return m;
}

std::vector<std::string> QRing::validate(bool check_associativity) const {
    std::vector<std::string> issues;
    int n = dim();
    if (n == 0) {
        issues.push_back("empty basis");
        return issues;
    }
    if (c1 <= 0) issues.push_back("c1 must be positive");
    if (unit < 0 || unit >= n) {
        issues.push_back("unit index out of range");
        return issues;
    }
    if (basis[unit].degree != 0) issues.push_back("unit class must have degree 0");

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!table.count({i, j})) {
                issues.push_back("missing product " + std::to_string(i) + "," + std::to_string(j));
                continue;
            }
            for (const ProductTerm& t : product(i, j)) {
                if (t.k < 0 || t.k >= n) {
                    issues.push_back("bad index in product " + std::to_string(i) + "," +
                                     std::to_string(j));
                    continue;
                }
                if (t.d < 0)
                    issues.push_back("negative q power in product " + std::to_string(i) + "," +
                                     std::to_string(j));
                if (t.c == 0)
                    issues.push_back("zero coefficient stored in product " + std::to_string(i) +
                                     "," + std::to_string(j));
                if (c1 > 0 &&
                    basis[t.k].degree + 2 * c1 * t.d != basis[i].degree + basis[j].degree)
                    issues.push_back("ungraded term in product " + std::to_string(i) + "," +
                                     std::to_string(j));
            }
        }
    if (!issues.empty()) return issues;

    for (int k = 0; k < n; ++k) {
        QElem e = multiply_basis(unit, k);
        if (!(e == QElem::basis(k)))
            issues.push_back("unit fails on class " + std::to_string(k));
    }

    if (check_associativity) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                QElem ij = multiply_basis(i, j);
                for (int k = j; k < n; ++k) {
                    QElem left = multiply(ij, QElem::basis(k));
                    QElem right = multiply(QElem::basis(i), multiply_basis(j, k));
                    if (!(left == right))
                        issues.push_back("associativity fails on " + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k));
                }
            }
    }
    return issues;
}

QElem psi(const QElem& e) {
    QElem r;
    for (const auto& [kd, c] : e.terms)
        if (kd.second != 0) r.terms[kd] = c * Rational(kd.second);
    return r;
}

FirstOrderProduct first_order_product(const QRing& r, const QElem& tau, const QElem& b) {
    FirstOrderProduct out;
    out.classical = r.multiply(QElem::basis(r.h_index()), b);
    out.correction = psi(r.multiply(tau, b));
    return out;
}

} // namespace qcoh
