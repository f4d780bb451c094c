#include "qcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcoh {

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                if (o.a[k][j] != 0) r.a[i][j] += a[i][k] * o.a[k][j];
        }
    return r;
}

QVec Mat::apply(const QVec& v) const {
    if ((int)v.size() != cols) throw std::invalid_argument("matrix apply shape mismatch");
    QVec r(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

bool Mat::is_zero() const {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Mat mat_from_columns(const std::vector<QVec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m((int)cols[0].size(), (int)cols.size());
    for (int j = 0; j < m.cols; ++j) {
        if ((int)cols[j].size() != m.rows)
            throw std::invalid_argument("ragged column list");
        for (int i = 0; i < m.rows; ++i) m.a[i][j] = cols[j][i];
    }
    return m;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.a[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m.a[sel], m.a[row]);
        Rational inv = 1 / m.a[row][col];
        for (int j = col; j < m.cols; ++j) m.a[row][j] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col] == 0) continue;
            Rational f = m.a[i][col];
            for (int j = col; j < m.cols; ++j) m.a[i][j] -= f * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return (int)rref(m).size(); }

std::vector<QVec> kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols, Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_linear(const Mat& m, const QVec& b) {
    if ((int)b.size() != m.rows) throw std::invalid_argument("rhs size mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.a[i][j] = m.a[i][j];
        aug.a[i][m.cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    QVec x(m.cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.a[i][m.cols];
    return x;
}

std::vector<QVec> column_space_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<QVec> basis;
    for (int p : pivots) {
        QVec col(m.rows);
        for (int i = 0; i < m.rows; ++i) col[i] = m.a[i][p];
        basis.push_back(std::move(col));
    }
    return basis;
}

int span_rank(const std::vector<QVec>& vs) {
    if (vs.empty()) return 0;
    Mat m((int)vs.size(), (int)vs[0].size());
    for (size_t i = 0; i < vs.size(); ++i) m.a[i] = vs[i];
    return rank(std::move(m));
}

bool in_span(const std::vector<QVec>& span, const QVec& v) {
    bool zero = true;
    for (const auto& x : v)
        if (x != 0) { zero = false; break; }
    if (zero) return true;
    if (span.empty()) return false;
    return solve_linear(mat_from_columns(span), v).has_value();
}

bool subspace_contained(const std::vector<QVec>& sub, const std::vector<QVec>& sup) {
    for (const auto& v : sub)
        if (!in_span(sup, v)) return false;
    return true;
}

bool subspace_equal(const std::vector<QVec>& u, const std::vector<QVec>& w) {
    return subspace_contained(u, w) && subspace_contained(w, u);
}

std::vector<QVec> subspace_intersection(const std::vector<QVec>& u, const std::vector<QVec>& w) {
    if (u.empty() || w.empty()) return {};
    // x in U cap W <=> x = U c = W d; solve [U | -W] (c,d)^T = 0.
    int n = (int)u[0].size();
    Mat m(n, (int)(u.size() + w.size()));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < u.size(); ++j) m.a[i][j] = u[j][i];
        for (size_t j = 0; j < w.size(); ++j) m.a[i][u.size() + j] = -w[j][i];
    }
    std::vector<QVec> inter;
    for (const auto& k : kernel_basis(m)) {
        QVec x(n, Rational(0));
        for (size_t j = 0; j < u.size(); ++j)
            for (int i = 0; i < n; ++i) x[i] += k[j] * u[j][i];
        inter.push_back(std::move(x));
    }
    // The parametrization can repeat directions; reduce to a basis.
    if (inter.empty()) return inter;
    Mat red((int)inter.size(), n);
    for (size_t i = 0; i < inter.size(); ++i) red.a[i] = inter[i];
    std::vector<int> piv = rref(red);
    std::vector<QVec> basis;
    for (size_t i = 0; i < piv.size(); ++i) basis.push_back(red.a[i]);
    return basis;
}

Rational determinant(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    Rational det(1);
    int n = m.rows;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (m.a[i][col] != 0) { sel = i; break; }
        if (sel < 0) return Rational(0);
        if (sel != col) {
            std::swap(m.a[sel], m.a[col]);
            det = -det;
        }
        det *= m.a[col][col];
        Rational inv = 1 / m.a[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (m.a[i][col] == 0) continue;
            Rational f = m.a[i][col] * inv;
            for (int j = col; j < n; ++j) m.a[i][j] -= f * m.a[col][j];
        }
    }
    return det;
}

std::vector<Rational> leading_principal_minors(const Mat& g) {
    if (g.rows != g.cols) throw std::invalid_argument("minors of non-square matrix");
    std::vector<Rational> minors;
    for (int k = 1; k <= g.rows; ++k) {
        Mat blk(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) blk.a[i][j] = g.a[i][j];
        minors.push_back(determinant(std::move(blk)));
    }
    return minors;
}

LdltResult ldlt_definite(const Mat& g) {
    if (g.rows != g.cols) throw std::invalid_argument("ldlt of non-square matrix");
    int n = g.rows;
    LdltResult res;
    Mat l = Mat::identity(n);
    std::vector<Rational> d(n, Rational(0));
    for (int j = 0; j < n; ++j) {
        Rational dj = g.a[j][j];
        for (int k = 0; k < j; ++k) dj -= l.a[j][k] * l.a[j][k] * d[k];
        res.pivots.push_back(dj);
        if (dj <= 0) {
            res.positive_definite = false;
            res.failing_pivot = j + 1;
            return res;
        }
        d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            Rational lij = g.a[i][j];
            for (int k = 0; k < j; ++k) lij -= l.a[i][k] * l.a[j][k] * d[k];
            l.a[i][j] = lij / dj;
        }
    }
    res.positive_definite = true;
    res.failing_pivot = 0;
    return res;
}

namespace {

// Column Hermite reduction of M, tracking the unimodular transform U with
// M U = H. H has staircase shape with nonnegative leading entries.
struct Hermite {
    std::vector<std::vector<Int>> h; // rows x cols
    std::vector<std::vector<Int>> u; // cols x cols
    std::vector<int> pivot_row_of_col;
};

Hermite hermite_columns(std::vector<std::vector<Int>> m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    Hermite res;
    res.u.assign(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i) res.u[i][i] = 1;

    auto col_combine = [&](int dst, int src, const Int& q) {
        // column dst -= q * column src
        for (int i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
        for (int i = 0; i < cols; ++i) res.u[i][dst] -= q * res.u[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][x], m[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(res.u[i][x], res.u[i][y]);
    };
    auto col_negate = [&](int x) {
        for (int i = 0; i < rows; ++i) m[i][x] = -m[i][x];
        for (int i = 0; i < cols; ++i) res.u[i][x] = -res.u[i][x];
    };

    int lead = 0;
    res.pivot_row_of_col.assign(cols, -1);
    for (int row = 0; row < rows && lead < cols; ++row) {
        // Euclidean reduction across columns lead..cols-1 on this row.
        while (true) {
            int nz = -1;
            for (int j = lead; j < cols; ++j)
                if (m[row][j] != 0) { nz = j; break; }
            if (nz < 0) break;
            int best = nz;
            Int best_abs = abs(m[row][nz]);
            for (int j = nz + 1; j < cols; ++j) {
                if (m[row][j] == 0) continue;
                Int a = abs(m[row][j]);
                if (a < best_abs) {
                    best = j;
                    best_abs = a;
                }
            }
            if (best != lead) col_swap(best, lead);
            if (m[row][lead] < 0) col_negate(lead);
            bool reduced = true;
            for (int j = lead + 1; j < cols; ++j) {
                if (m[row][j] == 0) continue;
                Int q = m[row][j] / m[row][lead]; // truncated division
                if (q != 0) col_combine(j, lead, q);
                if (m[row][j] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (m[row][lead] != 0) {
            res.pivot_row_of_col[lead] = row;
            ++lead;
        }
    }
    res.h = std::move(m);
    return res;
}

} // namespace

std::optional<IntSolve> solve_integer(std::vector<std::vector<Int>> m, std::vector<Int> b) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    if ((int)b.size() != rows) throw std::invalid_argument("integer solve shape mismatch");
    if (cols == 0) {
        for (const auto& x : b)
            if (x != 0) return std::nullopt;
        return IntSolve{{}, {}};
    }
    Hermite her = hermite_columns(std::move(m));

    // Forward substitution on the staircase: y over the pivot columns.
    std::vector<Int> y(cols, 0);
    std::vector<Int> residual = b;
    for (int j = 0; j < cols; ++j) {
        int pr = her.pivot_row_of_col[j];
        if (pr < 0) break;
        // Rows above pr must already be zeroed by earlier pivots.
        if (residual[pr] % her.h[pr][j] != 0) return std::nullopt;
        Int q = residual[pr] / her.h[pr][j];
        y[j] = q;
        if (q != 0)
            for (int i = 0; i < rows; ++i) residual[i] -= q * her.h[i][j];
    }
    for (const auto& x : residual)
        if (x != 0) return std::nullopt;

    IntSolve sol;
    sol.particular.assign(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j)
            if (y[j] != 0) sol.particular[i] += her.u[i][j] * y[j];
    for (int j = 0; j < cols; ++j) {
        if (her.pivot_row_of_col[j] >= 0) continue;
        bool zero_col = true;
        for (int i = 0; i < rows; ++i)
            if (her.h[i][j] != 0) { zero_col = false; break; }
        if (!zero_col) continue;
        std::vector<Int> k(cols);
        for (int i = 0; i < cols; ++i) k[i] = her.u[i][j];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

} // namespace qcoh
