#pragma once

// Dense exact linear algebra over the rationals, plus an integer-lattice
// solver. Dimensions in this library stay small (<= ~60), so everything is
// straightforward Gauss elimination without fraction-free tricks.

#include "qcoh/rational.hpp"

#include <optional>
#include <vector>

namespace qcoh {

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<QVec> a; // row major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r, QVec(c, Rational(0))) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }

    Rational& at(int i, int j) { return a[i][j]; }
    const Rational& at(int i, int j) const { return a[i][j]; }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
        return t;
    }

    Mat operator*(const Mat& o) const;
    QVec apply(const QVec& v) const;
    bool is_zero() const;
};

Mat mat_from_columns(const std::vector<QVec>& cols);

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of {x : M x = 0}.
std::vector<QVec> kernel_basis(const Mat& m);

// Particular solution of M x = b with free variables set to zero.
std::optional<QVec> solve_linear(const Mat& m, const QVec& b);

// Basis of the column space (the pivot columns themselves).
std::vector<QVec> column_space_basis(const Mat& m);

int span_rank(const std::vector<QVec>& vs);
bool in_span(const std::vector<QVec>& span, const QVec& v);
bool subspace_contained(const std::vector<QVec>& sub, const std::vector<QVec>& sup);
bool subspace_equal(const std::vector<QVec>& u, const std::vector<QVec>& w);
std::vector<QVec> subspace_intersection(const std::vector<QVec>& u, const std::vector<QVec>& w);

Rational determinant(Mat m);

// Determinants of the k x k leading principal blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const Mat& g);

// LDL^T elimination of a symmetric matrix. positive_definite is false as soon
// as a pivot fails to be strictly positive; failing_pivot is its 1-based index
// (0 when definite).
struct LdltResult {
    bool positive_definite = false;
    int failing_pivot = 0;
    std::vector<Rational> pivots;
};
LdltResult ldlt_definite(const Mat& g);

// Integer linear system M x = b: particular solution and a lattice basis of
// the integer kernel, or nullopt when no integral solution exists.
struct IntSolve {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel;
};
std::optional<IntSolve> solve_integer(std::vector<std::vector<Int>> m, std::vector<Int> b);

} // namespace qcoh
