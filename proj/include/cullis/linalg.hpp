#pragma once

#include <optional>
#include <vector>

#include "cullis/matrix.hpp"

namespace cullis {

struct RrefResult {
    Mat matrix;
    IndexSet pivots; // pivot column indices, 1-based
    int rank;
};

// Reduced row echelon form with deterministic pivoting: columns are scanned
// left to right and the first row with a nonzero entry becomes the pivot.
// Determinism matters: the subspace enumerator relies on canonical forms.
inline RrefResult rref(const Mat& a) {
    Mat r = a;
    std::vector<int> pivots;
    int pr = 1; // next pivot row
    for (int col = 1; col <= r.cols() && pr <= r.rows(); ++col) {
        int sel = 0;
        for (int i = pr; i <= r.rows(); ++i)
            if (!r(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == 0) continue;
        if (sel != pr)
            for (int j = 1; j <= r.cols(); ++j) {
                Scalar tmp = r(pr, j);
                r.set(pr, j, r(sel, j));
                r.set(sel, j, tmp);
            }
        Scalar inv = r(pr, col).inverse();
        for (int j = col; j <= r.cols(); ++j) r.set(pr, j, r(pr, j) * inv);
        for (int i = 1; i <= r.rows(); ++i) {
            if (i == pr || r(i, col).is_zero()) continue;
            Scalar factor = r(i, col);
            for (int j = col; j <= r.cols(); ++j) r.set(i, j, r(i, j) - factor * r(pr, j));
        }
        pivots.push_back(col);
        ++pr;
    }
    int rank = int(pivots.size());
    return RrefResult{std::move(r), IndexSet(std::move(pivots)), rank};
}

inline int rank(const Mat& a) { return rref(a).rank; }

// Basis of {x : Ax = 0} by the standard free-variable construction: one
// vector per free column f (increasing), with x_f = 1 and the pivot
// coordinates read off the RREF. Returns exactly cols - rank vectors.
inline std::vector<std::vector<Scalar>> nullspace_basis(const Mat& a) {
    RrefResult rr = rref(a);
    const Mat& r = rr.matrix;
    const auto& piv = rr.pivots.indices();
    std::vector<std::vector<Scalar>> basis;
    for (int f = 1; f <= a.cols(); ++f) {
        if (rr.pivots.contains(f)) continue;
        std::vector<Scalar> v = zero_vector(a.field(), a.cols());
        v[size_t(f - 1)] = one(a.field());
        for (size_t rrow = 0; rrow < piv.size(); ++rrow)
            v[size_t(piv[rrow] - 1)] = -r(int(rrow) + 1, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of Ax = b when consistent (free variables set to 0), or
// nullopt. Consistency per the rank criterion: a pivot in the b column of
// the augmented RREF means rk(A) < rk(A|b).
inline std::optional<std::vector<Scalar>> solve_affine(const Mat& a,
                                                       const std::vector<Scalar>& b) {
    if (int(b.size()) != a.rows()) throw ShapeError("solve_affine: dim(b) != rows(A)");
    Mat aug = Mat::hstack(a, column_matrix(a.field(), b));
    RrefResult rr = rref(aug);
    if (rr.pivots.contains(a.cols() + 1)) return std::nullopt;
    std::vector<Scalar> x = zero_vector(a.field(), a.cols());
    const auto& piv = rr.pivots.indices();
    for (size_t rrow = 0; rrow < piv.size(); ++rrow)
        x[size_t(piv[rrow] - 1)] = rr.matrix(int(rrow) + 1, a.cols() + 1);
    return x;
}

// Exact determinant by Gaussian elimination with row swaps.
inline Scalar square_det(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeError("square_det needs a square matrix");
    int n = a.rows();
    if (n == 0) return one(a.field());
    Mat m = a;
    Scalar det = one(a.field());
    for (int col = 1; col <= n; ++col) {
        int sel = 0;
        for (int i = col; i <= n; ++i)
            if (!m(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == 0) return zero(a.field());
        if (sel != col) {
            for (int j = 1; j <= n; ++j) {
                Scalar tmp = m(col, j);
                m.set(col, j, m(sel, j));
                m.set(sel, j, tmp);
            }
            det = -det;
        }
        det *= m(col, col);
        Scalar inv = m(col, col).inverse();
        for (int i = col + 1; i <= n; ++i) {
            if (m(i, col).is_zero()) continue;
            Scalar factor = m(i, col) * inv;
            for (int j = col; j <= n; ++j) m.set(i, j, m(i, j) - factor * m(col, j));
        }
    }
    return det;
}

inline Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse needs a square matrix");
    int n = a.rows();
    RrefResult rr = rref(Mat::hstack(a, Mat::identity(a.field(), n)));
    // singular A pushes pivots into the identity block
    if (rr.rank < n || (n > 0 && rr.pivots.indices().back() > n))
        throw Error("matrix is singular");
    Mat inv(a.field(), n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) inv.set(i, j, rr.matrix(i, n + j));
    return inv;
}

} // namespace cullis
