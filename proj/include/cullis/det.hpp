#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cullis/combin.hpp"
#include "cullis/linalg.hpp"
#include "cullis/matrix.hpp"

namespace cullis {

// A k-subset c of row indices of [n], c(alpha) = alpha-th smallest.
struct RowSelection {
    int universe;
    IndexSet indices;

    RowSelection(int n, IndexSet idx) : universe(n), indices(std::move(idx)) {
        if (indices.is_all()) throw Error("RowSelection needs an explicit index list");
        if (indices.max_index() > n) throw BoundsError("row selection exceeds universe");
    }
};

// An injection [k] -> [n], sigma(j) = images[j-1].
struct RowInjection {
    int universe;
    std::vector<int> images;

    RowInjection(int n, std::vector<int> im) : universe(n), images(std::move(im)) {
        std::vector<bool> seen(size_t(n) + 1, false);
        for (int v : images) {
            if (v < 1 || v > n) throw BoundsError("injection value outside universe");
            if (seen[size_t(v)]) throw Error("injection images must be distinct");
            seen[size_t(v)] = true;
        }
    }
};

// sgn(c) = (-1)^{sum (c(alpha) - alpha)}; depends on c only, not on n.
inline int sgn_subset(const RowSelection& c) {
    long long e = 0;
    const auto& idx = c.indices.indices();
    for (size_t a = 0; a < idx.size(); ++a) e += idx[a] - (static_cast<long long>(a) + 1);
    return e % 2 == 0 ? 1 : -1;
}

inline int sgn_subset(const std::vector<int>& sorted_indices) {
    long long e = 0;
    for (size_t a = 0; a < sorted_indices.size(); ++a) e += sorted_indices[a] - (static_cast<long long>(a) + 1);
    return e % 2 == 0 ? 1 : -1;
}

// sgn_{n,k}(sigma) = sgn(pi_sigma) * sgn(image of sigma).
inline int sgn_injection(const RowInjection& s) {
    std::vector<int> sorted = s.images;
    std::sort(sorted.begin(), sorted.end());
    return sorting_permutation_sign(s.images) * sgn_subset(sorted);
}

namespace detail {
inline void require_tall(const Mat& x, const char* what) {
    if (x.rows() < x.cols())
        throw ShapeError(std::string(what) + ": need rows >= cols, got " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}
} // namespace detail

// det_{n,k} straight from the definition: the signed sum over all injections
// [k] -> [n] of entry products, injections visited in lexicographic image
// order.
inline Scalar det_injection_sum(const Mat& x) {
    detail::require_tall(x, "det_injection_sum");
    const int k = x.cols();
    Scalar acc = zero(x.field());
    for_each_injection(x.rows(), k, [&](const std::vector<int>& sigma) {
        Scalar term = sign_scalar(x.field(), sgn_injection(RowInjection(x.rows(), sigma)));
        for (int j = 1; j <= k; ++j) term *= x(sigma[size_t(j - 1)], j);
        acc += term;
        return true;
    });
    return acc;
}

// det_{n,k} as the alternating sum of basic minors:
// sum over c of sgn(c) det(X[c|)).
inline Scalar det_minor_sum(const Mat& x) {
    detail::require_tall(x, "det_minor_sum");
    const int k = x.cols();
    Scalar acc = zero(x.field());
    for_each_subset(x.rows(), k, [&](const std::vector<int>& c) {
        Mat minor = submatrix_keep(x, IndexSet(c), IndexSet::all());
        acc += sign_scalar(x.field(), sgn_subset(c)) * square_det(minor);
        return true;
    });
    return acc;
}

// det_{n,k} by Laplace expansion along `col`, then along the first remaining
// column at every deeper level. Memoized on the set of surviving rows; the
// column sequence is fixed by the depth, so the row set identifies the
// subproblem. Base cases: one column left is the alternating sum, none left
// is 1.
inline Scalar det_laplace(const Mat& x, int col = 1) {
    detail::require_tall(x, "det_laplace");
    const int n = x.rows(), k = x.cols();
    if (k < 1) throw ShapeError("det_laplace needs at least one column");
    if (col < 1 || col > k) throw BoundsError("expansion column out of range");
    if (n > 62) throw SizeCapError("det_laplace memoization caps rows at 62");

    // original column consumed at each depth: `col` first, the rest ascending
    std::vector<int> col_at_depth;
    col_at_depth.push_back(col);
    for (int j = 1; j <= k; ++j)
        if (j != col) col_at_depth.push_back(j);

    std::unordered_map<uint64_t, Scalar> memo;
    const uint64_t full = (uint64_t{1} << n) - 1;

    auto rec = [&](auto&& self, uint64_t rowmask) -> Scalar {
        int depth = n - __builtin_popcountll(rowmask);
        if (depth == k) return one(x.field());
        auto it = memo.find(uint64_t(rowmask));
        if (it != memo.end()) return it->second;
        int origcol = col_at_depth[size_t(depth)];
        int local_j = depth == 0 ? col : 1;
        Scalar acc = zero(x.field());
        int local_i = 0;
        for (int r = 1; r <= n; ++r) {
            if (!(rowmask >> (r - 1) & 1)) continue;
            ++local_i;
            const Scalar& entry = x(r, origcol);
            if (entry.is_zero()) continue;
            Scalar sub = self(self, rowmask & ~(uint64_t{1} << (r - 1)));
            Scalar term = entry * sub;
            if ((local_i + local_j) % 2 != 0) term = -term;
            acc += term;
        }
        memo.emplace(uint64_t(rowmask), acc);
        return acc;
    };
    return rec(rec, full);
}

// Coefficients of det_{n,k}(A + lambda B) as a polynomial in lambda:
// coefficient of lambda^d is the sum over d-subsets S of columns of the
// determinant with the S columns taken from B and the rest from A. The
// returned list has k+1 entries (the degree is at most k).
inline std::vector<Scalar> binomial_coeffs(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
        throw ShapeError("binomial_coeffs needs matrices of the same shape and field");
    detail::require_tall(a, "binomial_coeffs");
    const int k = a.cols();
    std::vector<Scalar> coeffs(size_t(k) + 1, zero(a.field()));
    for (int d = 0; d <= k; ++d) {
        Scalar acc = zero(a.field());
        for_each_subset(k, d, [&](const std::vector<int>& s) {
            Mat mixed = a;
            for (int j : s) mixed.set_col(j, b.col_vec(j));
            acc += det_minor_sum(mixed);
            return true;
        });
        coeffs[size_t(d)] = std::move(acc);
    }
    return coeffs;
}

struct ShiftResult {
    Mat matrix;
    int sign; // contract: sign * det(matrix) = det(input)
};

// Row cyclic shift sending row i to the top; valid when n + k is odd.
// (-1)^{(i+1)k} det(shifted) = det(X).
inline ShiftResult cyclic_shift(const Mat& x, int i) {
    const int n = x.rows(), k = x.cols();
    if ((n + k) % 2 == 0) throw PreconditionError("cyclic shift needs n + k odd");
    if (i < 1 || i > n) throw BoundsError("shift row out of range");
    Mat r(x.field(), n, k);
    for (int l = 1; l <= n; ++l) {
        int src = (i - 1 + l - 1) % n + 1;
        r.set_row(l, x.row_vec(src));
    }
    int sign = ((i + 1) * k) % 2 == 0 ? 1 : -1;
    return ShiftResult{std::move(r), sign};
}

// Semi-cyclic shift for n + k even: rotate row i to the top and negate the
// bottom i-1 rows (the rows that wrapped around).
// (-1)^{(n-i)k} det(shifted) = det(X).
inline ShiftResult semicyclic_shift(const Mat& x, int i) {
    const int n = x.rows(), k = x.cols();
    if ((n + k) % 2 != 0) throw PreconditionError("semi-cyclic shift needs n + k even");
    if (i < 1 || i > n) throw BoundsError("shift row out of range");
    Mat r(x.field(), n, k);
    for (int l = 1; l <= n; ++l) {
        int src = (i - 1 + l - 1) % n + 1;
        std::vector<Scalar> row = x.row_vec(src);
        if (src < i)
            for (auto& v : row) v = -v;
        r.set_row(l, row);
    }
    int sign = ((n - i) * k) % 2 == 0 ? 1 : -1;
    return ShiftResult{std::move(r), sign};
}

// The SCS map: the invertible linear row rotation that preserves
// det-vanishing, dispatching on the parity of n + k (plain rotation when
// odd, negating rotation when even).
inline Mat scs_apply(const Mat& x, int i0) {
    const int n = x.rows(), k = x.cols();
    if (i0 < 1 || i0 > n) throw BoundsError("SCS pivot row out of range");
    if ((n + k) % 2 != 0) return cyclic_shift(x, i0).matrix;
    return semicyclic_shift(x, i0).matrix;
}

// Transport of a left-kernel vector through the SCS map:
// z° = (z_{i0}, ..., z_n, (-1)^{n+k+1} z_1, ..., (-1)^{n+k+1} z_{i0-1}),
// so that z°^t scs_apply(X, i0) = 0 whenever z^t X = 0.
inline std::vector<Scalar> scs_transport_z(const std::vector<Scalar>& z, int i0, int n, int k) {
    if (int(z.size()) != n) throw ShapeError("scs_transport_z: dim(z) != n");
    if (i0 < 1 || i0 > n) throw BoundsError("SCS pivot row out of range");
    int wrap_sign = (n + k + 1) % 2 == 0 ? 1 : -1;
    std::vector<Scalar> out;
    out.reserve(size_t(n));
    for (int i = i0; i <= n; ++i) out.push_back(z[size_t(i - 1)]);
    for (int i = 1; i < i0; ++i) {
        Scalar v = z[size_t(i - 1)];
        out.push_back(wrap_sign == 1 ? v : -v);
    }
    return out;
}

// SCS as an n x n row-action matrix S with scs_apply(X, i0) = S X.
inline Mat scs_row_matrix(const FieldSpec& f, int n, int k, int i0) {
    if (i0 < 1 || i0 > n) throw BoundsError("SCS pivot row out of range");
    int wrap_sign = (n + k) % 2 != 0 ? 1 : -1;
    Mat s(f, n, n);
    for (int l = 1; l <= n; ++l) {
        int src = (i0 - 1 + l - 1) % n + 1;
        s.set(l, src, src < i0 ? sign_scalar(f, wrap_sign) : one(f));
    }
    return s;
}

// sum_{i=1}^{n} (-1)^i X[i|), a row vector of length k. The sum starts with
// -X[1|), the convention used by the alternating-row-sum theorems.
inline std::vector<Scalar> alternating_row_sum(const Mat& x) {
    std::vector<Scalar> acc = zero_vector(x.field(), x.cols());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) {
            if (i % 2 == 0)
                acc[size_t(j - 1)] += x(i, j);
            else
                acc[size_t(j - 1)] -= x(i, j);
        }
    return acc;
}

inline Mat append_ones_column(const Mat& x) {
    Mat ones(x.field(), x.rows(), 1);
    for (int i = 1; i <= x.rows(); ++i) ones.set(i, 1, one(x.field()));
    return Mat::hstack(x, ones);
}

} // namespace cullis
