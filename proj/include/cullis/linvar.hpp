#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cullis/matroid.hpp"

namespace cullis {

// F^E: an exact field together with a finite, ordered, nonempty ground set.
struct CoordinateSpace {
    FieldSpec field;
    GroundSet ground;

    CoordinateSpace(FieldSpec f, GroundSet g) : field(f), ground(std::move(g)) {
        if (ground.size() == 0) throw Error("coordinate space needs a nonempty ground set");
    }

    static CoordinateSpace matrix_space(const FieldSpec& f, int n, int k) {
        return CoordinateSpace(f, GroundSet::grid(n, k));
    }
    static CoordinateSpace vector_space(const FieldSpec& f, int n) {
        return CoordinateSpace(f, GroundSet::range(n));
    }

    size_t dim() const { return ground.size(); }

    bool is_grid(int& n, int& k) const {
        n = k = 0;
        for (const auto& l : ground.elements()) {
            if (!l.is_cell()) return false;
            n = std::max(n, int(l.a));
            k = std::max(k, int(l.b));
        }
        return size_t(n) * size_t(k) == ground.size() && ground == GroundSet::grid(n, k);
    }

    bool operator==(const CoordinateSpace& o) const {
        return field == o.field && ground == o.ground;
    }
};

// An equational representation (A, b): columns of A are labelled by the
// ground set, in ground order.
struct ConstraintSystem {
    CoordinateSpace space;
    Mat a;
    std::vector<Scalar> b;

    ConstraintSystem(CoordinateSpace sp, Mat a_, std::vector<Scalar> b_)
        : space(std::move(sp)), a(std::move(a_)), b(std::move(b_)) {
        if (size_t(a.cols()) != space.ground.size())
            throw ShapeError("constraint matrix must have one column per ground element");
        if (int(b.size()) != a.rows()) throw ShapeError("dim(b) must equal the row count of A");
        if (a.field() != space.field) throw FieldMismatchError("constraint field mismatch");
    }
};

// AS(A,b) as a value: a consistent constraint system plus a cached witness
// point. Nonemptiness is a construction-time requirement; emptiness of an
// intersection/construction is signalled by nullopt, never by an exception.
class LinearVariety {
  public:
    const ConstraintSystem& rep() const { return rep_; }
    const CoordinateSpace& space() const { return rep_.space; }
    const FieldSpec& field() const { return rep_.space.field; }
    const std::vector<Scalar>& witness() const { return witness_; }
    int codim() const { return codim_; }
    int dim() const { return int(rep_.space.ground.size()) - codim_; }

    // Basis of the direction space AS(A, 0).
    std::vector<std::vector<Scalar>> direction_basis() const { return nullspace_basis(rep_.a); }

  private:
    friend std::optional<LinearVariety> variety_from_constraints(ConstraintSystem cs);

    LinearVariety(ConstraintSystem rep, std::vector<Scalar> witness, int codim)
        : rep_(std::move(rep)), witness_(std::move(witness)), codim_(codim) {}

    ConstraintSystem rep_;
    std::vector<Scalar> witness_;
    int codim_;
};

inline std::optional<LinearVariety> variety_from_constraints(ConstraintSystem cs) {
    auto w = solve_affine(cs.a, cs.b);
    if (!w) return std::nullopt;
    int codim = rank(cs.a);
    return LinearVariety(std::move(cs), std::move(*w), codim);
}

// The whole space F^E as a variety (empty constraint system).
inline LinearVariety whole_space(const CoordinateSpace& sp) {
    Mat a(sp.field, 0, int(sp.ground.size()));
    auto k = variety_from_constraints(ConstraintSystem(sp, std::move(a), {}));
    return *k;
}

inline bool contains(const LinearVariety& k, const std::vector<Scalar>& x) {
    if (x.size() != k.space().ground.size()) throw ShapeError("point/space dimension mismatch");
    for (const auto& v : x)
        if (v.field() != k.field()) throw FieldMismatchError("point field mismatch");
    return mat_vec(k.rep().a, x) == k.rep().b;
}

// Drop dependent constraint rows, keeping the first independent rows in
// order (the representation changes, the solution set does not).
inline LinearVariety reduce_full_rank(const LinearVariety& k) {
    const Mat& a = k.rep().a;
    std::vector<int> keep;
    std::vector<std::vector<Scalar>> echelon; // reduced copies of the kept rows
    for (int i = 1; i <= a.rows(); ++i) {
        std::vector<Scalar> r = a.row_vec(i);
        for (const auto& e : echelon) {
            size_t lead = 0;
            while (lead < e.size() && e[lead].is_zero()) ++lead;
            if (lead < e.size() && !r[lead].is_zero()) {
                Scalar f = r[lead] / e[lead];
                for (size_t j = 0; j < r.size(); ++j) r[j] -= f * e[j];
            }
        }
        if (!is_zero_vector(r)) {
            keep.push_back(i);
            echelon.push_back(std::move(r));
        }
    }
    Mat a2(a.field(), int(keep.size()), a.cols());
    std::vector<Scalar> b2;
    for (size_t t = 0; t < keep.size(); ++t) {
        a2.set_row(int(t) + 1, a.row_vec(keep[t]));
        b2.push_back(k.rep().b[size_t(keep[t] - 1)]);
    }
    auto out = variety_from_constraints(ConstraintSystem(k.space(), std::move(a2), std::move(b2)));
    return *out; // same solution set, still nonempty
}

// M(K), computed through the dual-vector-matroid route M(K) = M*[A].
inline Matroid variety_matroid(const LinearVariety& k) {
    return vector_matroid(VectorMatroidSource(k.rep().a, k.space().ground)).dual();
}

// A point x in K with x_e = c_e on an independent set I of M(K).
inline std::vector<Scalar> independent_assignment_witness(const LinearVariety& k,
                                                          const std::vector<Label>& i_set,
                                                          const std::vector<Scalar>& values) {
    if (i_set.size() != values.size()) throw ShapeError("one value per pinned element required");
    Matroid m = variety_matroid(k);
    if (!m.is_independent(i_set))
        throw PreconditionError("assignment set is dependent in the variety matroid");
    const auto& ground = k.space().ground;
    int ncols = int(ground.size());
    Mat units(k.field(), int(i_set.size()), ncols);
    for (size_t t = 0; t < i_set.size(); ++t)
        units.set(int(t) + 1, int(ground.position(i_set[t])) + 1, one(k.field()));
    Mat stacked = Mat::vstack(k.rep().a, units);
    std::vector<Scalar> rhs = k.rep().b;
    rhs.insert(rhs.end(), values.begin(), values.end());
    auto w = solve_affine(stacked, rhs);
    if (!w) throw Error("independent assignment unexpectedly inconsistent");
    return *w;
}

// U(x_e = c_e | e in E'): the coordinates in `pinned` are forced to the
// given values.
struct Slice {
    std::map<Label, Scalar> pinned;
};

inline std::optional<LinearVariety> intersect_slice(const LinearVariety& k, const Slice& u) {
    const auto& ground = k.space().ground;
    int ncols = int(ground.size());
    Mat units(k.field(), int(u.pinned.size()), ncols);
    std::vector<Scalar> vals;
    int row = 0;
    for (const auto& [label, value] : u.pinned) {
        if (value.field() != k.field()) throw FieldMismatchError("slice value field mismatch");
        units.set(++row, int(ground.position(label)) + 1, one(k.field()));
        vals.push_back(value);
    }
    Mat stacked = Mat::vstack(k.rep().a, units);
    std::vector<Scalar> rhs = k.rep().b;
    rhs.insert(rhs.end(), vals.begin(), vals.end());
    return variety_from_constraints(ConstraintSystem(k.space(), std::move(stacked), std::move(rhs)));
}

// An injective map f: E2 -> E1 driving the f-projection pi_f: F^{E1} -> F^{E2},
// pi_f(v)_a = v_{f(a)}.
class IndexInjection {
  public:
    IndexInjection(GroundSet from, GroundSet to, std::vector<Label> images)
        : from_(std::move(from)), to_(std::move(to)), images_(std::move(images)) {
        if (images_.size() != from_.size())
            throw ShapeError("one image per domain element required");
        std::map<Label, int> seen;
        for (const auto& l : images_) {
            if (!to_.contains(l)) throw BoundsError("image label " + l.to_string() + " not in codomain");
            if (seen[l]++ > 0) throw Error("index map is not injective");
        }
    }

    const GroundSet& from() const { return from_; }
    const GroundSet& to() const { return to_; }

    const Label& image_of(const Label& l) const { return images_[from_.position(l)]; }
    const Label& image_at(size_t pos) const { return images_[pos]; }
    const std::vector<Label>& images() const { return images_; }

    static IndexInjection identity(const GroundSet& g) {
        return IndexInjection(g, g, g.elements());
    }

    // Selection of coordinates: f: [m] -> E1 listing the chosen labels.
    static IndexInjection select(const GroundSet& to, const std::vector<Label>& chosen) {
        return IndexInjection(GroundSet::range(int(chosen.size())), to, chosen);
    }

  private:
    GroundSet from_, to_;
    std::vector<Label> images_;
};

inline std::vector<Scalar> project_point(const std::vector<Scalar>& x, const IndexInjection& f) {
    std::vector<Scalar> out;
    out.reserve(f.from().size());
    for (size_t a = 0; a < f.from().size(); ++a)
        out.push_back(x[f.to().position(f.image_at(a))]);
    return out;
}

// pi_f(K): image of K under the f-projection. Computed through the span
// form (witness image plus images of a direction basis), then turned back
// into constraints via the nullspace of the image directions.
inline LinearVariety project(const LinearVariety& k, const IndexInjection& f) {
    if (!(f.to() == k.space().ground))
        throw ShapeError("projection codomain must be the variety's ground set");
    CoordinateSpace target(k.field(), f.from());
    std::vector<Scalar> w = project_point(k.witness(), f);
    auto dirs = k.direction_basis();
    int m = int(target.ground.size());
    Mat dir_rows(k.field(), int(dirs.size()), m);
    for (size_t t = 0; t < dirs.size(); ++t) dir_rows.set_row(int(t) + 1, project_point(dirs[t], f));
    auto normal = nullspace_basis(dir_rows.rows() == 0 ? Mat(k.field(), 0, m) : dir_rows);
    Mat a(k.field(), int(normal.size()), m);
    for (size_t t = 0; t < normal.size(); ++t) a.set_row(int(t) + 1, normal[t]);
    std::vector<Scalar> b = mat_vec(a, w);
    auto out = variety_from_constraints(ConstraintSystem(target, std::move(a), std::move(b)));
    return *out;
}

// ins_{n,k}^{(i,j)}: identifies [n-1] x [k-1] with the complement of row i
// and column j inside [n] x [k].
inline IndexInjection ins_map(int n, int k, int i, int j) {
    if (k <= 1 || n < 2) throw PreconditionError("ins map needs n >= 2 and k >= 2");
    if (i < 1 || i > n || j < 1 || j > k) throw BoundsError("ins map indices out of range");
    std::vector<Label> images;
    images.reserve(size_t(n - 1) * size_t(k - 1));
    for (int a = 1; a <= n - 1; ++a)
        for (int b = 1; b <= k - 1; ++b)
            images.push_back(Label::cell(a >= i ? a + 1 : a, b >= j ? b + 1 : b));
    return IndexInjection(GroundSet::grid(n - 1, k - 1), GroundSet::grid(n, k), std::move(images));
}

// Representation of K that is reduced with respect to the cobasis B*: full
// rank, with the B*-column block a permutation matrix.
inline ConstraintSystem reduce_wrt_cobasis(const LinearVariety& k,
                                           const std::vector<Label>& bstar) {
    LinearVariety full = reduce_full_rank(k);
    const Mat& a = full.rep().a;
    if (int(bstar.size()) != full.codim())
        throw Error("cobasis size must equal the codimension");
    std::vector<int> cols;
    for (const auto& l : bstar) cols.push_back(int(k.space().ground.position(l)) + 1);
    std::sort(cols.begin(), cols.end());
    Mat block = submatrix_keep(a, IndexSet::all(), IndexSet(cols));
    if (block.rows() != block.cols() || rank(block) != block.rows())
        throw Error("the given set is not a cobasis of the variety matroid");
    Mat c = inverse(block);
    Mat a2 = c * a;
    std::vector<Scalar> b2 = mat_vec(c, full.rep().b);
    return ConstraintSystem(k.space(), std::move(a2), std::move(b2));
}

namespace detail {
inline bool is_permutation_block(const Mat& block) {
    if (block.rows() != block.cols()) return false;
    for (int i = 1; i <= block.rows(); ++i) {
        int ones = 0;
        for (int j = 1; j <= block.cols(); ++j) {
            if (block(i, j).is_zero()) continue;
            if (!block(i, j).is_one()) return false;
            ++ones;
        }
        if (ones != 1) return false;
    }
    for (int j = 1; j <= block.cols(); ++j) {
        int ones = 0;
        for (int i = 1; i <= block.rows(); ++i)
            if (!block(i, j).is_zero()) ++ones;
        if (ones != 1) return false;
    }
    return true;
}
} // namespace detail

// Cobasis exchange on a reduced representation: row i hits exactly one
// B*-element e_old; if A_{i, e_new} != 0 then B* ^ {e_old, e_new} is again a
// cobasis. The result is rank-checked before it is returned.
inline std::vector<Label> cobasis_exchange(const ConstraintSystem& cs,
                                           const std::vector<Label>& bstar, int row,
                                           const Label& e_new) {
    const Mat& a = cs.a;
    const auto& ground = cs.space.ground;
    if (row < 1 || row > a.rows()) throw BoundsError("exchange row out of range");
    if (rank(a) != a.rows()) throw PreconditionError("representation is not full rank");
    std::vector<int> cols;
    for (const auto& l : bstar) cols.push_back(int(ground.position(l)) + 1);
    std::sort(cols.begin(), cols.end());
    if (!detail::is_permutation_block(submatrix_keep(a, IndexSet::all(), IndexSet(cols))))
        throw PreconditionError("representation is not reduced w.r.t. the given cobasis");

    const Label* e_old = nullptr;
    for (const auto& l : bstar)
        if (!a(row, int(ground.position(l)) + 1).is_zero()) {
            e_old = &l;
            break;
        }
    if (e_old == nullptr) throw PreconditionError("row hits no cobasis element");
    if (a(row, int(ground.position(e_new)) + 1).is_zero())
        throw PreconditionError("A[row, e_new] must be nonzero");

    std::vector<Label> result;
    for (const auto& l : bstar)
        if (!(l == *e_old)) result.push_back(l);
    if (!(e_new == *e_old)) result.push_back(e_new);
    else result.push_back(*e_old);
    std::sort(result.begin(), result.end());

    std::vector<int> rcols;
    for (const auto& l : result) rcols.push_back(int(ground.position(l)) + 1);
    Mat rblock = submatrix_keep(a, IndexSet::all(), IndexSet(rcols));
    if (rank(rblock) != int(result.size()))
        throw Error("exchange produced a dependent column set");
    return result;
}

// Striking-out lifting: pin the whole j-th column of the matrix ground to
// the values c, then project along ins^{(i,j)}. Empty when the pinned
// column is dependent and the values are unreachable.
inline std::optional<LinearVariety> strike_out_lift(const LinearVariety& k, int i, int j,
                                                    const std::vector<Scalar>& c) {
    int n = 0, kk = 0;
    if (!k.space().is_grid(n, kk))
        throw ShapeError("strike_out_lift needs a matrix coordinate space");
    if (int(c.size()) != n) throw ShapeError("one pinned value per row required");
    if (kk <= 1) throw PreconditionError("strike_out_lift needs k > 1");
    Slice u;
    for (int l = 1; l <= n; ++l) u.pinned.emplace(Label::cell(l, j), c[size_t(l - 1)]);
    auto sliced = intersect_slice(k, u);
    if (!sliced) return std::nullopt;
    return project(*sliced, ins_map(n, kk, i, j));
}

// Streams the q^{dim K} points of a prime-field variety: the witness plus
// every F_q-combination of the direction basis, in odometer order.
class PointEnumerator {
  public:
    explicit PointEnumerator(const LinearVariety& k, uint64_t cap = uint64_t{1} << 24)
        : field_(k.field()), point_(k.witness()), basis_(k.direction_basis()) {
        if (!field_.is_prime_field())
            throw UnsupportedError("point enumeration needs a prime field");
        uint64_t q = field_.modulus();
        long double est = 1.0L;
        for (size_t i = 0; i < basis_.size(); ++i) est *= (long double)q;
        if (est > (long double)cap)
            throw SizeCapError("point enumeration of q^dim = " + std::to_string((double)est) +
                               " points exceeds cap " + std::to_string(cap));
        total_ = 1;
        for (size_t i = 0; i < basis_.size(); ++i) total_ *= q;
        digits_.assign(basis_.size(), 0);
    }

    uint64_t total() const { return total_; }

    std::optional<std::vector<Scalar>> next() {
        if (emitted_ == total_) return std::nullopt;
        if (emitted_ == 0) {
            ++emitted_;
            return point_;
        }
        uint64_t q = field_.modulus();
        for (size_t l = 0; l < digits_.size(); ++l) {
            for (size_t t = 0; t < point_.size(); ++t) point_[t] += basis_[l][t];
            digits_[l] = (digits_[l] + 1) % q;
            if (digits_[l] != 0) break;
        }
        ++emitted_;
        return point_;
    }

  private:
    FieldSpec field_;
    std::vector<Scalar> point_;
    std::vector<std::vector<Scalar>> basis_;
    std::vector<uint64_t> digits_;
    uint64_t total_ = 0;
    uint64_t emitted_ = 0;
};

// Applies fn to every point; fn returns false to stop early. Returns true
// if the enumeration ran to completion.
template <typename F>
bool for_each_point(const LinearVariety& k, F&& fn, uint64_t cap = uint64_t{1} << 24) {
    PointEnumerator en(k, cap);
    while (auto p = en.next())
        if (!fn(*p)) return false;
    return true;
}

// ---- variety text format ----
// space header ("space n k" for matrix grounds, "space n" for vector
// grounds), then a matrix block for A, then "b: v1 ... vm".

inline void print_variety(std::ostream& os, const ConstraintSystem& cs) {
    int n = 0, k = 0;
    if (cs.space.is_grid(n, k))
        os << "space " << n << ' ' << k << '\n';
    else
        os << "space " << cs.space.ground.size() << '\n';
    print_matrix(os, cs.a);
    os << "b:";
    for (const auto& v : cs.b) os << ' ' << v.to_string();
    os << '\n';
}

inline ConstraintSystem parse_variety(std::istream& is) {
    int line_no = 0;
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        throw ParseError("line " + std::to_string(line_no + 1) + ": unexpected end of input");
    };

    std::istringstream head(next_line());
    std::string kw;
    long long d1 = -1, d2 = -1;
    head >> kw >> d1;
    if (kw != "space" || d1 < 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'space n [k]' header");
    bool grid = bool(head >> d2);

    Mat a = parse_matrix(is, line_no);
    GroundSet ground = grid ? GroundSet::grid(int(d1), int(d2)) : GroundSet::range(int(d1));
    if (size_t(a.cols()) != ground.size())
        throw ParseError("constraint matrix has " + std::to_string(a.cols()) +
                         " columns but the space has " + std::to_string(ground.size()));
    CoordinateSpace sp(a.field(), std::move(ground));

    std::istringstream brow(next_line());
    std::string tag;
    brow >> tag;
    if (tag != "b:") throw ParseError("line " + std::to_string(line_no) + ": expected 'b: ...'");
    std::vector<Scalar> b;
    std::string tok;
    while (brow >> tok) b.push_back(Scalar::parse(a.field(), tok));
    if (int(b.size()) != a.rows())
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(a.rows()) + " right-hand-side entries");
    return ConstraintSystem(std::move(sp), std::move(a), std::move(b));
}

inline ConstraintSystem parse_variety(const std::string& text) {
    std::istringstream is(text);
    return parse_variety(is);
}

} // namespace cullis
