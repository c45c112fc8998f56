#pragma once

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cullis/field.hpp"

namespace cullis {

// A strictly increasing list of distinct 1-based indices, or the explicit
// "all" sentinel used where the paper writes A[c|).
class IndexSet {
  public:
    IndexSet() = default;

    explicit IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
        for (size_t i = 0; i < idx_.size(); ++i) {
            if (idx_[i] < 1) throw BoundsError("index sets are 1-based");
            if (i > 0 && idx_[i] <= idx_[i - 1])
                throw BoundsError("index set must be strictly increasing");
        }
    }

    IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}

    static IndexSet all() {
        IndexSet s;
        s.all_ = true;
        return s;
    }

    bool is_all() const { return all_; }
    bool empty() const { return !all_ && idx_.empty(); }
    size_t size() const { return idx_.size(); }
    int operator[](size_t i) const { return idx_[i]; }

    const std::vector<int>& indices() const {
        if (all_) throw Error("the 'all' sentinel has no index list");
        return idx_;
    }

    bool contains(int v) const {
        if (all_) return true;
        return std::binary_search(idx_.begin(), idx_.end(), v);
    }

    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

    IndexSet complement(int universe) const {
        if (all_) throw Error("complement of the 'all' sentinel needs no universe");
        std::vector<int> out;
        out.reserve(universe - idx_.size());
        for (int v = 1; v <= universe; ++v)
            if (!contains(v)) out.push_back(v);
        return IndexSet(std::move(out));
    }

    bool operator==(const IndexSet& o) const { return all_ == o.all_ && idx_ == o.idx_; }

  private:
    std::vector<int> idx_;
    bool all_ = false;
};

// Dense exact matrix. Public indexing is 1-based throughout, matching every
// file format and interface of the project; row-major storage is internal.
class Mat {
  public:
    Mat(const FieldSpec& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols), zero(f)) {
        if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    }

    static Mat identity(const FieldSpec& f, int n) {
        Mat m(f, n, n);
        for (int i = 1; i <= n; ++i) m.set(i, i, one(f));
        return m;
    }

    static Mat from_rows(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
        int n = int(rows.size());
        int k = n == 0 ? 0 : int(rows[0].size());
        Mat m(f, n, k);
        for (int i = 1; i <= n; ++i) {
            if (int(rows[i - 1].size()) != k) throw ShapeError("ragged row list");
            for (int j = 1; j <= k; ++j) m.set(i, j, Scalar::from_int(f, rows[i - 1][j - 1]));
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return e_[pos(i, j)]; }

    void set(int i, int j, Scalar v) {
        if (v.field() != field_) throw FieldMismatchError("entry field differs from matrix field");
        e_[pos(i, j)] = std::move(v);
    }

    std::vector<Scalar> row_vec(int i) const {
        std::vector<Scalar> r;
        r.reserve(cols_);
        for (int j = 1; j <= cols_; ++j) r.push_back((*this)(i, j));
        return r;
    }

    std::vector<Scalar> col_vec(int j) const {
        std::vector<Scalar> c;
        c.reserve(rows_);
        for (int i = 1; i <= rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    void set_row(int i, const std::vector<Scalar>& r) {
        if (int(r.size()) != cols_) throw ShapeError("row length mismatch");
        for (int j = 1; j <= cols_; ++j) set(i, j, r[j - 1]);
    }

    void set_col(int j, const std::vector<Scalar>& c) {
        if (int(c.size()) != rows_) throw ShapeError("column length mismatch");
        for (int i = 1; i <= rows_; ++i) set(i, j, c[i - 1]);
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) t.set(j, i, (*this)(i, j));
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (field_ != o.field_) throw FieldMismatchError("matrix product across fields");
        if (cols_ != o.rows_) throw ShapeError("inner dimensions differ");
        Mat r(field_, rows_, o.cols_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= o.cols_; ++j) {
                Scalar s = zero(field_);
                for (int l = 1; l <= cols_; ++l) s += (*this)(i, l) * o(l, j);
                r.set(i, j, std::move(s));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
            throw ShapeError("matrix sum shape mismatch");
        Mat r(field_, rows_, cols_);
        for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] + o.e_[t];
        return r;
    }

    Mat scaled(const Scalar& s) const {
        Mat r(field_, rows_, cols_);
        for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * s;
        return r;
    }

    bool operator==(const Mat& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat hstack(const Mat& a, const Mat& b) {
        if (a.field() != b.field() || a.rows() != b.rows())
            throw ShapeError("hstack needs equal row counts and fields");
        Mat r(a.field(), a.rows(), a.cols() + b.cols());
        for (int i = 1; i <= a.rows(); ++i) {
            for (int j = 1; j <= a.cols(); ++j) r.set(i, j, a(i, j));
            for (int j = 1; j <= b.cols(); ++j) r.set(i, a.cols() + j, b(i, j));
        }
        return r;
    }

    static Mat vstack(const Mat& a, const Mat& b) {
        if (a.field() != b.field() || a.cols() != b.cols())
            throw ShapeError("vstack needs equal column counts and fields");
        Mat r(a.field(), a.rows() + b.rows(), a.cols());
        for (int j = 1; j <= a.cols(); ++j) {
            for (int i = 1; i <= a.rows(); ++i) r.set(i, j, a(i, j));
            for (int i = 1; i <= b.rows(); ++i) r.set(a.rows() + i, j, b(i, j));
        }
        return r;
    }

  private:
    size_t pos(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw BoundsError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        return size_t(i - 1) * size_t(cols_) + size_t(j - 1);
    }

    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

namespace detail {
inline void check_within(const IndexSet& s, int universe, const char* what) {
    if (!s.is_all() && s.max_index() > universe)
        throw BoundsError(std::string(what) + " index " + std::to_string(s.max_index()) +
                          " exceeds " + std::to_string(universe));
}
} // namespace detail

// A[J1|J2]: keep the listed rows and columns, in order. The explicit
// IndexSet::all() sentinel selects a full axis (the paper's A[c|) form).
inline Mat submatrix_keep(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
    detail::check_within(rows, a.rows(), "row");
    detail::check_within(cols, a.cols(), "column");
    std::vector<int> ri, ci;
    if (rows.is_all())
        for (int i = 1; i <= a.rows(); ++i) ri.push_back(i);
    else
        ri = rows.indices();
    if (cols.is_all())
        for (int j = 1; j <= a.cols(); ++j) ci.push_back(j);
    else
        ci = cols.indices();
    Mat r(a.field(), int(ri.size()), int(ci.size()));
    for (size_t i = 0; i < ri.size(); ++i)
        for (size_t j = 0; j < ci.size(); ++j) r.set(int(i) + 1, int(j) + 1, a(ri[i], ci[j]));
    return r;
}

// A(J1|J2): strike out the listed rows and columns.
inline Mat submatrix_drop(const Mat& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.is_all() || cols.is_all())
        throw Error("the 'all' sentinel is only meaningful in keep position");
    detail::check_within(rows, a.rows(), "row");
    detail::check_within(cols, a.cols(), "column");
    return submatrix_keep(a, rows.complement(a.rows()), cols.complement(a.cols()));
}

// X[c|): row selection with all columns.
inline Mat select_rows(const Mat& a, const IndexSet& rows) {
    return submatrix_keep(a, rows, IndexSet::all());
}

// X(i|j): strike out one row and one column.
inline Mat drop_row_col(const Mat& a, int i, int j) {
    return submatrix_drop(a, IndexSet{i}, IndexSet{j});
}

// ---- matrix text format ----
// First line "n k field" with field in {Q, F<p>}; then n lines of k entries
// (integers, or a/b over Q). Printing emits canonical forms, so printing and
// re-parsing round-trips bit-exactly.

inline void print_matrix(std::ostream& os, const Mat& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().to_string() << '\n';
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) os << ' ';
            os << m(i, j).to_string();
        }
        os << '\n';
    }
}

inline std::string matrix_to_string(const Mat& m) {
    std::ostringstream os;
    print_matrix(os, m);
    return os.str();
}

// Parses one matrix block. `line_no` is advanced past the consumed lines and
// used in error messages (1-based within the stream).
inline Mat parse_matrix(std::istream& is, int& line_no) {
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(is, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        throw ParseError("line " + std::to_string(line_no + 1) + ": unexpected end of input");
    };

    std::istringstream head(next_line());
    long long n = -1, k = -1;
    std::string fs;
    if (!(head >> n >> k >> fs) || n < 0 || k < 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n k field' header");
    std::string extra;
    if (head >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing junk in header");

    FieldSpec f = [&] {
        try {
            return FieldSpec::parse(fs);
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }();

    Mat m(f, int(n), int(k));
    for (int i = 1; i <= n; ++i) {
        std::istringstream row(next_line());
        for (int j = 1; j <= k; ++j) {
            std::string tok;
            if (!(row >> tok))
                throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(k) + " entries");
            try {
                m.set(i, j, Scalar::parse(f, tok));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        std::string tok;
        if (row >> tok)
            throw ParseError("line " + std::to_string(line_no) + ": more than " +
                             std::to_string(k) + " entries");
    }
    return m;
}

inline Mat parse_matrix(const std::string& text) {
    std::istringstream is(text);
    int line_no = 0;
    return parse_matrix(is, line_no);
}

// ---- vector helpers used throughout ----

inline std::vector<Scalar> zero_vector(const FieldSpec& f, int n) {
    return std::vector<Scalar>(size_t(n), zero(f));
}

inline std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& x) {
    if (int(x.size()) != a.cols()) throw ShapeError("mat_vec dimension mismatch");
    std::vector<Scalar> y;
    y.reserve(a.rows());
    for (int i = 1; i <= a.rows(); ++i) {
        Scalar s = zero(a.field());
        for (int j = 1; j <= a.cols(); ++j) s += a(i, j) * x[j - 1];
        y.push_back(std::move(s));
    }
    return y;
}

inline std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Mat& a) {
    if (int(x.size()) != a.rows()) throw ShapeError("vec_mat dimension mismatch");
    std::vector<Scalar> y;
    y.reserve(a.cols());
    for (int j = 1; j <= a.cols(); ++j) {
        Scalar s = zero(a.field());
        for (int i = 1; i <= a.rows(); ++i) s += x[i - 1] * a(i, j);
        y.push_back(std::move(s));
    }
    return y;
}

inline bool is_zero_vector(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline Mat column_matrix(const FieldSpec& f, const std::vector<Scalar>& v) {
    Mat m(f, int(v.size()), 1);
    for (int i = 1; i <= int(v.size()); ++i) m.set(i, 1, v[i - 1]);
    return m;
}

inline Mat row_matrix(const FieldSpec& f, const std::vector<Scalar>& v) {
    Mat m(f, 1, int(v.size()));
    for (int j = 1; j <= int(v.size()); ++j) m.set(1, j, v[j - 1]);
    return m;
}

} // namespace cullis
