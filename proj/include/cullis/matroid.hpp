#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cullis/combin.hpp"
#include "cullis/linalg.hpp"

namespace cullis {

// Ground-set element: a plain 1-based index, or a matrix cell (i,j).
struct Label {
    int32_t a = 0;
    int32_t b = 0; // 0 for plain indices; >= 1 for cells

    static Label index(int i) { return Label{i, 0}; }
    static Label cell(int i, int j) { return Label{i, j}; }

    bool is_cell() const { return b != 0; }

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;

    std::string to_string() const {
        if (!is_cell()) return std::to_string(a);
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

// Ordered list of distinct labels; the order fixes the bit positions of all
// subset masks and the canonical enumeration order.
class GroundSet {
  public:
    GroundSet() = default;

    explicit GroundSet(std::vector<Label> elems) : elems_(std::move(elems)) {
        for (size_t i = 0; i < elems_.size(); ++i) {
            if (pos_.count(elems_[i])) throw Error("duplicate ground-set label");
            pos_.emplace(elems_[i], i);
        }
    }

    static GroundSet range(int n) {
        std::vector<Label> e;
        e.reserve(size_t(n));
        for (int i = 1; i <= n; ++i) e.push_back(Label::index(i));
        return GroundSet(std::move(e));
    }

    // [n] x [k] in row-major order: (1,1),(1,2),...,(n,k).
    static GroundSet grid(int n, int k) {
        std::vector<Label> e;
        e.reserve(size_t(n) * size_t(k));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= k; ++j) e.push_back(Label::cell(i, j));
        return GroundSet(std::move(e));
    }

    size_t size() const { return elems_.size(); }
    const std::vector<Label>& elements() const { return elems_; }
    const Label& at(size_t pos) const { return elems_.at(pos); }

    bool contains(const Label& l) const { return pos_.count(l) != 0; }

    size_t position(const Label& l) const {
        auto it = pos_.find(l);
        if (it == pos_.end()) throw BoundsError("label " + l.to_string() + " not in ground set");
        return it->second;
    }

    uint64_t mask_of(const std::vector<Label>& labels) const {
        uint64_t m = 0;
        for (const auto& l : labels) m |= uint64_t{1} << position(l);
        return m;
    }

    std::vector<Label> labels_of(uint64_t mask) const {
        std::vector<Label> out;
        for (size_t i = 0; i < elems_.size(); ++i)
            if (mask >> i & 1) out.push_back(elems_[i]);
        return out;
    }

    uint64_t full_mask() const {
        return elems_.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << elems_.size()) - 1;
    }

    bool operator==(const GroundSet& o) const { return elems_ == o.elems_; }

  private:
    std::vector<Label> elems_;
    std::map<Label, size_t> pos_;
};

// A matroid as a rank oracle over a ground set of at most 63 elements.
// Values are immutable and cheap to copy; the memo cache behind the oracle
// is mutex-protected, so concurrent queries are fine.
class Matroid {
  public:
    using RankFn = std::function<int(uint64_t)>;

    Matroid(GroundSet ground, RankFn rank_fn)
        : impl_(std::make_shared<Impl>(std::move(ground), std::move(rank_fn))) {
        if (impl_->ground.size() > 63) throw SizeCapError("ground sets are capped at 63 elements");
        impl_->full_rank = rank(impl_->ground.full_mask());
    }

    const GroundSet& ground() const { return impl_->ground; }
    size_t ground_size() const { return impl_->ground.size(); }

    int rank(uint64_t subset_mask) const {
        if ((subset_mask & ~impl_->ground.full_mask()) != 0)
            throw BoundsError("subset mask outside ground set");
        {
            std::lock_guard<std::mutex> lock(impl_->mu);
            auto it = impl_->memo.find(subset_mask);
            if (it != impl_->memo.end()) return it->second;
        }
        int r = impl_->rank_fn(subset_mask);
        std::lock_guard<std::mutex> lock(impl_->mu);
        impl_->memo.emplace(subset_mask, r);
        return r;
    }

    int rank(const std::vector<Label>& labels) const { return rank(ground().mask_of(labels)); }

    int full_rank() const { return impl_->full_rank; }

    bool is_independent(uint64_t subset_mask) const {
        return rank(subset_mask) == __builtin_popcountll(subset_mask);
    }
    bool is_independent(const std::vector<Label>& labels) const {
        return is_independent(ground().mask_of(labels));
    }

    // r*(X) = |X| + r(E \ X) - r(E)
    Matroid dual() const {
        Matroid parent = *this;
        uint64_t full = ground().full_mask();
        int full_rank = this->full_rank();
        return Matroid(ground(), [parent, full, full_rank](uint64_t x) {
            return __builtin_popcountll(x) + parent.rank(full & ~x) - full_rank;
        });
    }

    Matroid restrict_to(uint64_t s_mask) const {
        Matroid parent = *this;
        GroundSet sub(ground().labels_of(s_mask));
        std::vector<size_t> embed; // position in sub -> position in parent
        for (const auto& l : sub.elements()) embed.push_back(ground().position(l));
        return Matroid(std::move(sub), [parent, embed](uint64_t x) {
            uint64_t px = 0;
            for (size_t i = 0; i < embed.size(); ++i)
                if (x >> i & 1) px |= uint64_t{1} << embed[i];
            return parent.rank(px);
        });
    }
    Matroid restrict_to(const std::vector<Label>& labels) const {
        return restrict_to(ground().mask_of(labels));
    }

    // r_{M/T}(X) = r_M(X u T) - r_M(T)
    Matroid contract(uint64_t t_mask) const {
        if ((t_mask & ~ground().full_mask()) != 0)
            throw BoundsError("contraction set outside ground set");
        Matroid parent = *this;
        GroundSet sub(ground().labels_of(ground().full_mask() & ~t_mask));
        std::vector<size_t> embed;
        for (const auto& l : sub.elements()) embed.push_back(ground().position(l));
        int rt = rank(t_mask);
        return Matroid(std::move(sub), [parent, embed, t_mask, rt](uint64_t x) {
            uint64_t px = t_mask;
            for (size_t i = 0; i < embed.size(); ++i)
                if (x >> i & 1) px |= uint64_t{1} << embed[i];
            return parent.rank(px) - rt;
        });
    }
    Matroid contract(const std::vector<Label>& labels) const {
        return contract(ground().mask_of(labels));
    }

    // All bases (maximal independent sets) as masks, ascending. The ground
    // size is capped because this walks binom(|E|, r) subsets.
    std::vector<uint64_t> bases(size_t cap = 20) const {
        if (ground_size() > cap)
            throw SizeCapError("basis enumeration on " + std::to_string(ground_size()) +
                               " elements exceeds cap " + std::to_string(cap));
        std::vector<uint64_t> out;
        int r = full_rank();
        for_each_mask_of_size(int(ground_size()), r, [&](uint64_t m) {
            if (is_independent(m)) out.push_back(m);
            return true;
        });
        return out;
    }

    // Cobases = bases of the dual = complements of bases.
    std::vector<uint64_t> cobases(size_t cap = 20) const { return dual().bases(cap); }

  private:
    struct Impl {
        Impl(GroundSet g, RankFn f) : ground(std::move(g)), rank_fn(std::move(f)) {}
        GroundSet ground;
        RankFn rank_fn;
        int full_rank = 0;
        mutable std::mutex mu;
        mutable std::unordered_map<uint64_t, int> memo;
    };

    std::shared_ptr<Impl> impl_;
};

struct VectorMatroidSource {
    Mat matrix;
    GroundSet column_labels;

    VectorMatroidSource(Mat m, GroundSet labels)
        : matrix(std::move(m)), column_labels(std::move(labels)) {
        if (column_labels.size() != size_t(matrix.cols()))
            throw ShapeError("one column label per matrix column required");
    }
};

// M[A]: independence of a set of column labels = linear independence of the
// labelled columns.
inline Matroid vector_matroid(const VectorMatroidSource& src) {
    Mat a = src.matrix;
    return Matroid(src.column_labels, [a](uint64_t x) {
        std::vector<int> cols;
        for (int j = 0; j < a.cols(); ++j)
            if (x >> j & 1) cols.push_back(j + 1);
        if (cols.empty()) return 0;
        return rank(submatrix_keep(a, IndexSet::all(), IndexSet(cols)));
    });
}

inline Matroid vector_matroid(const Mat& a) {
    return vector_matroid(VectorMatroidSource(a, GroundSet::range(a.cols())));
}

} // namespace cullis
