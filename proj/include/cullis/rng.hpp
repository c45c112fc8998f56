#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cullis/matrix.hpp"

namespace cullis {

// Seeded generator with rejection-sampled bounded draws, so sampled-mode
// output depends on the seed only (not on the standard library's
// distribution internals).
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + (long long)below(uint64_t(hi - lo + 1));
    }

    // Derives an independent stream for case number i; used by parallel
    // sweeps so results do not depend on the job count.
    Rng fork(uint64_t i) const {
        uint64_t s = seed_mix_;
        s ^= 0x9e3779b97f4a7c15ull + i + (s << 6) + (s >> 2);
        return Rng(s ^ (i * 0xbf58476d1ce4e5b9ull));
    }

    static Rng with_base(uint64_t seed) {
        Rng r(seed);
        r.seed_mix_ = seed;
        return r;
    }

  private:
    std::mt19937_64 eng_;
    uint64_t seed_mix_ = 0;
};

inline Scalar random_scalar(Rng& rng, const FieldSpec& f, int lo = -9, int hi = 9) {
    if (f.is_prime_field()) return Scalar::from_int(f, (long long)rng.below(f.modulus()));
    return Scalar::from_int(f, rng.range(lo, hi));
}

inline Mat random_matrix(Rng& rng, const FieldSpec& f, int rows, int cols, int lo = -9,
                         int hi = 9) {
    Mat m(f, rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) m.set(i, j, random_scalar(rng, f, lo, hi));
    return m;
}

inline std::vector<Scalar> random_vector(Rng& rng, const FieldSpec& f, int n, int lo = -9,
                                         int hi = 9) {
    std::vector<Scalar> v;
    v.reserve(size_t(n));
    for (int i = 0; i < n; ++i) v.push_back(random_scalar(rng, f, lo, hi));
    return v;
}

} // namespace cullis
