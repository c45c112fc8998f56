#pragma once

#include <cstdint>
#include <vector>

#include "cullis/errors.hpp"

namespace cullis {

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

inline uint64_t falling_factorial(int n, int k) {
    uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= uint64_t(n - i);
    return r;
}

// Visits all k-subsets of [n] as strictly increasing 1-based vectors, in
// lexicographic order. f returns false to stop early; the function returns
// false iff stopped.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return true;
    std::vector<int> c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) c[size_t(i)] = i + 1;
    while (true) {
        if (!f(static_cast<const std::vector<int>&>(c))) return false;
        int i = k - 1;
        while (i >= 0 && c[size_t(i)] == n - (k - 1 - i)) --i;
        if (i < 0) return true;
        ++c[size_t(i)];
        for (int j = i + 1; j < k; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
    }
}

// Visits all injections [k] -> [n] as 1-based tuples (sigma(1),...,sigma(k)),
// in lexicographic tuple order.
template <typename F>
bool for_each_injection(int n, int k, F&& f) {
    if (k < 0 || k > n) return true;
    std::vector<int> sigma(size_t(k), 0);
    std::vector<bool> used(size_t(n) + 1, false);
    int depth = 0;
    while (depth >= 0) {
        if (depth == k) {
            if (!f(static_cast<const std::vector<int>&>(sigma))) return false;
            --depth;
            continue;
        }
        int start = sigma[size_t(depth)] + 1;
        if (sigma[size_t(depth)] != 0) used[size_t(sigma[size_t(depth)])] = false;
        int next = 0;
        for (int v = start; v <= n; ++v)
            if (!used[size_t(v)]) {
                next = v;
                break;
            }
        if (next == 0) {
            sigma[size_t(depth)] = 0;
            --depth;
            continue;
        }
        sigma[size_t(depth)] = next;
        used[size_t(next)] = true;
        ++depth;
        if (depth < k) sigma[size_t(depth)] = 0;
    }
    return true;
}

// Sign of the permutation sorting `tuple` (entries distinct): counts
// inversions; O(k^2) is fine at the sizes used here.
inline int sorting_permutation_sign(const std::vector<int>& tuple) {
    int inversions = 0;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// All subsets of [n] as bitmasks with a given popcount, ascending (Gosper).
template <typename F>
bool for_each_mask_of_size(int n, int k, F&& f) {
    if (k < 0 || k > n) return true;
    if (k == 0) return f(uint64_t{0});
    uint64_t limit = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t m = (uint64_t{1} << k) - 1;
    while (m <= limit) {
        if (!f(uint64_t{m})) return false;
        uint64_t c = m & (~m + 1);
        uint64_t r = m + c;
        if (r > limit || r < m) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return true;
}

} // namespace cullis
