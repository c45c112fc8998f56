#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "cullis/det.hpp"
#include "cullis/rng.hpp"

namespace cullis {

struct BenchRow {
    int n;
    int k;
    std::string field;
    std::string algo;
    int reps;
    uint64_t total_ns;

    double ns_per_call() const { return reps == 0 ? 0.0 : double(total_ns) / double(reps); }
};

inline constexpr const char* kBenchCsvHeader = "n,k,field,algo,reps,total_ns,ns_per_call";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << kBenchCsvHeader << '\n';
    for (const auto& r : rows)
        os << r.n << ',' << r.k << ',' << r.field << ',' << r.algo << ',' << r.reps << ','
           << r.total_ns << ',' << (uint64_t)r.ns_per_call() << '\n';
}

// Times the three determinant algorithms on the same random inputs. Rows
// come out in a fixed order (injection-sum, minor-sum, laplace per shape),
// so the CSV layout is stable; only the timing numbers vary between runs.
inline std::vector<BenchRow> run_bench(const std::vector<std::pair<int, int>>& shapes,
                                       const FieldSpec& f, int reps, uint64_t seed) {
    std::vector<BenchRow> rows;
    Rng rng = Rng::with_base(seed);
    for (auto [n, k] : shapes) {
        if (n < k) throw ShapeError("bench shapes need n >= k");
        std::vector<Mat> inputs;
        inputs.reserve(size_t(reps));
        for (int r = 0; r < reps; ++r) inputs.push_back(random_matrix(rng, f, n, k));

        auto time_algo = [&](const char* name, auto&& fn) {
            Scalar sink = zero(f);
            auto t0 = std::chrono::steady_clock::now();
            for (const Mat& x : inputs) sink += fn(x);
            auto t1 = std::chrono::steady_clock::now();
            uint64_t ns = uint64_t(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
            // keep the accumulated value alive so the loop cannot be elided
            if (sink.field() != f) throw Error("unreachable");
            rows.push_back(BenchRow{n, k, f.to_string(), name, reps, ns});
        };
        time_algo("injection-sum", [](const Mat& x) { return det_injection_sum(x); });
        time_algo("minor-sum", [](const Mat& x) { return det_minor_sum(x); });
        time_algo("laplace", [](const Mat& x) { return det_laplace(x); });
    }
    return rows;
}

} // namespace cullis
