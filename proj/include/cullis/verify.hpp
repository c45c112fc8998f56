#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cullis/det.hpp"
#include "cullis/linvar.hpp"
#include "cullis/parallel.hpp"
#include "cullis/report.hpp"
#include "cullis/rng.hpp"

namespace cullis::verify {

// ---- spaces of matrices given by row relations ----

// Reshapes a point of F^{[n]x[k]} (row-major ground order) into the matrix
// it denotes.
inline Mat point_to_matrix(const CoordinateSpace& sp, const std::vector<Scalar>& point) {
    int n = 0, k = 0;
    if (!sp.is_grid(n, k)) throw ShapeError("matrix coordinate space required");
    Mat m(sp.field, n, k);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) m.set(i, j, point[size_t((i - 1) * k + (j - 1))]);
    return m;
}

// {X : sum_i (-1)^i X[i|) = 0}, one constraint per column; codim k.
inline LinearVariety alt_row_sum_space(int n, int k, const FieldSpec& f) {
    if (n < 1 || k < 1) throw ShapeError("alt_row_sum_space needs n, k >= 1");
    CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
    Mat a(f, k, n * k);
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= n; ++i)
            a.set(j, (i - 1) * k + j, sign_scalar(f, i % 2 == 0 ? 1 : -1));
    auto v = variety_from_constraints(ConstraintSystem(sp, std::move(a), zero_vector(f, k)));
    return *v;
}

// K_z = {X : z^t X = 0}; codim k when z != 0.
inline LinearVariety row_relation_variety(const std::vector<Scalar>& z, int k) {
    int n = int(z.size());
    if (n < 1 || k < 1) throw ShapeError("row relation needs n, k >= 1");
    const FieldSpec& f = z[0].field();
    CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
    Mat a(f, k, n * k);
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= n; ++i) a.set(j, (i - 1) * k + j, z[size_t(i - 1)]);
    auto v = variety_from_constraints(ConstraintSystem(sp, std::move(a), zero_vector(f, k)));
    return *v;
}

// det_{n,k} vanishes at every point of K. Stops at the first nonzero
// determinant; `witness_out`, when given, receives that point.
inline bool annihilates_det(const LinearVariety& k, uint64_t cap = uint64_t{1} << 24,
                            std::vector<Scalar>* witness_out = nullptr) {
    bool all_zero = true;
    for_each_point(
        k,
        [&](const std::vector<Scalar>& p) {
            Mat x = point_to_matrix(k.space(), p);
            if (!det_minor_sum(x).is_zero()) {
                all_zero = false;
                if (witness_out) *witness_out = p;
                return false;
            }
            return true;
        },
        cap);
    return all_zero;
}

// ---- the z-condition of the row-relation lemma ----

struct ZCondition {
    bool lhs; // det vanishes on all of K_z (by enumeration)
    bool rhs; // 1 + sum_alpha z_{c(alpha)} (-1)^{alpha - c(alpha)} = 0 for all c without 1
};

inline ZCondition check_z_condition(const std::vector<Scalar>& z, int k,
                                    uint64_t cap = uint64_t{1} << 24) {
    int n = int(z.size());
    if (n < k) throw ShapeError("z-condition needs n >= k");
    const FieldSpec& f = z[0].field();
    if (!(z[0] == -one(f))) throw PreconditionError("z-condition needs z_1 = -1");
    if (!f.is_prime_field()) throw UnsupportedError("z-condition lhs needs a prime field");

    bool lhs = annihilates_det(row_relation_variety(z, k), cap);

    bool rhs = true;
    for_each_subset(n - 1, k, [&](const std::vector<int>& c_shift) {
        // subsets of {2,...,n} via a shift of subsets of [n-1]
        Scalar total = one(f);
        for (size_t a = 0; a < c_shift.size(); ++a) {
            int alpha = int(a) + 1;
            int ca = c_shift[a] + 1;
            Scalar term = z[size_t(ca - 1)];
            if ((alpha - ca) % 2 != 0) term = -term;
            total += term;
        }
        if (!total.is_zero()) {
            rhs = false;
            return false;
        }
        return true;
    });
    return ZCondition{lhs, rhs};
}

// ---- canonical enumeration of subspaces as RREF constraint matrices ----

// Number of codim-c subspaces of F_q^N, by the product formula.
inline mpz_class gaussian_binomial(int n, int c, uint32_t q) {
    if (c < 0 || c > n) return 0;
    mpz_class num = 1, den = 1, qz = q;
    for (int i = 0; i < c; ++i) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), unsigned(n - i));
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), unsigned(i + 1));
        den *= t - 1;
    }
    return num / den;
}

// Streams every full-rank c x N matrix in reduced row echelon form over F_q,
// i.e. one canonical equational representation per codim-c subspace of
// F_q^N. Pivot column sets advance in lexicographic order; for a fixed
// pivot set the free entries run through an odometer.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(int n, int c, const FieldSpec& f) : n_(n), c_(c), field_(f) {
        if (!f.is_prime_field()) throw UnsupportedError("subspace enumeration needs a prime field");
        if (c < 0 || c > n) throw ShapeError("codimension out of range");
        q_ = f.modulus();
        if (c_ > 0) {
            pivots_.resize(size_t(c_));
            for (int i = 0; i < c_; ++i) pivots_[size_t(i)] = i + 1;
            rebuild_free_slots();
        }
    }

    std::optional<Mat> next() {
        if (done_) return std::nullopt;
        if (c_ == 0) {
            done_ = true;
            return Mat(field_, 0, n_);
        }
        Mat m = materialize();
        advance();
        return m;
    }

  private:
    void rebuild_free_slots() {
        free_slots_.clear();
        for (int r = 0; r < c_; ++r)
            for (int j = pivots_[size_t(r)] + 1; j <= n_; ++j)
                if (!std::binary_search(pivots_.begin(), pivots_.end(), j))
                    free_slots_.push_back({r + 1, j});
        digits_.assign(free_slots_.size(), 0);
    }

    Mat materialize() const {
        Mat m(field_, c_, n_);
        for (int r = 1; r <= c_; ++r) m.set(r, pivots_[size_t(r - 1)], one(field_));
        for (size_t t = 0; t < free_slots_.size(); ++t)
            m.set(free_slots_[t].first, free_slots_[t].second,
                  Scalar::from_int(field_, (long long)digits_[t]));
        return m;
    }

    void advance() {
        // odometer over the free entries, last slot fastest
        for (size_t t = free_slots_.size(); t-- > 0;) {
            if (++digits_[t] < q_) return;
            digits_[t] = 0;
        }
        // next pivot combination in lex order
        int i = c_ - 1;
        while (i >= 0 && pivots_[size_t(i)] == n_ - (c_ - 1 - i)) --i;
        if (i < 0) {
            done_ = true;
            return;
        }
        ++pivots_[size_t(i)];
        for (int j = i + 1; j < c_; ++j) pivots_[size_t(j)] = pivots_[size_t(j - 1)] + 1;
        rebuild_free_slots();
    }

    int n_, c_;
    FieldSpec field_;
    uint32_t q_ = 0;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_slots_;
    std::vector<uint32_t> digits_;
    bool done_ = false;
};

// ---- annihilator sweeps ----

struct FoundAnnihilator {
    ConstraintSystem rep;
    int codim;
};

// Exhaustively enumerates all varieties with codim in [c_lo, c_hi] (RREF
// subspace representative x coset right-hand side) and returns those on
// which det_{n,k} vanishes identically.
inline std::vector<FoundAnnihilator> sweep_annihilators(int n, int k, const FieldSpec& f,
                                                        int c_lo, int c_hi, uint64_t cap,
                                                        uint64_t* cases_out = nullptr) {
    int big_n = n * k;
    CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
    uint32_t q = f.modulus();
    std::vector<FoundAnnihilator> found;
    uint64_t cases = 0;
    for (int c = c_lo; c <= c_hi; ++c) {
        uint64_t cosets = 1;
        for (int t = 0; t < c; ++t) cosets *= q;
        SubspaceEnumerator en(big_n, c, f);
        while (auto a = en.next()) {
            // one right-hand side per b in F_q^c covers every coset once
            for (uint64_t ci = 0; ci < cosets; ++ci) {
                std::vector<Scalar> b;
                b.reserve(size_t(c));
                uint64_t t = ci;
                for (int d = 0; d < c; ++d) {
                    b.push_back(Scalar::from_int(f, (long long)(t % q)));
                    t /= q;
                }
                auto v = variety_from_constraints(ConstraintSystem(sp, *a, std::move(b)));
                ++cases;
                // full-rank RREF systems are always consistent
                if (annihilates_det(*v, cap)) found.push_back(FoundAnnihilator{v->rep(), c});
            }
        }
    }
    if (cases_out) *cases_out = cases;
    return found;
}

enum class SweepMode { Exhaustive, Sampled };

inline std::string variety_text(const ConstraintSystem& cs) {
    std::ostringstream os;
    print_variety(os, cs);
    return os.str();
}

// ---- Theorem: codim(K) >= k for every annihilating variety ----
//
// Exhaustive mode sweeps every variety of codim < k (counts checked against
// the Gaussian binomials) and must find no annihilator. Sampled mode checks
// the unique codim-0 variety once, then `budget` random consistent systems
// with codim drawn from {1,...,k-1}.
inline Report verify_codim_bound(int n, int k, uint32_t q, SweepMode mode, uint64_t budget,
                                 uint64_t seed, int jobs = 1) {
    Stopwatch sw;
    FieldSpec f = FieldSpec::prime(q);
    int big_n = n * k;
    Report rep;
    rep.check = "codim-bound";
    rep.params = {{"n", std::to_string(n)},       {"k", std::to_string(k)},
                  {"q", std::to_string(q)},       {"mode", mode == SweepMode::Exhaustive ? "exhaustive" : "sampled"},
                  {"budget", std::to_string(budget)}, {"seed", std::to_string(seed)},
                  {"jobs", std::to_string(jobs)}};

    if (mode == SweepMode::Exhaustive) {
        // worst-case point count if no early exit ever fired
        mpz_class total = 0;
        for (int c = 0; c < k; ++c) {
            mpz_class pts;
            mpz_ui_pow_ui(pts.get_mpz_t(), q, unsigned(big_n));
            total += gaussian_binomial(big_n, c, q) * pts;
        }
        if (total > budget) {
            rep.notes.push_back("exhaustive sweep of " + total.get_str() +
                                " worst-case points exceeds budget; fell back to sampled mode");
            mode = SweepMode::Sampled;
        }
    }

    if (mode == SweepMode::Exhaustive) {
        uint64_t cases = 0;
        auto found = sweep_annihilators(n, k, f, 0, k - 1, uint64_t{1} << 32, &cases);
        rep.cases = cases;
        for (const auto& fa : found)
            rep.counterexamples.push_back(
                Counterexample{"codim" + std::to_string(fa.codim) + "/" + variety_text(fa.rep),
                               {{"variety", variety_text(fa.rep)},
                                {"codim", std::to_string(fa.codim)}}});
    } else {
        CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
        // the single codim-0 variety, once
        std::vector<Scalar> w;
        if (annihilates_det(whole_space(sp), uint64_t{1} << 32))
            rep.counterexamples.push_back(Counterexample{"codim0/full-space", {{"variety", "full space"}}});
        rep.cases = 1;
        if (budget > 10'000'000) throw SizeCapError("sampled budget capped at 1e7 varieties");
        if (k >= 2) {
            Rng base = Rng::with_base(seed);
            std::vector<uint8_t> bad(budget, 0);
            std::vector<std::string> bad_text(budget);
            parallel_for(budget, jobs, [&](uint64_t i) {
                Rng rng = base.fork(i);
                int c = 1 + int(rng.below(uint64_t(k - 1)));
                while (true) {
                    Mat a = random_matrix(rng, f, c, big_n);
                    std::vector<Scalar> b = random_vector(rng, f, c);
                    auto v = variety_from_constraints(ConstraintSystem(sp, std::move(a), std::move(b)));
                    if (!v) continue; // inconsistent draw, resample
                    if (annihilates_det(*v, uint64_t{1} << 32)) {
                        bad[i] = 1;
                        bad_text[i] = variety_text(v->rep());
                    }
                    return;
                }
            });
            rep.cases += budget;
            for (uint64_t i = 0; i < budget; ++i)
                if (bad[i])
                    rep.counterexamples.push_back(Counterexample{
                        "sample" + std::to_string(i),
                        {{"variety", bad_text[i]}, {"sample", std::to_string(i)}}});
        }
    }
    rep.sort_counterexamples();
    rep.wall_seconds = sw.seconds();
    return rep;
}

// ---- Theorem: for n >= k+2, the codim-k annihilators are exactly the
// alternating-row-sum space, and only for odd k ----

inline std::string canonical_variety_key(const ConstraintSystem& cs) {
    Mat aug = Mat::hstack(cs.a, column_matrix(cs.space.field, cs.b));
    return matrix_to_string(rref(aug).matrix);
}

inline Report verify_characterization(int n, int k, uint32_t q, uint64_t budget, int jobs = 1) {
    if (n < k + 2) throw PreconditionError("characterization needs n >= k + 2");
    Stopwatch sw;
    FieldSpec f = FieldSpec::prime(q);
    Report rep;
    rep.check = "characterization";
    rep.params = {{"n", std::to_string(n)},
                  {"k", std::to_string(k)},
                  {"q", std::to_string(q)},
                  {"budget", std::to_string(budget)},
                  {"jobs", std::to_string(jobs)}};

    LinearVariety alt = alt_row_sum_space(n, k, f);

    if (k % 2 == 1) {
        // sufficiency: every point of the alternating space annihilates
        std::vector<Scalar> w;
        if (!annihilates_det(alt, uint64_t{1} << 32, &w)) {
            rep.counterexamples.push_back(Counterexample{
                "sufficiency",
                {{"point", matrix_to_string(point_to_matrix(alt.space(), w))}}});
        }
        uint64_t pts = 1;
        for (int i = 0; i < alt.dim(); ++i) pts *= q;
        rep.cases += pts;
        rep.notes.push_back("sufficiency: checked det = 0 at all " + std::to_string(pts) +
                            " points of the alternating-row-sum space");
    } else {
        // k even: the alternating space must NOT annihilate
        std::vector<Scalar> w;
        if (annihilates_det(alt, uint64_t{1} << 32, &w)) {
            rep.counterexamples.push_back(
                Counterexample{"k-even-alt-annihilates", {{"space", "alt_row_sum_space"}}});
        } else {
            rep.notes.push_back("k even: alternating-row-sum space has a det != 0 witness:\n" +
                                matrix_to_string(point_to_matrix(alt.space(), w)));
        }
        rep.cases += 1;
    }

    // z-sweep: among all z != 0, exactly the scalar multiples of the
    // alternating z annihilate K_z, and only for odd k. Each z is verified
    // both by direct enumeration and through the SCS-normalized z-condition.
    {
        uint64_t zcount = 1;
        for (int i = 0; i < n; ++i) zcount *= q;
        std::vector<uint8_t> mismatch(zcount, 0);
        std::vector<uint8_t> annihilating(zcount, 0);
        parallel_for(zcount, jobs, [&](uint64_t idx) {
            if (idx == 0) return; // z = 0
            std::vector<Scalar> z;
            uint64_t t = idx;
            for (int i = 0; i < n; ++i) {
                z.push_back(Scalar::from_int(f, (long long)(t % q)));
                t /= q;
            }
            bool direct = annihilates_det(row_relation_variety(z, k), uint64_t{1} << 32);
            // normalize via the SCS transport so the lemma applies
            int i0 = 0;
            for (int i = 1; i <= n; ++i)
                if (!z[size_t(i - 1)].is_zero()) {
                    i0 = i;
                    break;
                }
            std::vector<Scalar> zn = scs_transport_z(z, i0, n, k);
            Scalar lambda = -zn[0].inverse();
            for (auto& v : zn) v *= lambda;
            bool rhs = check_z_condition(zn, k).rhs;
            // expected: z is a nonzero multiple of ((-1)^i)_i and k is odd
            bool is_alt = false;
            {
                Scalar base = -z[0]; // candidate lambda with z_i = lambda (-1)^i
                if (!base.is_zero()) {
                    is_alt = true;
                    for (int i = 1; i <= n; ++i) {
                        Scalar want = i % 2 == 0 ? base : -base;
                        if (!(z[size_t(i - 1)] == want)) {
                            is_alt = false;
                            break;
                        }
                    }
                }
            }
            bool expected = (k % 2 == 1) && is_alt;
            annihilating[idx] = direct ? 1 : 0;
            if (direct != expected || rhs != direct) mismatch[idx] = 1;
        });
        uint64_t nann = 0;
        for (uint64_t i = 1; i < zcount; ++i) {
            if (annihilating[i]) ++nann;
            if (mismatch[i])
                rep.counterexamples.push_back(
                    Counterexample{"z-sweep/" + std::to_string(i), {{"z_index", std::to_string(i)}}});
        }
        rep.cases += zcount - 1;
        rep.notes.push_back("z-sweep: " + std::to_string(nann) + " of " +
                            std::to_string(zcount - 1) + " nonzero z annihilate K_z (expected " +
                            std::to_string(k % 2 == 1 ? q - 1 : 0) + ")");
    }

    // full uniqueness by exhaustive codim-k sweep, when the budget allows
    mpz_class sweep_cost;
    {
        mpz_class pts;
        mpz_ui_pow_ui(pts.get_mpz_t(), q, unsigned(n * k));
        sweep_cost = gaussian_binomial(n * k, k, q) * pts;
    }
    if (sweep_cost <= budget) {
        uint64_t cases = 0;
        auto found = sweep_annihilators(n, k, f, k, k, uint64_t{1} << 32, &cases);
        rep.cases += cases;
        if (k % 2 == 1) {
            std::string alt_key = canonical_variety_key(alt.rep());
            if (found.size() != 1)
                rep.counterexamples.push_back(Counterexample{
                    "uniqueness/count",
                    {{"found", std::to_string(found.size())}, {"expected", "1"}}});
            for (const auto& fa : found)
                if (canonical_variety_key(fa.rep) != alt_key)
                    rep.counterexamples.push_back(Counterexample{
                        "uniqueness/" + variety_text(fa.rep), {{"variety", variety_text(fa.rep)}}});
            rep.notes.push_back("uniqueness: exhaustive codim-" + std::to_string(k) + " sweep over " +
                                std::to_string(cases) + " varieties found " +
                                std::to_string(found.size()) + " annihilator(s)");
        } else {
            if (!found.empty())
                rep.counterexamples.push_back(Counterexample{
                    "k-even/codim-k-annihilator", {{"found", std::to_string(found.size())}}});
            rep.notes.push_back("k even: exhaustive codim-" + std::to_string(k) +
                                " sweep found no annihilating variety, as the theorem requires");
            // observed minimal annihilating codimension (open question; reported, not asserted)
            for (int c = k + 1; c <= n * k; ++c) {
                mpz_class cost;
                mpz_class pts;
                mpz_ui_pow_ui(pts.get_mpz_t(), q, unsigned(n * k));
                cost = gaussian_binomial(n * k, c, q) * pts;
                if (cost > budget) {
                    rep.notes.push_back("minimal annihilating codim probe stopped before codim " +
                                        std::to_string(c) + " (budget)");
                    break;
                }
                uint64_t cases2 = 0;
                auto found2 = sweep_annihilators(n, k, f, c, c, uint64_t{1} << 32, &cases2);
                rep.cases += cases2;
                if (!found2.empty()) {
                    rep.notes.push_back("observed minimal annihilating codimension: " +
                                        std::to_string(c) + " (" + std::to_string(found2.size()) +
                                        " varieties)");
                    break;
                }
            }
        }
    } else {
        rep.notes.push_back("full uniqueness sweep needs " + sweep_cost.get_str() +
                            " worst-case points, beyond budget; the z-sweep above stands in "
                            "(maximal annihilators reduce to row relations)");
    }

    rep.sort_counterexamples();
    rep.wall_seconds = sw.seconds();
    return rep;
}

// ---- z-condition lemma, exhaustively over admissible z ----

inline Report verify_z_condition(int n, int k, uint32_t q, int jobs = 1) {
    Stopwatch sw;
    FieldSpec f = FieldSpec::prime(q);
    Report rep;
    rep.check = "z-condition";
    rep.params = {{"n", std::to_string(n)},
                  {"k", std::to_string(k)},
                  {"q", std::to_string(q)},
                  {"jobs", std::to_string(jobs)}};
    uint64_t count = 1;
    for (int i = 0; i < n - 1; ++i) count *= q;
    std::vector<uint8_t> mismatch(count, 0);
    parallel_for(count, jobs, [&](uint64_t idx) {
        std::vector<Scalar> z;
        z.push_back(-one(f));
        uint64_t t = idx;
        for (int i = 1; i < n; ++i) {
            z.push_back(Scalar::from_int(f, (long long)(t % q)));
            t /= q;
        }
        ZCondition zc = check_z_condition(z, k, uint64_t{1} << 32);
        if (zc.lhs != zc.rhs) mismatch[idx] = 1;
    });
    rep.cases = count;
    for (uint64_t i = 0; i < count; ++i)
        if (mismatch[i])
            rep.counterexamples.push_back(
                Counterexample{"z" + std::to_string(i), {{"z_index", std::to_string(i)}}});
    rep.sort_counterexamples();
    rep.wall_seconds = sw.seconds();
    return rep;
}

} // namespace cullis::verify
