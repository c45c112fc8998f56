#pragma once

#include "cullis/verify.hpp"

namespace cullis::verify {

// ---- helpers shared by the lemma checks and the acceptance suite ----

// Rank function of M(K) straight from its definition: the rank of X is the
// dimension of the span of the coordinate functionals restricted to the
// direction space, i.e. the row rank of the X-rows of a direction-basis
// matrix. This is the independent route against which the production
// dual-vector-matroid route is checked.
inline int definitional_variety_rank(const LinearVariety& k, uint64_t subset_mask) {
    auto basis = k.direction_basis();
    int dim = int(basis.size());
    int n = int(k.space().ground.size());
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
        if (subset_mask >> i & 1) rows.push_back(i + 1);
    if (rows.empty() || dim == 0) return 0;
    Mat d(k.field(), n, dim);
    for (int c = 1; c <= dim; ++c)
        for (int i = 1; i <= n; ++i) d.set(i, c, basis[size_t(c - 1)][size_t(i - 1)]);
    return rank(submatrix_keep(d, IndexSet(rows), IndexSet::all()));
}

inline bool equal_rank_oracles(const Matroid& a, const Matroid& b) {
    if (!(a.ground() == b.ground())) return false;
    uint64_t full = a.ground().full_mask();
    for (uint64_t x = 0; x <= full; ++x)
        if (a.rank(x) != b.rank(x)) return false;
    return true;
}

inline LinearVariety random_consistent_system(Rng& rng, const CoordinateSpace& sp, int rows) {
    while (true) {
        Mat a = random_matrix(rng, sp.field, rows, int(sp.ground.size()));
        std::vector<Scalar> b = random_vector(rng, sp.field, rows);
        auto v = variety_from_constraints(ConstraintSystem(sp, std::move(a), std::move(b)));
        if (v) return *v;
    }
}

inline Mat random_invertible(Rng& rng, const FieldSpec& f, int n) {
    while (true) {
        Mat c = random_matrix(rng, f, n, n);
        if (!square_det(c).is_zero()) return c;
    }
}

// A matrix with det_{n,k} = 0 by construction: a column is a combination of
// the others for k >= 2; for k = 1 a point of the k = 1 annihilating space.
inline Mat random_det_zero_matrix(Rng& rng, const FieldSpec& f, int n, int k) {
    if (k >= 2) {
        Mat x = random_matrix(rng, f, n, k);
        std::vector<Scalar> combo = zero_vector(f, n);
        for (int j = 1; j < k; ++j) {
            Scalar c = random_scalar(rng, f);
            for (int i = 1; i <= n; ++i) combo[size_t(i - 1)] += c * x(i, j);
        }
        x.set_col(k, combo);
        return x;
    }
    // det_{n,1}(X) = sum (-1)^{i-1} x_{i,1}; sample its kernel
    Mat z(f, 1, n);
    for (int i = 1; i <= n; ++i) z.set(1, i, sign_scalar(f, i % 2 == 1 ? 1 : -1));
    auto basis = nullspace_basis(z);
    std::vector<Scalar> col = zero_vector(f, n);
    for (const auto& v : basis) {
        Scalar c = random_scalar(rng, f);
        for (int i = 0; i < n; ++i) col[size_t(i)] += c * v[size_t(i)];
    }
    Mat x(f, n, 1);
    x.set_col(1, col);
    return x;
}

// ---- the registered lemma suite ----

namespace detail {

struct SuiteContext {
    Report* rep = nullptr;
    std::string current;
    uint64_t cases = 0;
    uint64_t local_cases = 0;
    bool current_ok = true;

    void begin(const std::string& name) {
        current = name;
        local_cases = 0;
        current_ok = true;
    }
    void finish(const std::string& extra = "") {
        rep->notes.push_back(current + ": " + (current_ok ? "pass" : "FAIL") + " (cases=" +
                             std::to_string(local_cases) + ")" + (extra.empty() ? "" : "; " + extra));
        rep->cases += local_cases;
    }
    void case_done() { ++local_cases; }
    void fail(const std::string& key, std::map<std::string, std::string> data) {
        current_ok = false;
        data.emplace("lemma", current);
        rep->counterexamples.push_back(Counterexample{current + "/" + key, std::move(data)});
    }
};

inline std::vector<Scalar> alternating_z(const FieldSpec& f, int n) {
    std::vector<Scalar> z;
    for (int i = 1; i <= n; ++i) z.push_back(sign_scalar(f, i % 2 == 0 ? 1 : -1));
    return z;
}

} // namespace detail

// Runs every registered lemma check at its configured size and reports
// pass/fail per lemma with reproduction data for any failure.
inline Report verify_lemma_suite(uint64_t seed, int jobs = 1) {
    (void)jobs; // the suite is seconds-fast; sweeps stay sequential and deterministic
    Stopwatch sw;
    Report rep;
    rep.check = "lemma-suite";
    rep.params = {{"seed", std::to_string(seed)},
                  {"sizes",
                   "det n<=5; matroid |E|<=6; varieties |E|<=5; matrix grounds 3x2, 3x3, 5x3"}};
    detail::SuiteContext cx{&rep};
    Rng root = Rng::with_base(seed);

    std::vector<FieldSpec> small_fields = {FieldSpec::prime(2), FieldSpec::prime(3)};
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec fq = FieldSpec::rationals();

    // three-way determinant agreement
    {
        cx.begin("three-way-det-agreement");
        Rng rng = root.fork(1);
        for (const FieldSpec& f : {f5, fq})
            for (int n = 1; n <= 4; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int t = 0; t < 10; ++t) {
                        Mat x = random_matrix(rng, f, n, k);
                        Scalar a = det_injection_sum(x), b = det_minor_sum(x);
                        bool ok = a == b;
                        for (int col = 1; col <= k && ok; ++col) ok = det_laplace(x, col) == a;
                        if (!ok)
                            cx.fail("n" + std::to_string(n) + "k" + std::to_string(k) + "t" +
                                        std::to_string(t),
                                    {{"matrix", matrix_to_string(x)}});
                        cx.case_done();
                    }
        cx.finish();
    }

    // ones-column reduction (det_{n,k+1}(X|1) vs parity of n+k)
    {
        cx.begin("ones-column");
        Rng rng = root.fork(2);
        for (const FieldSpec& f : {FieldSpec::prime(3), fq})
            for (int n = 2; n <= 5; ++n)
                for (int k = 1; k < n; ++k)
                    for (int t = 0; t < 5; ++t) {
                        Mat x = random_matrix(rng, f, n, k);
                        Scalar lhs = det_minor_sum(append_ones_column(x));
                        Scalar want = (n + k) % 2 != 0 ? det_minor_sum(x) : zero(f);
                        if (!(lhs == want))
                            cx.fail("n" + std::to_string(n) + "k" + std::to_string(k),
                                    {{"matrix", matrix_to_string(x)}});
                        cx.case_done();
                    }
        cx.finish();
    }

    // cyclic / semi-cyclic shift contracts, every i
    {
        cx.begin("shift-contracts");
        Rng rng = root.fork(3);
        for (const FieldSpec& f : {FieldSpec::prime(3), fq})
            for (int n = 1; n <= 5; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int i = 1; i <= n; ++i) {
                        Mat x = random_matrix(rng, f, n, k);
                        ShiftResult s = (n + k) % 2 != 0 ? cyclic_shift(x, i)
                                                         : semicyclic_shift(x, i);
                        Scalar lhs = sign_scalar(f, s.sign) * det_minor_sum(s.matrix);
                        if (!(lhs == det_minor_sum(x)))
                            cx.fail("n" + std::to_string(n) + "k" + std::to_string(k) + "i" +
                                        std::to_string(i),
                                    {{"matrix", matrix_to_string(x)}});
                        cx.case_done();
                    }
        cx.finish();
    }

    // SCS properties S2, S3, S4
    {
        cx.begin("scs-properties");
        Rng rng = root.fork(4);
        for (const FieldSpec& f : {FieldSpec::prime(3), fq})
            for (int n = 2; n <= 5; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int i0 = 1; i0 <= n; ++i0) {
                        // S2: transported kernel vectors still annihilate
                        std::vector<Scalar> z = random_vector(rng, f, n);
                        Mat zrow = row_matrix(f, z);
                        auto zbasis = nullspace_basis(zrow);
                        Mat x(f, n, k);
                        for (int j = 1; j <= k; ++j) {
                            std::vector<Scalar> col = zero_vector(f, n);
                            for (const auto& v : zbasis) {
                                Scalar c = random_scalar(rng, f);
                                for (int t = 0; t < n; ++t) col[size_t(t)] += c * v[size_t(t)];
                            }
                            x.set_col(j, col);
                        }
                        std::vector<Scalar> zt = scs_transport_z(z, i0, n, k);
                        if (!is_zero_vector(vec_mat(zt, scs_apply(x, i0))))
                            cx.fail("S2/n" + std::to_string(n) + "k" + std::to_string(k),
                                    {{"matrix", matrix_to_string(x)}});
                        cx.case_done();

                        // S3 via the exact sign identity on a random matrix,
                        // plus a det-zero instance
                        Mat y = random_matrix(rng, f, n, k);
                        int sign = (n + k) % 2 != 0 ? ((i0 + 1) * k % 2 == 0 ? 1 : -1)
                                                    : ((n - i0) * k % 2 == 0 ? 1 : -1);
                        if (!(det_minor_sum(scs_apply(y, i0)) ==
                              sign_scalar(f, sign) * det_minor_sum(y)))
                            cx.fail("S3-sign/n" + std::to_string(n) + "k" + std::to_string(k),
                                    {{"matrix", matrix_to_string(y)}});
                        Mat z0 = random_det_zero_matrix(rng, f, n, k);
                        if (!det_minor_sum(scs_apply(z0, i0)).is_zero())
                            cx.fail("S3-zero/n" + std::to_string(n) + "k" + std::to_string(k),
                                    {{"matrix", matrix_to_string(z0)}});
                        cx.case_done();

                        // S4 (k odd): ars(SCS(X)) = 0 implies ars(X) = 0
                        if (k % 2 == 1) {
                            Mat s = scs_row_matrix(f, n, k, i0);
                            std::vector<Scalar> zs = vec_mat(detail::alternating_z(f, n), s);
                            Mat zsrow = row_matrix(f, zs);
                            auto sbasis = nullspace_basis(zsrow);
                            Mat xs(f, n, k);
                            for (int j = 1; j <= k; ++j) {
                                std::vector<Scalar> col = zero_vector(f, n);
                                for (const auto& v : sbasis) {
                                    Scalar c = random_scalar(rng, f);
                                    for (int t = 0; t < n; ++t) col[size_t(t)] += c * v[size_t(t)];
                                }
                                xs.set_col(j, col);
                            }
                            if (!is_zero_vector(alternating_row_sum(scs_apply(xs, i0))))
                                cx.fail("S4-setup/n" + std::to_string(n) + "k" + std::to_string(k),
                                        {{"matrix", matrix_to_string(xs)}});
                            if (!is_zero_vector(alternating_row_sum(xs)))
                                cx.fail("S4/n" + std::to_string(n) + "k" + std::to_string(k),
                                        {{"matrix", matrix_to_string(xs)}});
                            cx.case_done();
                        }
                    }
        cx.finish();
    }

    // matroid cobase restriction: (I* \ S) u B'* coindependent; corank bound
    {
        cx.begin("matroid-cobase-restriction");
        Rng rng = root.fork(5);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 4; ++t) {
                Mat a = random_matrix(rng, f, 3, 6);
                Matroid m = vector_matroid(a);
                Matroid md = m.dual();
                uint64_t full = m.ground().full_mask();
                for (uint64_t istar = 0; istar <= full; ++istar) {
                    if (!md.is_independent(istar)) continue;
                    for (uint64_t s = 0; s <= full; ++s) {
                        Matroid ms = m.restrict_to(s);
                        int rstar_ms = ms.dual().full_rank();
                        uint64_t istar_minus_s = istar & ~s;
                        int drop = __builtin_popcountll(istar_minus_s);
                        if (!(rstar_ms <= md.full_rank() - drop))
                            cx.fail("part-b", {{"matrix", matrix_to_string(a)},
                                               {"I*", std::to_string(istar)},
                                               {"S", std::to_string(s)}});
                        for (uint64_t bs : ms.cobases()) {
                            // lift B'* (mask over S) back to ground positions
                            uint64_t lifted = 0;
                            const auto& sub = ms.ground();
                            for (size_t p = 0; p < sub.size(); ++p)
                                if (bs >> p & 1)
                                    lifted |= uint64_t{1} << m.ground().position(sub.at(p));
                            if (!md.is_independent(istar_minus_s | lifted))
                                cx.fail("part-a", {{"matrix", matrix_to_string(a)},
                                                   {"I*", std::to_string(istar)},
                                                   {"S", std::to_string(s)},
                                                   {"B'*", std::to_string(lifted)}});
                            cx.case_done();
                        }
                    }
                }
            }
        cx.finish();
    }

    // ... and through a contraction first
    {
        cx.begin("matroid-cobase-contraction-restriction");
        Rng rng = root.fork(6);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 2; ++t) {
                Mat a = random_matrix(rng, f, 3, 5);
                Matroid m = vector_matroid(a);
                Matroid md = m.dual();
                uint64_t full = m.ground().full_mask();
                for (uint64_t istar = 0; istar <= full; ++istar) {
                    if (!md.is_independent(istar)) continue;
                    for (uint64_t tset = 0; tset <= full; ++tset) {
                        Matroid mt = m.contract(tset);
                        uint64_t rest = full & ~tset;
                        for (uint64_t s = rest;; s = (s - 1) & rest) {
                            // masks over the contracted ground set
                            uint64_t s_sub = 0;
                            const auto& sub = mt.ground();
                            for (size_t p = 0; p < sub.size(); ++p)
                                if (s >> m.ground().position(sub.at(p)) & 1)
                                    s_sub |= uint64_t{1} << p;
                            Matroid mts = mt.restrict_to(s_sub);
                            uint64_t dropped = (istar & ~tset) & ~s;
                            int drop = __builtin_popcountll(dropped);
                            if (!(mts.dual().full_rank() <= md.full_rank() - drop))
                                cx.fail("part-b", {{"matrix", matrix_to_string(a)},
                                                   {"I*", std::to_string(istar)},
                                                   {"T", std::to_string(tset)},
                                                   {"S", std::to_string(s)}});
                            for (uint64_t bs : mts.cobases()) {
                                uint64_t lifted = 0;
                                const auto& ssub = mts.ground();
                                for (size_t p = 0; p < ssub.size(); ++p)
                                    if (bs >> p & 1)
                                        lifted |= uint64_t{1} << m.ground().position(ssub.at(p));
                                if (!md.is_independent(dropped | lifted))
                                    cx.fail("part-a", {{"matrix", matrix_to_string(a)},
                                                       {"I*", std::to_string(istar)},
                                                       {"T", std::to_string(tset)},
                                                       {"S", std::to_string(s)}});
                                cx.case_done();
                            }
                            if (s == 0) break;
                        }
                    }
                }
            }
        cx.finish();
    }

    // variety/vector matroid correspondence (rank identity and duality)
    {
        cx.begin("idep-matroid-corr");
        Rng rng = root.fork(7);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 5; ++t) {
                int ncols = 4 + int(rng.below(3)); // |E| in 4..6
                CoordinateSpace sp = CoordinateSpace::vector_space(f, ncols);
                LinearVariety k = random_consistent_system(rng, sp, 2);
                Matroid ma = vector_matroid(VectorMatroidSource(k.rep().a, sp.ground));
                Matroid mk = variety_matroid(k);
                uint64_t full = sp.ground.full_mask();
                int rmk = mk.full_rank();
                for (uint64_t x = 0; x <= full; ++x) {
                    // part (a) rank identity, with M(K) ranks from the
                    // definitional span route (independent of the dual route)
                    int def_rank_full = definitional_variety_rank(k, full);
                    int def_rank_rest = definitional_variety_rank(k, full & ~x);
                    if (ma.rank(x) + def_rank_full !=
                        __builtin_popcountll(x) + def_rank_rest)
                        cx.fail("part-a", {{"variety", variety_text(k.rep())},
                                           {"X", std::to_string(x)}});
                    // part (b): production M(K) equals the definitional rank
                    if (mk.rank(x) != definitional_variety_rank(k, x))
                        cx.fail("part-b", {{"variety", variety_text(k.rep())},
                                           {"X", std::to_string(x)}});
                    if (rmk != def_rank_full)
                        cx.fail("dim", {{"variety", variety_text(k.rep())}});
                    cx.case_done();
                }
            }
        cx.finish();
    }

    // slices: M(K_I) \ I = M(K) / I
    {
        cx.begin("lin-var-sec");
        Rng rng = root.fork(8);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 5; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 5);
                LinearVariety k = random_consistent_system(rng, sp, 2);
                Matroid mk = variety_matroid(k);
                uint64_t full = sp.ground.full_mask();
                for (uint64_t imask = 0; imask <= full; ++imask) {
                    if (!mk.is_independent(imask)) continue;
                    Slice u;
                    for (size_t p = 0; p < sp.ground.size(); ++p)
                        if (imask >> p & 1) u.pinned.emplace(sp.ground.at(p), random_scalar(rng, f));
                    auto ki = intersect_slice(k, u);
                    if (!ki) {
                        cx.fail("independent-slice-empty",
                                {{"variety", variety_text(k.rep())}, {"I", std::to_string(imask)}});
                        continue;
                    }
                    Matroid left = variety_matroid(*ki).restrict_to(full & ~imask);
                    Matroid right = mk.contract(imask);
                    if (!equal_rank_oracles(left, right))
                        cx.fail("rank-oracle", {{"variety", variety_text(k.rep())},
                                                {"I", std::to_string(imask)}});
                    cx.case_done();
                }
            }
        cx.finish();
    }

    // f-projections: ranks transport through f (and the slice refinement)
    {
        cx.begin("als-lifting");
        Rng rng = root.fork(9);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 5; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 5);
                LinearVariety k = random_consistent_system(rng, sp, 2);
                Matroid mk = variety_matroid(k);
                // a random selection injection
                std::vector<Label> chosen;
                for (const auto& l : sp.ground.elements())
                    if (rng.below(2) == 0) chosen.push_back(l);
                if (chosen.empty()) chosen.push_back(sp.ground.at(0));
                IndexInjection f_inj = IndexInjection::select(sp.ground, chosen);
                LinearVariety pk = project(k, f_inj);
                Matroid mpk = variety_matroid(pk);
                uint64_t fullx = mpk.ground().full_mask();
                for (uint64_t x = 0; x <= fullx; ++x) {
                    std::vector<Label> fx;
                    for (size_t p = 0; p < chosen.size(); ++p)
                        if (x >> p & 1) fx.push_back(chosen[p]);
                    if (mpk.rank(x) != mk.rank(fx))
                        cx.fail("rank", {{"variety", variety_text(k.rep())},
                                         {"X", std::to_string(x)}});
                    cx.case_done();
                }
            }
        cx.finish();
    }

    {
        cx.begin("lin-var-sec-proj");
        Rng rng = root.fork(10);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 5; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 5);
                LinearVariety k = random_consistent_system(rng, sp, 2);
                Matroid mk = variety_matroid(k);
                uint64_t full = sp.ground.full_mask();
                // random independent I and selection f
                std::vector<uint64_t> indep;
                for (uint64_t m = 0; m <= full; ++m)
                    if (mk.is_independent(m)) indep.push_back(m);
                uint64_t imask = indep[size_t(rng.below(indep.size()))];
                std::vector<Label> chosen;
                for (const auto& l : sp.ground.elements())
                    if (rng.below(2) == 0) chosen.push_back(l);
                if (chosen.empty()) chosen.push_back(sp.ground.at(0));
                IndexInjection f_inj = IndexInjection::select(sp.ground, chosen);

                Slice u;
                for (size_t p = 0; p < sp.ground.size(); ++p)
                    if (imask >> p & 1) u.pinned.emplace(sp.ground.at(p), random_scalar(rng, f));
                auto ki = intersect_slice(k, u);
                if (!ki) {
                    cx.fail("independent-slice-empty", {{"variety", variety_text(k.rep())}});
                    continue;
                }
                LinearVariety pki = project(*ki, f_inj);
                Matroid mpki = variety_matroid(pki);
                // f^{-1}(I) as a mask over the projected ground
                uint64_t f_inv_i = 0;
                for (size_t p = 0; p < chosen.size(); ++p)
                    if (imask >> sp.ground.position(chosen[p]) & 1) f_inv_i |= uint64_t{1} << p;
                uint64_t left_ground = mpki.ground().full_mask() & ~f_inv_i;
                Matroid left = mpki.restrict_to(left_ground);
                // right side: (M(K)/I) | (f(E2) \ I)
                uint64_t f_e2 = 0;
                for (const auto& l : chosen) f_e2 |= uint64_t{1} << sp.ground.position(l);
                Matroid contracted = mk.contract(imask);
                std::vector<Label> rest_labels = sp.ground.labels_of(f_e2 & ~imask);
                Matroid right = contracted.restrict_to(rest_labels);
                // compare through the label bijection induced by f
                const auto& lg = left.ground();
                uint64_t lfull = lg.full_mask();
                for (uint64_t x = 0; x <= lfull; ++x) {
                    std::vector<Label> mapped;
                    for (size_t p = 0; p < lg.size(); ++p)
                        if (x >> p & 1) {
                            // position in chosen: lg labels are range labels 1..|chosen|
                            mapped.push_back(chosen[size_t(lg.at(p).a - 1)]);
                        }
                    if (left.rank(x) != right.rank(mapped))
                        cx.fail("rank", {{"variety", variety_text(k.rep())},
                                         {"I", std::to_string(imask)},
                                         {"X", std::to_string(x)}});
                    cx.case_done();
                }
            }
        cx.finish();
    }

    // striking-out lifting: codim bound, coindependence transfer, det transfer
    {
        cx.begin("striking-out-lifting");
        Rng rng = root.fork(11);
        uint64_t empty_skips = 0;
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 4; ++t) {
                int n = 3, k = 2 + int(rng.below(2)); // 3x2 or 3x3
                CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
                LinearVariety kv = random_consistent_system(rng, sp, 1 + int(rng.below(2)));
                Matroid mk = variety_matroid(kv);
                Matroid mkd = mk.dual();
                for (uint64_t bstar : mk.cobases()) {
                    for (int jprime = 1; jprime <= k; ++jprime) {
                        uint64_t col_mask = 0;
                        for (int i = 1; i <= n; ++i)
                            col_mask |= uint64_t{1} << sp.ground.position(Label::cell(i, jprime));
                        if ((bstar & col_mask) != 0) continue; // hypothesis needs B* disjoint from column j'
                        for (int iprime = 1; iprime <= n; ++iprime) {
                            std::vector<Scalar> c = random_vector(rng, f, n);
                            auto kp = strike_out_lift(kv, iprime, jprime, c);
                            if (!kp) {
                                // cannot happen under the hypothesis; the pinned column is independent
                                cx.fail("unexpected-empty", {{"variety", variety_text(kv.rep())},
                                                             {"j'", std::to_string(jprime)}});
                                continue;
                            }
                            uint64_t row_mask = 0;
                            for (int j = 1; j <= k; ++j)
                                row_mask |= uint64_t{1} << sp.ground.position(Label::cell(iprime, j));
                            int cap = __builtin_popcountll(bstar & row_mask);
                            if (!(kp->codim() <= kv.codim() - cap))
                                cx.fail("part-b", {{"variety", variety_text(kv.rep())},
                                                   {"i'", std::to_string(iprime)},
                                                   {"j'", std::to_string(jprime)}});
                            // part (c): transfer of cobases of M(K')
                            IndexInjection ins = ins_map(n, k, iprime, jprime);
                            Matroid mkp = variety_matroid(*kp);
                            for (uint64_t bsp : mkp.cobases()) {
                                std::vector<Label> transferred = sp.ground.labels_of(bstar & row_mask);
                                const auto& pg = mkp.ground();
                                for (size_t p = 0; p < pg.size(); ++p)
                                    if (bsp >> p & 1) transferred.push_back(ins.image_of(pg.at(p)));
                                if (!mkd.is_independent(transferred))
                                    cx.fail("part-c", {{"variety", variety_text(kv.rep())},
                                                       {"i'", std::to_string(iprime)},
                                                       {"j'", std::to_string(jprime)}});
                            }
                            cx.case_done();
                        }
                    }
                }
                // the empty path, for columns that are dependent in M(K)
                for (int jprime = 1; jprime <= k; ++jprime)
                    for (int tries = 0; tries < 2; ++tries) {
                        auto kp = strike_out_lift(kv, 1, jprime, random_vector(rng, f, n));
                        if (!kp) ++empty_skips;
                        cx.case_done();
                    }
            }
        // part (d): determinant transfer on annihilating sources
        for (const FieldSpec& f : small_fields) {
            int n = 3, k = 2;
            CoordinateSpace sp = CoordinateSpace::matrix_space(f, n, k);
            // the zero-column variety {X : column 1 = 0} annihilates det
            Mat a(f, n, n * k);
            for (int i = 1; i <= n; ++i)
                a.set(i, (i - 1) * k + 1, one(f));
            auto kz = variety_from_constraints(ConstraintSystem(sp, std::move(a), zero_vector(f, n)));
            for (int iprime = 1; iprime <= n; ++iprime) {
                std::vector<Scalar> delta = zero_vector(f, n);
                delta[size_t(iprime - 1)] = one(f);
                auto kp = strike_out_lift(*kz, iprime, 2, delta);
                if (!kp) {
                    ++empty_skips;
                    continue;
                }
                bool ok = true;
                for_each_point(*kp, [&](const std::vector<Scalar>& p) {
                    if (!det_minor_sum(point_to_matrix(kp->space(), p)).is_zero()) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                if (!ok)
                    cx.fail("part-d", {{"variety", variety_text(kz->rep())},
                                       {"i'", std::to_string(iprime)}});
                cx.case_done();
            }
        }
        cx.finish("empty K' cases skipped: " + std::to_string(empty_skips));
    }

    // row cap lemma on discovered codim-k annihilators
    {
        cx.begin("row-cap-le-1");
        uint64_t vacuous = 0;
        for (uint32_t q : {2u, 3u}) {
            FieldSpec f = FieldSpec::prime(q);
            int n = 5, k = 3;
            LinearVariety alt = alt_row_sum_space(n, k, f);
            Matroid mk = variety_matroid(alt);
            for (uint64_t bstar : mk.cobases()) {
                bool has_free_column = false;
                for (int j = 1; j <= k && !has_free_column; ++j) {
                    uint64_t col_mask = 0;
                    for (int i = 1; i <= n; ++i)
                        col_mask |= uint64_t{1} << alt.space().ground.position(Label::cell(i, j));
                    if ((bstar & col_mask) == 0) has_free_column = true;
                }
                if (!has_free_column) {
                    ++vacuous; // P1: cobases of maximal annihilators hit every column
                    cx.case_done();
                    continue;
                }
                for (int i = 1; i <= n; ++i) {
                    uint64_t row_mask = 0;
                    for (int j = 1; j <= k; ++j)
                        row_mask |= uint64_t{1} << alt.space().ground.position(Label::cell(i, j));
                    if (__builtin_popcountll(bstar & row_mask) > 1)
                        cx.fail("row-cap", {{"q", std::to_string(q)},
                                            {"B*", std::to_string(bstar)},
                                            {"i", std::to_string(i)}});
                }
                cx.case_done();
            }
        }
        cx.finish("hypothesis vacuous (every cobasis meets every column) in " +
                  std::to_string(vacuous) + " cases, matching P1");
    }

    // representation independence: CA = A' gives the same matroid
    {
        cx.begin("representation-independence");
        Rng rng = root.fork(12);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 5; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 5);
                LinearVariety k = reduce_full_rank(random_consistent_system(rng, sp, 2));
                int m = k.rep().a.rows();
                if (m == 0) continue;
                Mat c = random_invertible(rng, f, m);
                Mat a2 = c * k.rep().a;
                std::vector<Scalar> b2 = mat_vec(c, k.rep().b);
                auto k2 = variety_from_constraints(ConstraintSystem(sp, a2, b2));
                Matroid m1 = vector_matroid(VectorMatroidSource(k.rep().a, sp.ground));
                Matroid m2 = vector_matroid(VectorMatroidSource(a2, sp.ground));
                if (!k2 || !equal_rank_oracles(m1, m2) ||
                    canonical_variety_key(k.rep()) != canonical_variety_key(k2->rep()))
                    cx.fail("mix", {{"variety", variety_text(k.rep())}});
                cx.case_done();
            }
        cx.finish();
    }

    // invertible change of variables: AS(AC^{-1}, b) = { Cx } and codim equal
    {
        cx.begin("invertible-change-of-variables");
        Rng rng = root.fork(13);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 4; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 4);
                LinearVariety k = random_consistent_system(rng, sp, 2);
                Mat c = random_invertible(rng, f, 4);
                Mat ac = k.rep().a * inverse(c);
                auto kc = variety_from_constraints(ConstraintSystem(sp, ac, k.rep().b));
                if (!kc || kc->codim() != k.codim()) {
                    cx.fail("codim", {{"variety", variety_text(k.rep())}});
                    continue;
                }
                bool ok = true;
                for_each_point(k, [&](const std::vector<Scalar>& p) {
                    if (!contains(*kc, mat_vec(c, p))) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
                if (!ok) cx.fail("image", {{"variety", variety_text(k.rep())}});
                cx.case_done();
            }
        cx.finish();
    }

    // point enumerator sanity: q^dim distinct members, all contained
    {
        cx.begin("enumerate-points");
        Rng rng = root.fork(14);
        for (const FieldSpec& f : small_fields)
            for (int t = 0; t < 4; ++t) {
                CoordinateSpace sp = CoordinateSpace::vector_space(f, 4);
                LinearVariety k = random_consistent_system(rng, sp, 1 + int(rng.below(2)));
                std::vector<std::string> seen;
                bool all_in = true;
                for_each_point(k, [&](const std::vector<Scalar>& p) {
                    std::string key;
                    for (const auto& s : p) key += s.to_string() + ",";
                    seen.push_back(key);
                    if (!contains(k, p)) all_in = false;
                    return true;
                });
                std::sort(seen.begin(), seen.end());
                uint64_t expect = 1;
                for (int i = 0; i < k.dim(); ++i) expect *= f.modulus();
                bool distinct = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
                if (!all_in || !distinct || seen.size() != expect)
                    cx.fail("points", {{"variety", variety_text(k.rep())}});
                cx.case_done();
            }
        cx.finish();
    }

    rep.sort_counterexamples();
    rep.wall_seconds = sw.seconds();
    return rep;
}

} // namespace cullis::verify
