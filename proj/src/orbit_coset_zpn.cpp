#include "htoc/orbit_coset_zpn.hpp"

#include <cmath>

#include "htoc/stabilizer_abelian.hpp"

namespace htoc::orbit {

namespace {

fp::FpVector to_fp(u32 p, const AbelianElement& a) {
    return fp::FpVector(p, std::vector<u32>(a.begin(), a.end()));
}

AbelianElement to_elem(const fp::FpVector& v) {
    return AbelianElement(v.coords.begin(), v.coords.end());
}

//! Tensor the two single-register factors into registers 2 and 3 of the
//! joint sampling state, tagged by the (x, b) pair in registers 0 and 1.
void add_product(PureState& s, u64 x, u64 b, const PureState& v2, const PureState& v3,
                 double scale) {
    for (const auto& [l2, a2] : v2.amplitudes()) {
        for (const auto& [l3, a3] : v3.amplitudes()) {
            s.add_amplitude({x, b, l2[0], l3[0]}, a2 * a3 * scale);
        }
    }
}

}  // namespace

u32 elementary_prime(const AbelianGroupSpec& spec) {
    if (spec.factor_count() == 0) throw InputError("orbit coset zpn: group must be nontrivial");
    u64 f = spec.factors[0];
    for (u64 g : spec.factors) {
        if (g != f) throw InputError("orbit coset zpn: group is not elementary abelian");
    }
    if (!fp::is_prime(f)) throw InputError("orbit coset zpn: factor size is not prime");
    return static_cast<u32>(f);
}

ElementaryQuotient elementary_quotient(u32 p, std::size_t n,
                                       const std::vector<fp::FpVector>& subgroup_gens) {
    ElementaryQuotient q;
    q.p = p;
    q.n = n;
    q.basis = fp::span_basis(p, n, subgroup_gens);
    for (const auto& row : q.basis) {
        std::size_t j = 0;
        while (j < n && row.coords[j] == 0) ++j;
        if (j == n) throw InternalError("elementary quotient: zero basis row");
        q.pivot_cols.push_back(j);
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool pivot = false;
        for (std::size_t pc : q.pivot_cols) pivot = pivot || pc == j;
        if (!pivot) q.free_cols.push_back(j);
    }
    q.n_prime = q.free_cols.size();
    return q;
}

fp::FpVector ElementaryQuotient::project(const fp::FpVector& x) const {
    fp::FpVector r = x;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        u32 c = r.coords[pivot_cols[i]];
        if (c != 0) {
            u32 f = fp::mul_mod(c, fp::inv_mod(basis[i].coords[pivot_cols[i]], p), p);
            r = fp::sub(r, fp::scale(f, basis[i]));
        }
    }
    std::vector<u32> out;
    out.reserve(n_prime);
    for (std::size_t j : free_cols) out.push_back(r.coords[j]);
    return fp::FpVector(p, std::move(out));
}

fp::FpVector ElementaryQuotient::lift(const fp::FpVector& xbar) const {
    fp::FpVector out(p, n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) out.coords[free_cols[i]] = xbar.coords[i];
    return out;
}

u64 orbit_coset_zpn_copy_need(u32 p, std::size_t n, const SolverConfig& cfg) {
    u64 order = 1;
    for (std::size_t i = 0; i < n; ++i) order *= p;
    u64 need = stabilizer_sample_count(order, cfg.eps, cfg.c0_stab);
    need += ht::paper_sample_count(p, n) * cfg.sample_multiplier();
    need += static_cast<u64>(cfg.equality_rounds()) * p;  // zero test plus p-1 candidates
    return need + cfg.quotient_slack;
}

OrbitCosetResult orbit_coset_zpn(const AbelianActionContext& ctx, CopyPool& pool0, CopyPool& pool1,
                                 const SolverConfig& cfg, Rng& rng) {
    u32 p = elementary_prime(ctx.spec);
    std::size_t n = ctx.spec.factor_count();

    OrbitCosetResult res;
    res.stats.zpn_calls = 1;
    u64 used0 = pool0.used();
    u64 used1 = pool1.used();
    auto finalize = [&]() {
        res.stats.copies_consumed = (pool0.used() - used0) + (pool1.used() - used1);
    };

    StabilizerOutcome s0 = stabilizer_abelian(ctx, pool0, cfg.eps, cfg.c0_stab, rng);
    StabilizerOutcome s1 = stabilizer_abelian(ctx, pool1, cfg.eps, cfg.c0_stab, rng);
    res.stats.stab_samples = s0.stats.stab_samples + s1.stats.stab_samples;

    if (!groups::same_subgroup(ctx.spec, s0.generators, s1.generators)) {
        finalize();
        return res;  // different stabilizers: the orbits cannot coincide
    }
    for (const auto& g : s0.generators) res.stabilizer.push_back(ctx.form.from_abelian(g));

    std::vector<fp::FpVector> gens_fp;
    gens_fp.reserve(s0.generators.size());
    for (const auto& g : s0.generators) gens_fp.push_back(to_fp(p, g));
    ElementaryQuotient quo = elementary_quotient(p, n, gens_fp);

    // f0(0) = f1(w)? Amplified swap tests on fresh copy pairs, one-sided.
    auto states_equal = [&](const fp::FpVector* shift, Rng& r) {
        std::size_t rounds = cfg.equality_rounds();
        for (std::size_t k = 0; k < rounds; ++k) {
            PureState a = pool0.take();
            PureState b = pool1.take();
            if (shift != nullptr) ctx.act_state(b, to_elem(quo.lift(*shift)));
            ++res.stats.swap_tests;
            if (!sim::swap_test(a, b, r)) return false;
        }
        return true;
    };

    if (quo.n_prime == 0) {
        // The whole group stabilizes phi0, so phi1 lies in the orbit exactly
        // when the states agree, with the identity as translation.
        if (states_equal(nullptr, rng)) {
            res.status = OrbitCosetResult::Status::Found;
            res.u = ctx.form.from_abelian(ctx.spec.identity());
        }
        finalize();
        return res;
    }

    AbelianGroupSpec qspec = groups::zpn_spec(p, quo.n_prime);
    u64 q_order = qspec.order();

    // One Fourier sample of the two-oracle wrapper over the factor group:
    // sum over (x, b) of |x, b, f_b(x), f_(1-b)(-x)|, transform, measure.
    auto draw_sample = [&](Rng& r) -> ht::SampleRecord {
        PureState c0 = pool0.take();
        PureState c1 = pool1.take();
        const sim::Layout& lay = c0.layout();
        if (lay.size() != 1 || c1.layout() != lay) {
            throw InputError("orbit coset zpn: copies must share a single-register layout");
        }
        sim::Layout joint = {sim::Register::group_reg(qspec),
                             sim::Register::group_reg(AbelianGroupSpec({2})),
                             sim::Register::value_reg(lay[0].size()),
                             sim::Register::value_reg(lay[0].size())};
        PureState s(joint, c0.limits());
        double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(q_order));
        for (u64 xi = 0; xi < q_order; ++xi) {
            fp::FpVector xbar = to_fp(p, qspec.element_at(xi));
            AbelianElement forward = to_elem(quo.lift(xbar));
            AbelianElement backward = ctx.spec.negate(forward);
            PureState f0x = c0;
            ctx.act_state(f0x, forward);
            PureState f1neg = c1;
            ctx.act_state(f1neg, backward);
            add_product(s, xi, 0, f0x, f1neg, scale);
            PureState f1x = c1;
            ctx.act_state(f1x, forward);
            PureState f0neg = c0;
            ctx.act_state(f0neg, backward);
            add_product(s, xi, 1, f1x, f0neg, scale);
        }
        s.check_norm();
        sim::qft(s, 0);
        sim::qft(s, 1);
        u64 yi = sim::measure(s, 0, r);
        u64 c = sim::measure(s, 1, r);
        return ht::SampleRecord{to_fp(p, qspec.element_at(yi)), static_cast<u32>(c)};
    };

    ht::TFCore core;
    core.p = p;
    core.n = quo.n_prime;
    core.sample = draw_sample;
    core.zero_translation_test = [&](Rng& r) { return states_equal(nullptr, r); };
    core.candidate_test = [&](const fp::FpVector& w, Rng& r) { return states_equal(&w, r); };

    ht::TFOutcome tf = ht::translation_finding_core(core, cfg.sample_multiplier(), rng);
    res.stats.translation_samples = tf.stats.samples_drawn;
    if (tf.status == ht::TFStatus::Found) {
        res.status = OrbitCosetResult::Status::Found;
        res.u = ctx.form.from_abelian(to_elem(quo.lift(tf.u)));
    }
    finalize();
    return res;
}

}  // namespace htoc::orbit
