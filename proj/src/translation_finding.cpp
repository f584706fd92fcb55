#include "htoc/translation_finding.hpp"

#include <optional>

#include "htoc/sym_power.hpp"

namespace htoc::ht {

u64 paper_sample_count(u32 p, std::size_t n) {
    return 13ULL * p * fp::binomial(n + p - 2, p - 1);
}

TFOutcome translation_finding_core(const TFCore& core, u64 sample_multiplier, Rng& rng) {
    u32 p = core.p;
    std::size_t n = core.n;
    if (n == 0) throw InputError("translation finding: n must be positive");
    if (sample_multiplier == 0) throw InputError("translation finding: zero sample multiplier");

    TFOutcome out;
    if (core.zero_translation_test(rng)) {
        out.status = TFStatus::Found;
        out.u = FpVector(p, n, 0);
        return out;
    }

    u64 total = paper_sample_count(p, n) * sample_multiplier;
    fp::MonomialBasis basis(n, p - 1);

    fp::FpLinearSystem sys;
    sys.lhs = fp::FpMatrix(p, basis.size());
    for (u64 i = 0; i < total; ++i) {
        SampleRecord rec = core.sample(rng);
        ++out.stats.samples_drawn;
        if (rec.c != 1) continue;
        ++out.stats.kept_equations;
        sys.lhs.append_row(fp::sym_power(rec.y, basis).as_fp_vector());
        sys.rhs.push_back(1);
    }

    fp::SolveResult solved = fp::gauss_solve(sys);
    out.stats.solve_outcome = solved.outcome;
    if (solved.outcome != fp::SolveOutcome::Unique) return out;
    const FpVector& U = solved.solution;

    // pivot: smallest j whose x_j^(p-1) coefficient is 1
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<u32> exps(n, 0);
        exps[j] = p - 1;
        if (U.coords[basis.index_of(exps)] == 1) {
            pivot = j;
            break;
        }
    }
    if (pivot == n) return out;
    out.stats.pivot_found = true;

    FpVector v(p, n, 0);
    v.coords[pivot] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == pivot) continue;
        std::vector<u32> exps(n, 0);
        exps[k] += 1;
        exps[pivot] += p - 2;
        v.coords[k] = U.coords[basis.index_of(exps)];
    }

    for (u32 a = 1; a < p; ++a) {
        FpVector candidate = fp::scale(a, v);
        ++out.stats.candidate_hits;
        if (core.candidate_test(candidate, rng)) {
            out.status = TFStatus::Found;
            out.u = candidate;
            return out;
        }
    }
    return out;
}

TFOutcome translation_finding(const HiddenTranslationInstance& inst, Rng& rng, SamplerMode mode,
                              u64 sample_multiplier) {
    // built lazily so the step-0 exit never constructs a sampler
    std::optional<HtSampler> sampler;
    FpVector zero(inst.p(), inst.n(), 0);
    u64 f00 = inst.f0(zero);
    TFCore core{
        inst.p(),
        inst.n(),
        [&](Rng& r) {
            if (!sampler) sampler.emplace(inst, mode);
            return sampler->draw(r);
        },
        [&](Rng&) { return f00 == inst.f1(zero); },
        [&](const FpVector& w, Rng&) { return f00 == inst.f1(w); },
    };
    return translation_finding_core(core, sample_multiplier, rng);
}

}  // namespace htoc::ht
