#pragma once

//! The translation-finding solver over Z_p^n. The core is written against
//! three capabilities: drawing one Fourier sample, testing the zero
//! translation, and testing a candidate translation. Table instances plug in
//! exact lookups; the orbit-coset variant plugs in state sampling and swap
//! tests through the same interface.

#include <functional>

#include "htoc/ht_sampler.hpp"

namespace htoc::ht {

enum class TFStatus { Found, Abort };

struct TFStats {
    u64 samples_drawn = 0;
    u64 kept_equations = 0;  // samples with c = 1
    fp::SolveOutcome solve_outcome = fp::SolveOutcome::Multiple;
    bool pivot_found = false;
    u32 candidate_hits = 0;
};

struct TFOutcome {
    TFStatus status = TFStatus::Abort;
    FpVector u;  // valid when status == Found
    TFStats stats;
};

//! The sample budget 13 p C(n+p-2, p-1).
u64 paper_sample_count(u32 p, std::size_t n);

struct TFCore {
    u32 p = 0;
    std::size_t n = 0;
    std::function<SampleRecord(Rng&)> sample;
    std::function<bool(Rng&)> zero_translation_test;            // f0(0) = f1(0)?
    std::function<bool(const FpVector&, Rng&)> candidate_test;  // f0(0) = f1(w)?
};

//! Runs the solver: zero check; N = paper count x sample_multiplier draws;
//! keep c = 1 records; linearize via degree-(p-1) powers; a unique solution
//! with a unit pivot coefficient yields candidates a.v for 0 < a < p, each
//! checked through candidate_test. Anything else aborts.
TFOutcome translation_finding_core(const TFCore& core, u64 sample_multiplier, Rng& rng);

//! Table-instance entry point: exact equality tests, chosen sampler mode.
TFOutcome translation_finding(const HiddenTranslationInstance& inst, Rng& rng,
                              SamplerMode mode = SamplerMode::Statevector,
                              u64 sample_multiplier = 1);

}  // namespace htoc::ht
