#pragma once

//! Hidden subgroup in Z_p^n x| Z_2 for hiding functions of the split form
//! f(x, b) = f_b(x), where the hidden subgroup is {(0,0), (u,1)}: peel off
//! (f0, f1), solve the translation problem, and return the order-2 generator.

#include "htoc/semidirect.hpp"
#include "htoc/translation_finding.hpp"

namespace htoc::ht {

struct HspOutcome {
    bool aborted = true;
    groups::SemidirectZpnZ2::Element generator;  // (u, 1) when not aborted
    TFStats stats;
};

HspOutcome hsp_semidirect(const HiddenTranslationInstance& inst, Rng& rng,
                          SamplerMode mode = SamplerMode::Statevector,
                          u64 sample_multiplier = 1);

//! Brute-force oracle: true iff f(x, b) = f_b(x) is constant exactly on the
//! left cosets of the subgroup generated by the claimed generator.
bool hides_subgroup(const HiddenTranslationInstance& inst,
                    const groups::SemidirectZpnZ2::Element& gen);

}  // namespace htoc::ht
