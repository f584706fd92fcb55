#pragma once

//! Fourier sampling for hidden-translation instances over Z_p^n x Z_2.
//! Provides the exact class distribution in closed form, a full statevector
//! sampler, a distribution-identical shortcut sampler, and the two-oracle
//! wrapper program together with its direct one-shot equivalent.

#include <map>

#include "htoc/ht_instance.hpp"
#include "htoc/state_ops.hpp"

namespace htoc::ht {

using sim::PureState;

//! One Fourier sample: the measured character index y and the Z_2 bit c.
struct SampleRecord {
    FpVector y;
    u32 c = 0;
};

//! Probability of the class {(y, c) : y . u = k} for fixed c.
struct ClassProb {
    u32 k = 0;
    u32 c = 0;
    double prob = 0.0;
};

//! Closed-form table over (k, c): P = (1 + (-1)^c cos(2 pi k / p)) / (2p).
//! Requires u != 0 (otherwise the class partition degenerates).
std::vector<ClassProb> exact_sample_distribution(u32 p, std::size_t n, const FpVector& u);

//! Exact per-outcome probabilities P(y, c) = |1 + (-1)^c w^(y.u)|^2 / (4 p^n),
//! keyed by (index of y, c). Computed analytically, not via simulation.
std::map<std::pair<u64, u32>, double> exact_joint_table(const HiddenTranslationInstance& inst);

//! Layout [Z_p^n, Z_2, value, value]: in-place two-oracle wrapper program
//! realizing |x,b,0,0> -> |x, b, f_b(x), f_{1-b}(-x)> while querying f0 and
//! f1 only separately (negate register, query, negate, query, restore, swap).
void apply_dual_oracle_program(PureState& s, const HiddenTranslationInstance& inst);

//! The same map applied directly in one shot, as the comparison oracle.
void apply_dual_oracle_direct(PureState& s, const HiddenTranslationInstance& inst);

//! Post-transform state of Fourier sampling with the combined function
//! f(x, b) = f_b(x) on layout [Z_p^n, Z_2, value].
PureState ht_post_qft_state(const HiddenTranslationInstance& inst,
                            SimLimits limits = default_limits());

//! Post-transform state of Fourier sampling through the two-oracle wrapper,
//! layout [Z_p^n, Z_2, value, value].
PureState ht_post_qft_state_dual(const HiddenTranslationInstance& inst,
                                 SimLimits limits = default_limits());

enum class SamplerMode { Statevector, Shortcut };

//! Draws independent (y, c) Fourier samples for one instance. Statevector
//! mode builds the exact post-transform state once and draws from its Born
//! distribution (independent runs are i.i.d., so this is the same process);
//! shortcut mode samples the closed-form class table and then a uniform
//! member of the class.
class HtSampler {
  public:
    HtSampler(const HiddenTranslationInstance& inst, SamplerMode mode,
              SimLimits limits = default_limits());

    SampleRecord draw(Rng& rng);
    SamplerMode mode() const { return mode_; }

    //! Born distribution over (y index, c); statevector mode only.
    const std::map<std::pair<u64, u32>, double>& born_table() const;

  private:
    const HiddenTranslationInstance& inst_;
    SamplerMode mode_;
    std::map<std::pair<u64, u32>, double> born_;
    std::vector<std::pair<std::pair<u64, u32>, double>> cumulative_;
    std::vector<ClassProb> classes_;
};

}  // namespace htoc::ht
