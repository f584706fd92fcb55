#pragma once

//! Stabilizer computation in finite abelian groups acting on quantum states:
//! Fourier-sample the function x -> |x . phi| on fresh copies, then decode
//! the sampled characters through the orthogonal-subgroup construction.

#include "htoc/solver_context.hpp"

namespace htoc::orbit {

struct StabilizerOutcome {
    std::vector<AbelianElement> generators;
    SolverStats stats;
};

//! c0 * ceil(log2 |G|) * ceil(log2 (1/eps)) samples, at least one.
u64 stabilizer_sample_count(u64 group_order, double eps, u32 c0);

//! One Fourier sample of the action on a copy (the copy is consumed):
//! build sum_x |x>|x . copy| / sqrt|G|, transform the group register, measure.
AbelianElement action_fourier_sample(const AbelianActionContext& ctx, PureState copy, Rng& rng);

//! The sampling state itself, for exact-distribution tests.
PureState action_sampling_state(const AbelianActionContext& ctx, const PureState& copy);

StabilizerOutcome stabilizer_abelian(const AbelianActionContext& ctx, CopyPool& copies, double eps,
                                     u32 c0, Rng& rng);

//! Convenience entry for a basis-label instance over a self-contained action
//! whose group decomposes into cyclic factors.
StabilizerOutcome stabilizer_abelian_on_label(const QuantumAction& action, u64 label, double eps,
                                              u32 c0, u64 copy_budget, Rng& rng);

}  // namespace htoc::orbit
