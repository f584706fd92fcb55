#pragma once

//! Statistical primitives built on the state simulator: standard Fourier
//! sampling of a classical function, swap tests, and amplified equality tests.

#include "htoc/state_ops.hpp"

namespace htoc::sim {

//! One round of Fourier sampling for f : G -> [0, value_count):
//! prepare uniform |x>|0>, query f, transform the group register, measure it.
//! When f hides a subgroup H the outcomes are uniform on the orthogonal of H.
AbelianElement fourier_sampling(const AbelianGroupSpec& spec, const OracleFn& f, u64 value_count,
                                Rng& rng, SimLimits limits = default_limits());

//! The post-transform state of the same circuit, for exact analysis and for
//! drawing many independent samples from one build.
PureState fourier_sampling_state(const AbelianGroupSpec& spec, const OracleFn& f, u64 value_count,
                                 SimLimits limits = default_limits());

//! Draw an element of the group register from its Born marginal without
//! collapsing (independent runs of the circuit are i.i.d., so sampling the
//! fixed marginal repeatedly is distribution-identical).
AbelianElement sample_group_register(const PureState& s, const AbelianGroupSpec& spec,
                                     std::size_t reg, Rng& rng);

//! Swap test: accepts with probability (1 + |<a|b>|^2) / 2.
bool swap_test(const PureState& a, const PureState& b, Rng& rng);

//! ceil(log2(1/eps)) independent swap tests; reports equal iff all accept.
//! Never wrong on equal inputs; errs with probability <= eps on orthogonal ones.
bool equality_test(const PureState& a, const PureState& b, double eps, Rng& rng);

std::size_t equality_test_rounds(double eps);

}  // namespace htoc::sim
