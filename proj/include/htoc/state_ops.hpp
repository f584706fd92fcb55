#pragma once

//! Operations on sparse pure states: superpositions, reversible oracle calls,
//! Fourier transforms on group registers, measurement, relabelings.

#include <functional>

#include "htoc/state.hpp"

namespace htoc::sim {

//! Deterministic classical function computed into a target register.
//! Receives the label tuple of the source registers.
using OracleFn = std::function<u64(const std::vector<u64>&)>;

//! |0...0> on the given layout.
PureState zero_state(Layout layout, SimLimits limits = default_limits());

//! Uniform superposition over a single group register.
PureState uniform_superposition(const AbelianGroupSpec& spec, SimLimits limits = default_limits());

//! Tensor product (registers of b appended after a's).
PureState tensor(const PureState& a, const PureState& b);

//! Append a register in a definite basis value.
PureState extend(const PureState& s, Register reg, u64 value);

//! Drop a trailing register that is in a definite basis value across the
//! whole support; throws InternalError otherwise.
PureState drop_definite_register(const PureState& s, std::size_t reg);

//! dst <- dst + f(src) mod |dst| (group-translation write; always reversible).
void apply_oracle(PureState& s, const OracleFn& f, const std::vector<std::size_t>& src_regs,
                  std::size_t dst_reg);

//! dst <- dst - f(src) mod |dst| (uncompute of apply_oracle).
void apply_oracle_inverse(PureState& s, const OracleFn& f,
                          const std::vector<std::size_t>& src_regs, std::size_t dst_reg);

//! Relabel basis states by a bijection; throws InternalError on collisions.
void map_labels(PureState& s, const std::function<BasisLabel(const BasisLabel&)>& fn);

//! Multiply each basis amplitude by a label-dependent phase factor
//! (unit modulus enforced).
void apply_phase(PureState& s, const std::function<cplx(const BasisLabel&)>& phase);

//! Quantum Fourier transform on a group register: |x> -> sum_y chi_y(x) |y> / sqrt|G|.
void qft(PureState& s, std::size_t reg);
void qft_inverse(PureState& s, std::size_t reg);

//! Marginal Born distribution of one register (deterministic order).
std::map<u64, double> marginal(const PureState& s, std::size_t reg);

//! Joint Born distribution of a register subset.
std::map<std::vector<u64>, double> joint_marginal(const PureState& s,
                                                  const std::vector<std::size_t>& regs);

//! Measure one register: samples an outcome, collapses and renormalizes.
u64 measure(PureState& s, std::size_t reg, Rng& rng);

//! <a|b>; layouts must match.
cplx overlap(const PureState& a, const PureState& b);

//! |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

}  // namespace htoc::sim
