#pragma once

//! Building orbit superpositions |G . phi| along the subnormal series of the
//! presentation: each step attaches a cyclic control register, transforms and
//! measures it, and cancels the leftover phases of the nonzero branches with
//! one reference copy, asking an orbit-coset solver on basis labels for the
//! group elements the corrections need.

#include "htoc/solver_context.hpp"

namespace htoc::orbit {

//! Orbit-coset solver on basis labels of the parent action, restricted to
//! the prefix subgroup at `cut`: find g there with g . base = target, or
//! Reject. Returns g in parent coordinates (leading cut entries zero).
using LabelCosetSolver = std::function<OrbitCosetResult(
    const GroupActionContext& parent, std::size_t cut, u64 target, u64 base)>;

//! Apply g to a basis label; throws InternalError unless the action sends
//! basis states to basis states.
u64 act_label(const GroupActionContext& ctx, const Exponents& g, u64 label);

//! Enumerates the prefix subgroup and returns the first element mapping
//! base to target (stabilizer output left empty). For tests and for
//! transparent mode.
LabelCosetSolver transparent_label_solver();

struct OrbitStepOutcome {
    std::vector<PureState> copies;  // surviving copies of |K . phi|
    std::vector<u64> j_values;      // measured control value per input copy
    bool spent_reference = false;   // a nonzero branch consumed one copy
    u64 skipped_corrections = 0;    // solver rejects among correction calls
    SolverStats stats;
};

//! One series step: copies of |G_(kcut+1) . phi| become copies of
//! |G_kcut . phi|, where z = generator kcut of prime relative order. All
//! inputs must share one single-register layout. At most one copy is spent.
OrbitStepOutcome orbit_superposition_step(const GroupActionContext& ctx, std::size_t kcut,
                                          u64 phi_label, std::vector<PureState> copies,
                                          const LabelCosetSolver& solver, Rng& rng);

struct OrbitSuperpositionOutcome {
    std::vector<PureState> copies;  // at least s copies of |G . phi|
    u64 skipped_corrections = 0;
    SolverStats stats;
};

//! Copies of |phi| drawn from the pool per run: s plus one per series step.
u64 orbit_superposition_copy_need(const groups::PolycyclicGroupSpec& spec, std::size_t s);

//! Full induction down the series: draws the needed |phi| copies from the
//! pool and returns at least s copies of |G . phi|.
OrbitSuperpositionOutcome orbit_superposition(const GroupActionContext& ctx, u64 phi_label,
                                              std::size_t s, CopyPool& phi_pool,
                                              const LabelCosetSolver& solver, Rng& rng);

}  // namespace htoc::orbit
