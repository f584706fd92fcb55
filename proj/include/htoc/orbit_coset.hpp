#pragma once

//! Orbit coset and stabilizer solvers for solvable groups presented with a
//! series-block annotation. Single-block groups are handled directly
//! (elementary abelian via the Z_p^n solver, small factors by exhaustive
//! search with amplified swap tests); otherwise one self-reduction step peels
//! off the first block: solve in the quotient on manufactured orbit
//! superpositions, then finish inside the normal prefix subgroup.

#include "htoc/orbit_coset_zpn.hpp"
#include "htoc/orbit_superposition.hpp"

namespace htoc::orbit {

//! One-time division of the error budget by the recursion expansion factor
//! c * (log|G| + log^2|G|); marked so nested calls do not divide again.
SolverConfig derive_recursion_config(const SolverConfig& cfg,
                                     const groups::PolycyclicGroupSpec& group);

//! The group's block annotation, validated to tile the generator sequence;
//! when absent, a single block is inferred (elementary abelian if the
//! presentation decomposes over one prime, small if the order is below the
//! threshold). Throws InputError otherwise.
std::vector<groups::SeriesBlock> effective_blocks(const groups::PolycyclicGroupSpec& group,
                                                  const SolverConfig& cfg);

//! Try every group element as the coset representative, comparing states
//! with amplified swap tests on fresh copy pairs. Group order must not
//! exceed the small-factor threshold.
OrbitCosetResult exhaustive_orbit_coset(const GroupActionContext& ctx, CopyPool& pool0,
                                        CopyPool& pool1, const SolverConfig& cfg, Rng& rng,
                                        bool want_stabilizer = true);

//! Same enumeration specialized to the stabilizer (status is always Found,
//! u the identity, generators the accepted elements).
OrbitCosetResult exhaustive_stabilizer(const GroupActionContext& ctx, CopyPool& pool,
                                       const SolverConfig& cfg, Rng& rng);

//! One self-reduction step at the given series cut (N = prefix subgroup):
//! stabilizer of phi via stabilizer_step, quotient-level solve on
//! orbit-superposition copies, then the finishing solve inside N.
OrbitCosetResult orbit_coset_step(const GroupActionContext& ctx, std::size_t cut, u64 phi0,
                                  u64 phi1, const SolverConfig& cfg, Rng& rng);

//! Stabilizer variant of the same step: intersect with N by recursion, find
//! quotient generators on orbit-superposition copies, lift each through an
//! orbit-coset solve in N.
OrbitCosetResult stabilizer_step(const GroupActionContext& ctx, std::size_t cut, u64 phi,
                                 const SolverConfig& cfg, Rng& rng);

//! The solver handed to superposition steps for phase corrections:
//! transparent enumeration in transparent mode, otherwise recursion on the
//! prefix subgroup with per-solver memoization of the classical results.
LabelCosetSolver recursive_label_solver(const SolverConfig& cfg, Rng& rng);

//! Full solver on basis-label instances for block-annotated solvable groups.
OrbitCosetResult orbit_coset_smooth(const GroupActionContext& ctx, u64 phi0, u64 phi1,
                                    const SolverConfig& cfg, Rng& rng);
OrbitCosetResult stabilizer_smooth(const GroupActionContext& ctx, u64 phi,
                                   const SolverConfig& cfg, Rng& rng);

//! Stabilizer for groups whose derived subgroup carries the block annotation:
//! one step at the commutator cut, abelian quotient, recursion inside.
OrbitCosetResult stabilizer_solvable(const GroupActionContext& ctx, u64 phi,
                                     const SolverConfig& cfg, Rng& rng);

//! Action of the group on the distinct right-translates g -> f(g x) of a
//! function table, by composition. Labels are the distinct translate tables
//! in first-seen order (so labels are honestly orthogonal even when f is
//! constant on cosets); the expander renders a label as its function
//! superposition over [group index, value] registers.
QuantumAction translate_orbit_action(const groups::PolycyclicGroupSpec& spec,
                                     const std::vector<u64>& f_table, u64 value_count);

struct LabeledCosetInstance {
    QuantumAction action;
    u64 phi0 = 0;
    u64 phi1 = 0;
    bool same_orbit = true;  // whether f1 turned out to be a translate of f0
};

//! Hidden-translation instance as an orbit-coset instance on the translate
//! action. When f1 is not a translate of f0, the action is built on the
//! disjoint union of both translate families (so solvers must reject).
LabeledCosetInstance reduce_ht_to_oc(const groups::PolycyclicGroupSpec& spec,
                                     const std::vector<u64>& f0, const std::vector<u64>& f1,
                                     u64 value_count);

struct LabeledStabilizerInstance {
    QuantumAction action;
    u64 phi = 0;
};

//! Hidden-subgroup instance as a stabilizer instance: the stabilizer of the
//! f-translate label is exactly the hidden subgroup.
LabeledStabilizerInstance reduce_hsp_to_stab(const groups::PolycyclicGroupSpec& spec,
                                             const std::vector<u64>& f_table, u64 value_count);

}  // namespace htoc::orbit
