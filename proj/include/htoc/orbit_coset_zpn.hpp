#pragma once

//! Orbit coset in elementary abelian groups Z_p^n: compute both stabilizers,
//! reject when they differ, then run translation finding over the factor
//! group with the quantum functions x -> |x . phi_b|, sampling through the
//! two-oracle wrapper on fresh copy pairs and replacing equality checks by
//! iterated swap tests.

#include "htoc/solver_context.hpp"
#include "htoc/translation_finding.hpp"

namespace htoc::orbit {

//! Z_p^n modulo a subspace, with a linear section onto the free coordinates.
struct ElementaryQuotient {
    u32 p = 0;
    std::size_t n = 0;
    std::size_t n_prime = 0;
    std::vector<fp::FpVector> basis;  // echelon basis of the subspace
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;

    fp::FpVector project(const fp::FpVector& x) const;  // Z_p^n -> Z_p^n'
    fp::FpVector lift(const fp::FpVector& xbar) const;  // section, kernel-free
};

ElementaryQuotient elementary_quotient(u32 p, std::size_t n,
                                       const std::vector<fp::FpVector>& subgroup_gens);

//! The prime p when every factor equals it; throws otherwise.
u32 elementary_prime(const AbelianGroupSpec& spec);

//! Worst-case copies needed from each pool for one call at this size.
u64 orbit_coset_zpn_copy_need(u32 p, std::size_t n, const SolverConfig& cfg);

OrbitCosetResult orbit_coset_zpn(const AbelianActionContext& ctx, CopyPool& pool0, CopyPool& pool1,
                                 const SolverConfig& cfg, Rng& rng);

}  // namespace htoc::orbit
