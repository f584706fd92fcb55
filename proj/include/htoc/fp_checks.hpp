#pragma once

//! Verifiable facts about degree-(p-1) symmetric powers that the translation
//! solver's correctness rests on. Each check computes the claim directly and
//! exactly; they exist so the test suite (and the `lemma-check` CLI verb) can
//! exercise the underlying algebra independently of the solver.

#include <functional>
#include <optional>

#include "htoc/sym_power.hpp"

namespace htoc::fp {

//! Optional fault hook for exercising failure reporting: when set, it may
//! perturb a computed symmetric power before the check uses it.
using SymPowerHook = std::function<void(SymPowerVector&)>;

//! y^(p-1) lies in span{ (z + a y)^(p-1) : a = 0..p-1 }.
bool check_line_lemma(u32 p, const FpVector& z, const FpVector& y,
                      const SymPowerHook& hook = nullptr);

//! rank of { y^(p-1) : y in F_p^n }; full rank means C(n+p-2, p-1).
std::size_t check_span_rank(u32 p, std::size_t n, const SymPowerHook& hook = nullptr);

std::size_t sym_power_dimension(u32 p, std::size_t n);

struct FractionCheck {
    bool holds = false;
    // worst residue class and its counts, for counterexample reporting
    u32 worst_class = 0;
    std::size_t members = 0;
    std::size_t class_size = 0;
};

//! For every k != 0, among { y : y.u = k } at most a (p-1)/p fraction has
//! y^(p-1) inside the given proper subspace W (spanned by `w_span`).
//! Throws InputError when W is the full space or u = 0.
FractionCheck check_fraction_lemma(u32 p, std::size_t n, const FpVector& u,
                                   const std::vector<FpVector>& w_span,
                                   const SymPowerHook& hook = nullptr);

//! Determinant of the change-of-basis matrix A[a][k] = C(p-1,k) a^k between
//! the line powers and the split monomial basis; nonzero mod p iff the line
//! powers span. Also returns the closed-form product for cross-checking.
struct LineBasisDeterminant {
    u32 computed;
    u32 closed_form;  // prod_k C(p-1,k) * Vandermonde(0..p-1)
};
LineBasisDeterminant line_basis_determinant(u32 p);

}  // namespace htoc::fp
