#pragma once

//! Degree-k symmetric powers of F_p^n: the coefficient vectors of (sum a_j x_j)^k
//! in the monomial basis, plus the evaluation ("star") vectors they pair with.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "htoc/fp.hpp"

namespace htoc::fp {

//! Exponent vector of one degree-k monomial in n variables.
struct MonomialIndex {
    std::vector<u32> exponents;

    u32 degree() const;
    bool operator==(const MonomialIndex&) const = default;
};

//! All degree-k monomials in n variables, graded-lex ordered
//! (within fixed degree: exponent vectors in descending lex order,
//! so for n=2,k=2: x1^2, x1 x2, x2^2).
class MonomialBasis {
  public:
    MonomialBasis(std::size_t n, u32 k);

    std::size_t size() const { return items_.size(); }
    std::size_t n() const { return n_; }
    u32 k() const { return k_; }
    const MonomialIndex& at(std::size_t i) const { return items_[i]; }
    const std::vector<MonomialIndex>& items() const { return items_; }

    //! Position of an exponent vector; throws if it is not degree k.
    std::size_t index_of(const std::vector<u32>& exponents) const;

  private:
    std::size_t n_;
    u32 k_;
    std::vector<MonomialIndex> items_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

std::vector<MonomialIndex> monomial_basis(std::size_t n, u32 k);

//! Coefficient vector in the degree-k monomial basis over F_p.
struct SymPowerVector {
    u32 p = 0;
    std::size_t n = 0;
    u32 k = 0;
    std::vector<u32> coords;

    bool operator==(const SymPowerVector&) const = default;
    FpVector as_fp_vector() const { return FpVector(p, coords); }
};

//! Coefficients of (sum_j y_j x_j)^k.
SymPowerVector sym_power(const FpVector& y, u32 k);
SymPowerVector sym_power(const FpVector& y, const MonomialBasis& basis);

//! Monomial evaluations of u: coordinate at exponent e is prod_j u_j^{e_j}.
SymPowerVector star_vector(const FpVector& u, u32 k);
SymPowerVector star_vector(const FpVector& u, const MonomialBasis& basis);

u32 dot(const SymPowerVector& a, const SymPowerVector& b);

//! Exact binomial/multinomial helpers (desk-scale arguments).
u64 binomial(u64 n, u64 r);
u64 multinomial(u32 k, const std::vector<u32>& parts);

}  // namespace htoc::fp
