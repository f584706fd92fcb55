#pragma once

//! Finite abelian groups as products of cyclic factors, their characters,
//! and orthogonal-subgroup computation from character samples.

#include <complex>
#include <vector>

#include "htoc/fp.hpp"

namespace htoc::groups {

using cplx = std::complex<double>;

//! Element of a product of cyclic groups, stored as one residue per factor.
using AbelianElement = std::vector<u32>;

struct AbelianGroupSpec {
    std::vector<u64> factors;  // each >= 2 and a prime power

    AbelianGroupSpec() = default;
    explicit AbelianGroupSpec(std::vector<u64> f);

    u64 order() const;
    std::size_t factor_count() const { return factors.size(); }
    bool operator==(const AbelianGroupSpec&) const = default;

    AbelianElement identity() const;
    AbelianElement add(const AbelianElement& a, const AbelianElement& b) const;
    AbelianElement negate(const AbelianElement& a) const;
    AbelianElement scale(u64 c, const AbelianElement& a) const;

    //! Mixed-radix index <-> element (factor 0 is the least significant digit).
    u64 index_of(const AbelianElement& a) const;
    AbelianElement element_at(u64 index) const;

    void check_element(const AbelianElement& a) const;
};

//! Elementary abelian Z_p^n.
AbelianGroupSpec zpn_spec(u32 p, std::size_t n);

//! Character chi_y(x) = prod_i exp(2 pi i y_i x_i / m_i).
cplx char_eval(const AbelianGroupSpec& spec, const AbelianElement& y, const AbelianElement& x);

//! Exact test chi_y(x) = 1, done in integer arithmetic.
bool char_is_trivial(const AbelianGroupSpec& spec, const AbelianElement& y,
                     const AbelianElement& x);

//! Generators of { x : chi_y(x) = 1 for every sampled y }.
//! Empty sample set yields generators of the whole group.
std::vector<AbelianElement> orthogonal_subgroup(const AbelianGroupSpec& spec,
                                                const std::vector<AbelianElement>& samples);

//! All elements of the subgroup generated by the given elements.
std::vector<AbelianElement> generated_subgroup(const AbelianGroupSpec& spec,
                                               const std::vector<AbelianElement>& gens);

//! Reduce an element list to a short generating set (greedy growth).
std::vector<AbelianElement> reduce_generators(const AbelianGroupSpec& spec,
                                              const std::vector<AbelianElement>& elements);

//! True iff the two generating sets generate the same subgroup.
bool same_subgroup(const AbelianGroupSpec& spec, const std::vector<AbelianElement>& a,
                   const std::vector<AbelianElement>& b);

//! Every subgroup of the group, each as a sorted element-index list.
//! Desk scale only: enumerates by closing all generator subsets.
std::vector<std::vector<u64>> all_subgroups(const AbelianGroupSpec& spec);

}  // namespace htoc::groups
