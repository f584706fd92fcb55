#pragma once

//! Hidden-translation problem instances over Z_p^n: a pair of injective
//! table functions f0, f1 with f1(x + u) = f0(x) for a planted translation u.
//! The instance holds u privately; solvers query only the tables, and
//! verification code may read the plant to score outcomes.

#include <vector>

#include "htoc/abelian.hpp"
#include "htoc/fp.hpp"

namespace htoc::ht {

using fp::FpVector;
using groups::AbelianGroupSpec;

class HiddenTranslationInstance {
  public:
    //! f0_table[i] is the label of f0 at the i-th vector of Z_p^n in
    //! mixed-radix order; labels must be injective into [0, label_count).
    HiddenTranslationInstance(u32 p, std::size_t n, FpVector u, std::vector<u64> f0_table,
                              u64 label_count);

    u32 p() const { return p_; }
    std::size_t n() const { return n_; }
    u64 domain_size() const { return domain_; }
    u64 label_count() const { return label_count_; }
    const AbelianGroupSpec& domain_spec() const { return spec_; }

    u64 f0(const FpVector& x) const;
    u64 f1(const FpVector& x) const;  // f1(x) = f0(x - u)
    u64 f0_at(u64 index) const;
    u64 f1_at(u64 index) const;

    FpVector vector_at(u64 index) const;
    u64 index_of(const FpVector& x) const;

    //! The plant; for verification and exact-distribution work only.
    const FpVector& planted_u() const { return u_; }

    const std::vector<u64>& f0_table() const { return table_; }
    std::vector<u64> f1_table() const;

  private:
    u32 p_;
    std::size_t n_;
    u64 domain_;
    u64 label_count_;
    FpVector u_;
    AbelianGroupSpec spec_;
    std::vector<u64> table_;
};

//! Random instance: u drawn uniformly (nonzero unless allow_zero_u), f0 a
//! uniformly random injection into [0, label_count); label_count defaults
//! to the domain size when 0 is passed.
HiddenTranslationInstance random_instance(u32 p, std::size_t n, Rng& rng, bool allow_zero_u = false,
                                          u64 label_count = 0);

//! Instance with a chosen translation and a random injective table.
HiddenTranslationInstance random_instance_with_u(u32 p, std::size_t n, const FpVector& u, Rng& rng,
                                                 u64 label_count = 0);

}  // namespace htoc::ht
