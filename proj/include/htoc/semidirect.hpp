#pragma once

//! Z_p^n semidirect Z_2 with the flip action: (x, b)(y, c) = (x + (-1)^b y, b + c).
//! Pair form for direct use; conversions to the polycyclic encoding for the
//! series-based solvers.

#include "htoc/fp.hpp"
#include "htoc/polycyclic.hpp"

namespace htoc::groups {

struct SemidirectZpnZ2 {
    u32 p;
    std::size_t n;

    struct Element {
        fp::FpVector x;
        u32 b;  // 0 or 1
        bool operator==(const Element&) const = default;
    };

    SemidirectZpnZ2(u32 p_, std::size_t n_);

    Element identity() const;
    Element make(std::vector<u32> coords, u32 b) const;
    Element multiply(const Element& a, const Element& c) const;
    Element inverse(const Element& a) const;
    u64 order() const;

    //! Normal form in semidirect_zpn_z2_pc(p, n): flip generator first,
    //! (x, b) = z_0^b z_1^{x'_1} .. z_n^{x'_n} with x' = (-1)^b x.
    Exponents to_pc(const Element& a) const;
    Element from_pc(const Exponents& e) const;

    PolycyclicGroupSpec pc_spec() const { return semidirect_zpn_z2_pc(p, n); }
};

}  // namespace htoc::groups
