#pragma once

//! Sparse pure-state simulator. A state lives over an ordered list of
//! registers; each register is either a finite abelian group (Fourier
//! transformable) or a plain value set. Amplitudes are kept in a sparse map
//! from basis-label tuples; entries below the prune threshold are dropped and
//! the norm is checked after every operation.

#include <complex>
#include <map>
#include <unordered_map>
#include <vector>

#include "htoc/abelian.hpp"
#include "htoc/common.hpp"

namespace htoc::sim {

using groups::AbelianElement;
using groups::AbelianGroupSpec;
using cplx = std::complex<double>;

struct Register {
    enum class Kind { Group, Values };
    Kind kind = Kind::Values;
    AbelianGroupSpec group;  // meaningful when kind == Group
    u64 value_count = 0;     // meaningful when kind == Values

    static Register group_reg(AbelianGroupSpec spec);
    static Register value_reg(u64 count);
    u64 size() const;
    bool operator==(const Register&) const = default;
};

using Layout = std::vector<Register>;

//! One basis-label index per register.
using BasisLabel = std::vector<u64>;

struct LabelHash {
    std::size_t operator()(const BasisLabel& label) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (u64 v : label) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class PureState {
  public:
    PureState() = default;
    PureState(Layout layout, SimLimits limits = default_limits());

    static PureState basis(Layout layout, BasisLabel label, SimLimits limits = default_limits());

    const Layout& layout() const { return layout_; }
    std::size_t register_count() const { return layout_.size(); }
    const SimLimits& limits() const { return limits_; }

    std::size_t support_size() const { return amps_.size(); }
    double norm_sq() const;

    cplx amplitude(const BasisLabel& label) const;
    void set_amplitude(const BasisLabel& label, cplx a);
    void add_amplitude(const BasisLabel& label, cplx a);

    const std::unordered_map<BasisLabel, cplx, LabelHash>& amplitudes() const { return amps_; }

    void prune();
    void renormalize();
    //! Throws InternalError if the norm drifted beyond the tolerance.
    void check_norm() const;

    //! Sorted copy of the amplitude map (deterministic iteration).
    std::map<BasisLabel, cplx> sorted_amplitudes() const;

  private:
    void check_label(const BasisLabel& label) const;
    void enforce_cap() const;

    Layout layout_;
    SimLimits limits_;
    std::unordered_map<BasisLabel, cplx, LabelHash> amps_;
};

}  // namespace htoc::sim
