#pragma once

//! Shared plumbing for the solver stack: budgeted copy pools, group-action
//! contexts that present an action restricted to a subgroup or lifted from a
//! quotient, and the statistics block every solver reports into. A "copy" is
//! always a single-register sparse state over the action's label set.

#include <cmath>
#include <functional>
#include <utility>

#include "htoc/action.hpp"
#include "htoc/sampling.hpp"

namespace htoc::orbit {

using groups::AbelianElement;
using groups::AbelianForm;
using groups::AbelianGroupSpec;

struct SolverStats {
    u64 stab_samples = 0;
    u64 translation_samples = 0;
    u64 swap_tests = 0;
    u64 zpn_calls = 0;
    u64 exhaustive_calls = 0;
    u64 recursive_steps = 0;
    u64 superposition_runs = 0;
    u64 copies_consumed = 0;
    u64 rejected_lifts = 0;  // sub-solver rejections on promise-true lift instances

    void absorb(const SolverStats& o) {
        stab_samples += o.stab_samples;
        translation_samples += o.translation_samples;
        swap_tests += o.swap_tests;
        zpn_calls += o.zpn_calls;
        exhaustive_calls += o.exhaustive_calls;
        recursive_steps += o.recursive_steps;
        superposition_runs += o.superposition_runs;
        copies_consumed += o.copies_consumed;
        rejected_lifts += o.rejected_lifts;
    }
};

//! Shared output contract of every orbit-coset solver: Reject, or a coset
//! representative u together with stabilizer generators, all in the
//! coordinates of the group the solver was called on.
struct OrbitCosetResult {
    enum class Status { Found, Rejected };
    Status status = Status::Rejected;
    Exponents u;
    std::vector<Exponents> stabilizer;
    SolverStats stats;

    bool found() const { return status == Status::Found; }
};

//! Tuning constants the asymptotic statements leave open.
struct SolverConfig {
    double eps = 1e-3;         // error budget for the call
    u32 c0_stab = 2;           // stabilizer sample-count constant
    u64 small_threshold = 64;  // max factor size handled by exhaustive search
    u64 sample_mult_cap = 12;  // clamp on the log(1/eps) sample multiplier
    u64 quotient_slack = 4;    // spare quotient-level copies beyond the computed need
    u64 pseudo_copy_budget = 1u << 20;  // budget for classical-label copy sources
    bool transparent = false;  // replace sub-solvers by exact enumeration
    double error_expansion_c = 1.0;  // constant in the recursion error expansion
    double eps_floor = 1e-7;         // lower clamp for the derived per-call budget
    bool derived = false;            // eps already divided by the expansion factor

    u64 sample_multiplier() const {
        double r = std::ceil(std::log2(1.0 / eps));
        u64 m = r < 1.0 ? 1 : static_cast<u64>(r);
        return std::min(m, sample_mult_cap);
    }
    std::size_t equality_rounds() const { return sim::equality_test_rounds(eps); }
};

//! Budgeted source of identically prepared copies. Throws ResourceError when
//! the budget runs out, mirroring the copy bounds of the reductions.
class CopyPool {
  public:
    CopyPool() = default;

    static CopyPool from_basis(u64 label_count, u64 label, u64 budget,
                               SimLimits limits = default_limits()) {
        CopyPool pool;
        pool.budget_ = budget;
        pool.maker_ = [label_count, label, limits]() {
            return PureState::basis({sim::Register::value_reg(label_count)}, {label}, limits);
        };
        return pool;
    }

    static CopyPool from_states(std::vector<PureState> states) {
        CopyPool pool;
        pool.budget_ = states.size();
        pool.ready_ = std::move(states);
        return pool;
    }

    static CopyPool from_maker(std::function<PureState()> make, u64 budget) {
        CopyPool pool;
        pool.budget_ = budget;
        pool.maker_ = std::move(make);
        return pool;
    }

    PureState take() {
        if (used_ >= budget_) throw ResourceError("copy pool exhausted");
        std::size_t i = used_++;
        if (!ready_.empty()) return std::move(ready_[i]);
        return maker_();
    }

    //! The next copy without consuming it (for layout inspection).
    PureState peek() const {
        if (!ready_.empty()) {
            if (used_ >= ready_.size()) throw ResourceError("copy pool exhausted");
            return ready_[used_];
        }
        return maker_();
    }

    u64 budget() const { return budget_; }
    u64 used() const { return used_; }
    u64 remaining() const { return budget_ - used_; }

  private:
    std::vector<PureState> ready_;
    std::function<PureState()> maker_;
    u64 budget_ = 0;
    u64 used_ = 0;
};

//! An action of a polycyclic group on copy states: either the top-level
//! action itself, its restriction to a subgroup, or the induced quotient
//! action realized through a fixed section. `act_state` acts on register 0.
struct GroupActionContext {
    groups::PolycyclicGroupSpec group;
    std::function<void(PureState&, const Exponents&)> act_state;
    u64 label_count = 0;

    void check() const {
        if (!act_state) throw InputError("action context: missing act_state");
    }
};

inline GroupActionContext top_context(const QuantumAction& action) {
    GroupActionContext ctx{action.group(), {}, action.label_count()};
    ctx.act_state = [&action](PureState& s, const Exponents& g) { action.act_state(s, 0, g); };
    return ctx;
}

//! Pad a prefix-subgroup element with `cut` leading zeros.
inline Exponents prefix_embed(const Exponents& g, std::size_t cut, std::size_t arity) {
    Exponents out(arity, 0);
    for (std::size_t i = 0; i < g.size(); ++i) out[cut + i] = g[i];
    return out;
}

//! Restriction to the prefix subgroup G_i (elements gain i leading zeros).
inline GroupActionContext subgroup_context(const GroupActionContext& parent, std::size_t cut) {
    GroupActionContext ctx{groups::prefix_subgroup(parent.group, cut), {}, parent.label_count};
    auto parent_act = parent.act_state;
    std::size_t arity = parent.group.gen_count();
    ctx.act_state = [parent_act, cut, arity](PureState& s, const Exponents& g) {
        parent_act(s, prefix_embed(g, cut, arity));
    };
    return ctx;
}

//! The quotient G/G_cut acting through the normal-form section. On genuine
//! G_cut-orbit superpositions this is the induced action; on other states it
//! is what the fixed-section device would do.
inline GroupActionContext quotient_context(const GroupActionContext& parent, std::size_t cut) {
    groups::QuotientMap qm = groups::quotient_map(parent.group, cut);
    GroupActionContext ctx{qm.group, {}, parent.label_count};
    auto parent_act = parent.act_state;
    ctx.act_state = [parent_act, qm](PureState& s, const Exponents& g) {
        parent_act(s, qm.section(g));
    };
    return ctx;
}

//! Abelian coordinates over a context whose group decomposes (all
//! conjugation relations trivial).
struct AbelianActionContext {
    AbelianGroupSpec spec;
    AbelianForm form;
    std::function<void(PureState&, const AbelianElement&)> act_state;
};

inline AbelianActionContext abelian_context(const GroupActionContext& ctx) {
    auto form = groups::abelian_decomposition(ctx.group);
    if (!form) throw InputError("abelian context: group does not decompose");
    AbelianActionContext out;
    out.spec = form->spec;
    out.form = *form;
    auto pc_act = ctx.act_state;
    AbelianForm f = *form;
    out.act_state = [pc_act, f](PureState& s, const AbelianElement& a) {
        pc_act(s, f.from_abelian(a));
    };
    return out;
}

}  // namespace htoc::orbit
