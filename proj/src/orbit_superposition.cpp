#include "htoc/orbit_superposition.hpp"

#include <cmath>
#include <utility>

namespace htoc::orbit {

u64 act_label(const GroupActionContext& ctx, const Exponents& g, u64 label) {
    PureState s = PureState::basis({sim::Register::value_reg(ctx.label_count)}, {label});
    ctx.act_state(s, g);
    if (s.support_size() != 1) {
        throw InternalError("act_label: action does not permute basis labels");
    }
    const auto& [lab, amp] = *s.amplitudes().begin();
    if (std::abs(std::abs(amp) - 1.0) > 1e-9) throw InternalError("act_label: non-unit amplitude");
    return lab[0];
}

LabelCosetSolver transparent_label_solver() {
    return [](const GroupActionContext& parent, std::size_t cut, u64 target,
              u64 base) -> OrbitCosetResult {
        OrbitCosetResult res;
        res.stats.exhaustive_calls = 1;
        groups::PolycyclicGroupSpec sub = groups::prefix_subgroup(parent.group, cut);
        std::size_t arity = parent.group.gen_count();
        for (u64 idx = 0; idx < sub.order(); ++idx) {
            Exponents g = prefix_embed(sub.element_at(idx), cut, arity);
            if (act_label(parent, g, base) == target) {
                res.status = OrbitCosetResult::Status::Found;
                res.u = std::move(g);
                return res;
            }
        }
        return res;
    };
}

OrbitStepOutcome orbit_superposition_step(const GroupActionContext& ctx, std::size_t kcut,
                                          u64 phi_label, std::vector<PureState> copies,
                                          const LabelCosetSolver& solver, Rng& rng) {
    ctx.check();
    if (copies.empty()) throw InputError("orbit superposition step: no copies given");
    for (const PureState& c : copies) {
        if (c.layout().size() != 1 || c.layout() != copies.front().layout()) {
            throw InputError("orbit superposition step: copies must share one register");
        }
    }
    u32 r = ctx.group.relative_order(kcut);
    Exponents z = ctx.group.generator(kcut);

    OrbitStepOutcome out;
    std::vector<Exponents> z_pow(r);
    for (u32 e = 0; e < r; ++e) z_pow[e] = ctx.group.power(z, e);

    // Attach a cyclic control, act z^e conditionally, transform the control
    // and measure the branch value (later steps depend on it classically
    // only, so measuring commutes with everything that follows).
    AbelianGroupSpec ctrl({r});
    double inv_sqrt_r = 1.0 / std::sqrt(static_cast<double>(r));
    for (PureState& copy : copies) {
        sim::Layout joint = {copy.layout()[0], sim::Register::group_reg(ctrl)};
        PureState s(joint, copy.limits());
        for (u32 e = 0; e < r; ++e) {
            PureState moved = copy;
            ctx.act_state(moved, z_pow[e]);
            for (const auto& [lab, amp] : moved.amplitudes()) {
                s.add_amplitude({lab[0], e}, amp * inv_sqrt_r);
            }
        }
        s.check_norm();
        sim::qft(s, 1);
        u64 j = sim::measure(s, 1, rng);
        out.j_values.push_back(j);
        copy = sim::drop_definite_register(s, 1);
    }

    std::size_t ref_idx = copies.size();
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (out.j_values[c] != 0) {
            ref_idx = c;
            break;
        }
    }
    if (ref_idx == copies.size()) {
        out.copies = std::move(copies);  // every branch is zero: all copies done
        return out;
    }

    out.spent_reference = true;
    u32 j0 = static_cast<u32>(out.j_values[ref_idx]);
    PureState ref = std::move(copies[ref_idx]);

    // Cancel the phases of the other nonzero branches against the reference:
    // for each component label find g with g . phi = label, raise it to
    // f = j / j0, and read the eigenvalue it kicks onto the reference. The
    // solve runs in the group generated from kcut on: when the branch orbits
    // are distinct, any solution's leading exponent matches the branch, so
    // one call finds the exponent and the subgroup part together.
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (c == ref_idx || out.j_values[c] == 0) continue;
        u32 f = fp::mul_mod(static_cast<u32>(out.j_values[c]), fp::inv_mod(j0, r), r);
        PureState& st = copies[c];
        for (const auto& [lab, amp] : st.sorted_amplitudes()) {
            OrbitCosetResult sub = solver(ctx, kcut, lab[0], phi_label);
            out.stats.absorb(sub.stats);
            if (!sub.found()) {
                ++out.skipped_corrections;  // leaves this component's phase uncancelled
                continue;
            }
            Exponents h = ctx.group.power(sub.u, f);
            PureState href = ref;
            ctx.act_state(href, h);
            sim::cplx lambda = sim::overlap(ref, href);
            if (std::abs(std::abs(lambda) - 1.0) > 1e-6) {
                throw InternalError(
                    "orbit superposition: reference is not an eigenvector; action data is "
                    "inconsistent");
            }
            st.set_amplitude(lab, amp * lambda);
        }
        st.check_norm();
    }
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (c != ref_idx) out.copies.push_back(std::move(copies[c]));
    }
    return out;
}

u64 orbit_superposition_copy_need(const groups::PolycyclicGroupSpec& spec, std::size_t s) {
    return s + spec.gen_count();  // worst case: one reference spent per series step
}

OrbitSuperpositionOutcome orbit_superposition(const GroupActionContext& ctx, u64 phi_label,
                                              std::size_t s, CopyPool& phi_pool,
                                              const LabelCosetSolver& solver, Rng& rng) {
    ctx.check();
    if (s == 0) throw InputError("orbit superposition: need a positive copy count");
    std::size_t m = ctx.group.gen_count();

    OrbitSuperpositionOutcome out;
    out.stats.superposition_runs = 1;
    u64 need = orbit_superposition_copy_need(ctx.group, s);
    std::vector<PureState> copies;
    copies.reserve(need);
    for (u64 i = 0; i < need; ++i) copies.push_back(phi_pool.take());
    out.stats.copies_consumed += need;

    for (std::size_t cut = m; cut >= 1; --cut) {
        OrbitStepOutcome step =
            orbit_superposition_step(ctx, cut - 1, phi_label, std::move(copies), solver, rng);
        copies = std::move(step.copies);
        out.skipped_corrections += step.skipped_corrections;
        out.stats.absorb(step.stats);
    }
    if (copies.size() < s) throw InternalError("orbit superposition: copy accounting failed");
    out.copies = std::move(copies);
    return out;
}

}  // namespace htoc::orbit
