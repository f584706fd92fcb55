#include "htoc/stabilizer_abelian.hpp"

#include <cmath>

namespace htoc::orbit {

using sim::Register;

u64 stabilizer_sample_count(u64 group_order, double eps, u32 c0) {
    if (eps <= 0.0 || eps >= 1.0) throw InputError("stabilizer: eps must be in (0,1)");
    double lg = std::ceil(std::log2(static_cast<double>(group_order)));
    double le = std::ceil(std::log2(1.0 / eps));
    u64 count = static_cast<u64>(c0 * std::max(1.0, lg) * std::max(1.0, le));
    return std::max<u64>(count, 1);
}

PureState action_sampling_state(const AbelianActionContext& ctx, const PureState& copy) {
    if (copy.layout().size() != 1) throw InputError("sampling: copies must be single-register");
    u64 order = ctx.spec.order();
    sim::Layout layout = {Register::group_reg(ctx.spec), copy.layout()[0]};
    PureState joint(layout, copy.limits());
    double scale = 1.0 / std::sqrt(static_cast<double>(order));
    for (u64 x = 0; x < order; ++x) {
        PureState moved = copy;
        ctx.act_state(moved, ctx.spec.element_at(x));
        for (const auto& [label, amp] : moved.amplitudes()) {
            joint.add_amplitude({x, label[0]}, amp * scale);
        }
    }
    joint.check_norm();
    return joint;
}

AbelianElement action_fourier_sample(const AbelianActionContext& ctx, PureState copy, Rng& rng) {
    PureState joint = action_sampling_state(ctx, copy);
    sim::qft(joint, 0);
    u64 y = sim::measure(joint, 0, rng);
    return ctx.spec.element_at(y);
}

StabilizerOutcome stabilizer_abelian(const AbelianActionContext& ctx, CopyPool& copies, double eps,
                                     u32 c0, Rng& rng) {
    StabilizerOutcome out;
    if (ctx.spec.order() == 1) return out;

    u64 count = stabilizer_sample_count(ctx.spec.order(), eps, c0);
    std::vector<AbelianElement> samples;
    samples.reserve(count);
    for (u64 i = 0; i < count; ++i) {
        samples.push_back(action_fourier_sample(ctx, copies.take(), rng));
    }
    out.stats.stab_samples = count;
    out.stats.copies_consumed = count;
    out.generators = groups::orthogonal_subgroup(ctx.spec, samples);
    return out;
}

StabilizerOutcome stabilizer_abelian_on_label(const QuantumAction& action, u64 label, double eps,
                                              u32 c0, u64 copy_budget, Rng& rng) {
    GroupActionContext ctx = top_context(action);
    AbelianActionContext ab = abelian_context(ctx);
    CopyPool pool = CopyPool::from_basis(action.label_count(), label, copy_budget);
    return stabilizer_abelian(ab, pool, eps, c0, rng);
}

}  // namespace htoc::orbit
