#include "htoc/ht_sampler.hpp"

#include <cmath>
#include <numbers>

#include "htoc/sampling.hpp"

namespace htoc::ht {

using sim::BasisLabel;
using sim::Layout;
using sim::Register;

std::vector<ClassProb> exact_sample_distribution(u32 p, std::size_t n, const FpVector& u) {
    if (u.is_zero()) throw InputError("exact_sample_distribution: u must be nonzero");
    if (u.p != p || u.size() != n) throw InputError("exact_sample_distribution: u shape mismatch");
    std::vector<ClassProb> table;
    for (u32 c = 0; c < 2; ++c) {
        for (u32 k = 0; k < p; ++k) {
            double cosv = std::cos(2.0 * std::numbers::pi * k / p);
            double prob = (1.0 + (c == 0 ? cosv : -cosv)) / (2.0 * p);
            table.push_back({k, c, prob});
        }
    }
    return table;
}

std::map<std::pair<u64, u32>, double> exact_joint_table(const HiddenTranslationInstance& inst) {
    u32 p = inst.p();
    double dom = static_cast<double>(inst.domain_size());
    std::map<std::pair<u64, u32>, double> table;
    for (u64 yi = 0; yi < inst.domain_size(); ++yi) {
        u32 k = fp::dot(inst.vector_at(yi), inst.planted_u());
        double cosv = std::cos(2.0 * std::numbers::pi * k / p);
        for (u32 c = 0; c < 2; ++c) {
            table[{yi, c}] = (1.0 + (c == 0 ? cosv : -cosv)) / (2.0 * dom);
        }
    }
    return table;
}

namespace {

void check_dual_layout(const PureState& s, const HiddenTranslationInstance& inst) {
    const Layout& lay = s.layout();
    if (lay.size() != 4 || lay[0].kind != Register::Kind::Group ||
        lay[1].kind != Register::Kind::Group || lay[0].group != inst.domain_spec() ||
        lay[1].group.order() != 2) {
        throw InputError("dual oracle: expected layout [Z_p^n, Z_2, value, value]");
    }
}

//! Relabel register 0 by x -> -x on the specified condition of register 1.
void negate_domain_register(PureState& s, const HiddenTranslationInstance& inst,
                            const std::function<bool(u64)>& when_bit) {
    const auto& spec = inst.domain_spec();
    sim::map_labels(s, [&](const BasisLabel& label) {
        BasisLabel out = label;
        if (when_bit(label[1])) out[0] = spec.index_of(spec.negate(spec.element_at(label[0])));
        return out;
    });
}

}  // namespace

void apply_dual_oracle_program(PureState& s, const HiddenTranslationInstance& inst) {
    check_dual_layout(s, inst);
    // |x,b,.,.> -> |(-1)^b x, b,.,.>
    negate_domain_register(s, inst, [](u64 b) { return b == 1; });
    // second register += f0(first)
    sim::apply_oracle(
        s, [&](const std::vector<u64>& src) { return inst.f0_at(src[0]); }, {0}, 2);
    // negate first register unconditionally
    negate_domain_register(s, inst, [](u64) { return true; });
    // third register += f1(first)
    sim::apply_oracle(
        s, [&](const std::vector<u64>& src) { return inst.f1_at(src[0]); }, {0}, 3);
    // restore: multiply by (-1)^(b+1)
    negate_domain_register(s, inst, [](u64 b) { return b == 0; });
    // swap value registers when b = 1
    sim::map_labels(s, [&](const BasisLabel& label) {
        BasisLabel out = label;
        if (label[1] == 1) std::swap(out[2], out[3]);
        return out;
    });
}

void apply_dual_oracle_direct(PureState& s, const HiddenTranslationInstance& inst) {
    check_dual_layout(s, inst);
    const auto& spec = inst.domain_spec();
    sim::apply_oracle(
        s,
        [&](const std::vector<u64>& src) {
            return src[1] == 0 ? inst.f0_at(src[0]) : inst.f1_at(src[0]);
        },
        {0, 1}, 2);
    sim::apply_oracle(
        s,
        [&](const std::vector<u64>& src) {
            u64 neg = spec.index_of(spec.negate(spec.element_at(src[0])));
            return src[1] == 0 ? inst.f1_at(neg) : inst.f0_at(neg);
        },
        {0, 1}, 3);
}

namespace {

PureState pre_oracle_state(const HiddenTranslationInstance& inst, bool dual, SimLimits limits) {
    PureState s = sim::uniform_superposition(inst.domain_spec(), limits);
    s = sim::tensor(s, sim::uniform_superposition(groups::AbelianGroupSpec({2}), limits));
    s = sim::extend(s, Register::value_reg(inst.label_count()), 0);
    if (dual) s = sim::extend(s, Register::value_reg(inst.label_count()), 0);
    return s;
}

}  // namespace

PureState ht_post_qft_state(const HiddenTranslationInstance& inst, SimLimits limits) {
    PureState s = pre_oracle_state(inst, false, limits);
    sim::apply_oracle(
        s,
        [&](const std::vector<u64>& src) {
            return src[1] == 0 ? inst.f0_at(src[0]) : inst.f1_at(src[0]);
        },
        {0, 1}, 2);
    sim::qft(s, 0);
    sim::qft(s, 1);
    return s;
}

PureState ht_post_qft_state_dual(const HiddenTranslationInstance& inst, SimLimits limits) {
    PureState s = pre_oracle_state(inst, true, limits);
    apply_dual_oracle_program(s, inst);
    sim::qft(s, 0);
    sim::qft(s, 1);
    return s;
}

HtSampler::HtSampler(const HiddenTranslationInstance& inst, SamplerMode mode, SimLimits limits)
    : inst_(inst), mode_(mode) {
    if (mode_ == SamplerMode::Statevector) {
        PureState s = ht_post_qft_state(inst, limits);
        auto joint = sim::joint_marginal(s, {0, 1});
        double acc = 0.0;
        for (const auto& [label, prob] : joint) {
            std::pair<u64, u32> key{label[0], static_cast<u32>(label[1])};
            born_[key] = prob;
            acc += prob;
            cumulative_.push_back({key, acc});
        }
    } else {
        if (inst.planted_u().is_zero()) {
            throw InputError("shortcut sampler: requires a nonzero translation");
        }
        classes_ = exact_sample_distribution(inst.p(), inst.n(), inst.planted_u());
    }
}

const std::map<std::pair<u64, u32>, double>& HtSampler::born_table() const {
    if (mode_ != SamplerMode::Statevector) {
        throw InputError("born_table: statevector mode only");
    }
    return born_;
}

SampleRecord HtSampler::draw(Rng& rng) {
    if (mode_ == SamplerMode::Statevector) {
        double draw = rng.real();
        std::pair<u64, u32> key = cumulative_.back().first;
        for (const auto& [k, acc] : cumulative_) {
            if (draw < acc) {
                key = k;
                break;
            }
        }
        return {inst_.vector_at(key.first), key.second};
    }

    // class draw, then a uniform member of V_k = { y : y . u = k }
    double draw = rng.real();
    double acc = 0.0;
    ClassProb chosen = classes_.back();
    for (const ClassProb& row : classes_) {
        acc += row.prob;
        if (draw < acc) {
            chosen = row;
            break;
        }
    }
    u32 p = inst_.p();
    const FpVector& u = inst_.planted_u();
    std::size_t n = inst_.n();
    std::size_t j = 0;
    while (u.coords[j] == 0) ++j;
    FpVector y(p, n, 0);
    u32 partial = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        y.coords[i] = static_cast<u32>(rng.below(p));
        partial = fp::add_mod(partial, fp::mul_mod(y.coords[i], u.coords[i], p), p);
    }
    y.coords[j] = fp::mul_mod(fp::sub_mod(chosen.k, partial, p), fp::inv_mod(u.coords[j], p), p);
    return {y, chosen.c};
}

}  // namespace htoc::ht
