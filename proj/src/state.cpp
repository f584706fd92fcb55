#include "htoc/state.hpp"

#include <cmath>

namespace htoc::sim {

Register Register::group_reg(AbelianGroupSpec spec) {
    Register r;
    r.kind = Kind::Group;
    r.group = std::move(spec);
    return r;
}

Register Register::value_reg(u64 count) {
    if (count == 0) throw InputError("Register: empty value set");
    Register r;
    r.kind = Kind::Values;
    r.value_count = count;
    return r;
}

u64 Register::size() const {
    return kind == Kind::Group ? group.order() : value_count;
}

PureState::PureState(Layout layout, SimLimits limits)
    : layout_(std::move(layout)), limits_(limits) {}

PureState PureState::basis(Layout layout, BasisLabel label, SimLimits limits) {
    PureState s(std::move(layout), limits);
    s.check_label(label);
    s.amps_[std::move(label)] = 1.0;
    return s;
}

void PureState::check_label(const BasisLabel& label) const {
    if (label.size() != layout_.size()) throw InputError("basis label: wrong register count");
    for (std::size_t i = 0; i < label.size(); ++i)
        if (label[i] >= layout_[i].size()) throw InputError("basis label: index out of range");
}

void PureState::enforce_cap() const {
    if (amps_.size() > limits_.max_support)
        throw ResourceError("state support exceeds the configured cap");
}

double PureState::norm_sq() const {
    double acc = 0;
    for (const auto& [label, a] : amps_) acc += std::norm(a);
    return acc;
}

cplx PureState::amplitude(const BasisLabel& label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? cplx(0, 0) : it->second;
}

void PureState::set_amplitude(const BasisLabel& label, cplx a) {
    check_label(label);
    if (std::abs(a) < limits_.prune_eps) {
        amps_.erase(label);
        return;
    }
    amps_[label] = a;
    enforce_cap();
}

void PureState::add_amplitude(const BasisLabel& label, cplx a) {
    check_label(label);
    auto [it, inserted] = amps_.try_emplace(label, 0.0);
    it->second += a;
    if (std::abs(it->second) < limits_.prune_eps) amps_.erase(it);
    enforce_cap();
}

void PureState::prune() {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) < limits_.prune_eps)
            it = amps_.erase(it);
        else
            ++it;
    }
}

void PureState::renormalize() {
    double n = std::sqrt(norm_sq());
    if (n <= 0) throw InternalError("cannot renormalize the zero state");
    for (auto& [label, a] : amps_) a /= n;
}

void PureState::check_norm() const {
    if (std::abs(norm_sq() - 1.0) > limits_.norm_tol)
        throw InternalError("state norm drifted beyond tolerance");
}

std::map<BasisLabel, cplx> PureState::sorted_amplitudes() const {
    return std::map<BasisLabel, cplx>(amps_.begin(), amps_.end());
}

}  // namespace htoc::sim
