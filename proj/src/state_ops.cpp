#include "htoc/state_ops.hpp"

#include <cmath>

namespace htoc::sim {

PureState zero_state(Layout layout, SimLimits limits) {
    BasisLabel zeros(layout.size(), 0);
    return PureState::basis(std::move(layout), std::move(zeros), limits);
}

PureState uniform_superposition(const AbelianGroupSpec& spec, SimLimits limits) {
    PureState s(Layout{Register::group_reg(spec)}, limits);
    u64 n = spec.order();
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (u64 i = 0; i < n; ++i) s.set_amplitude({i}, amp);
    s.check_norm();
    return s;
}

PureState tensor(const PureState& a, const PureState& b) {
    Layout layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    PureState out(std::move(layout), a.limits());
    for (const auto& [la, va] : a.amplitudes()) {
        for (const auto& [lb, vb] : b.amplitudes()) {
            BasisLabel l = la;
            l.insert(l.end(), lb.begin(), lb.end());
            out.set_amplitude(std::move(l), va * vb);
        }
    }
    return out;
}

PureState extend(const PureState& s, Register reg, u64 value) {
    if (value >= reg.size()) throw InputError("extend: value out of range");
    Layout layout = s.layout();
    layout.push_back(std::move(reg));
    PureState out(std::move(layout), s.limits());
    for (const auto& [l, v] : s.amplitudes()) {
        BasisLabel nl = l;
        nl.push_back(value);
        out.set_amplitude(std::move(nl), v);
    }
    return out;
}

PureState drop_definite_register(const PureState& s, std::size_t reg) {
    if (reg >= s.register_count()) throw InputError("drop_definite_register: no such register");
    u64 seen = 0;
    bool first = true;
    for (const auto& [l, v] : s.amplitudes()) {
        if (first) {
            seen = l[reg];
            first = false;
        } else if (l[reg] != seen) {
            throw InternalError("drop_definite_register: register is not definite");
        }
    }
    Layout layout;
    for (std::size_t i = 0; i < s.register_count(); ++i)
        if (i != reg) layout.push_back(s.layout()[i]);
    PureState out(std::move(layout), s.limits());
    for (const auto& [l, v] : s.amplitudes()) {
        BasisLabel nl;
        nl.reserve(l.size() - 1);
        for (std::size_t i = 0; i < l.size(); ++i)
            if (i != reg) nl.push_back(l[i]);
        out.set_amplitude(std::move(nl), v);
    }
    return out;
}

namespace {

void oracle_shift(PureState& s, const OracleFn& f, const std::vector<std::size_t>& src_regs,
                  std::size_t dst_reg, bool forward) {
    if (dst_reg >= s.register_count()) throw InputError("apply_oracle: no such register");
    for (std::size_t r : src_regs)
        if (r >= s.register_count() || r == dst_reg)
            throw InputError("apply_oracle: bad source registers");
    u64 m = s.layout()[dst_reg].size();
    PureState out(s.layout(), s.limits());
    std::vector<u64> src(src_regs.size());
    for (const auto& [l, v] : s.amplitudes()) {
        for (std::size_t i = 0; i < src_regs.size(); ++i) src[i] = l[src_regs[i]];
        u64 val = f(src);
        if (val >= m) throw InputError("apply_oracle: oracle value exceeds register size");
        BasisLabel nl = l;
        nl[dst_reg] = forward ? (nl[dst_reg] + val) % m : (nl[dst_reg] + m - val) % m;
        out.add_amplitude(std::move(nl), v);
    }
    out.check_norm();
    s = std::move(out);
}

}  // namespace

void apply_oracle(PureState& s, const OracleFn& f, const std::vector<std::size_t>& src_regs,
                  std::size_t dst_reg) {
    oracle_shift(s, f, src_regs, dst_reg, true);
}

void apply_oracle_inverse(PureState& s, const OracleFn& f,
                          const std::vector<std::size_t>& src_regs, std::size_t dst_reg) {
    oracle_shift(s, f, src_regs, dst_reg, false);
}

void map_labels(PureState& s, const std::function<BasisLabel(const BasisLabel&)>& fn) {
    PureState out(s.layout(), s.limits());
    for (const auto& [l, v] : s.amplitudes()) {
        BasisLabel nl = fn(l);
        if (std::abs(out.amplitude(nl)) != 0.0)
            throw InternalError("map_labels: relabeling is not a bijection");
        out.set_amplitude(std::move(nl), v);
    }
    s = std::move(out);
}

void apply_phase(PureState& s, const std::function<cplx(const BasisLabel&)>& phase) {
    PureState out(s.layout(), s.limits());
    for (const auto& [l, v] : s.amplitudes()) {
        cplx f = phase(l);
        if (std::abs(std::abs(f) - 1.0) > 1e-9) throw InputError("apply_phase: factor not unit");
        out.set_amplitude(l, v * f);
    }
    s = std::move(out);
}

namespace {

void qft_impl(PureState& s, std::size_t reg, bool inverse) {
    if (reg >= s.register_count()) throw InputError("qft: no such register");
    const Register& r = s.layout()[reg];
    if (r.kind != Register::Kind::Group) throw InputError("qft: register is not a group register");
    const AbelianGroupSpec& spec = r.group;
    u64 n = spec.order();
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    PureState out(s.layout(), s.limits());
    for (const auto& [l, v] : s.amplitudes()) {
        AbelianElement x = spec.element_at(l[reg]);
        for (u64 yi = 0; yi < n; ++yi) {
            AbelianElement y = spec.element_at(yi);
            cplx chi = groups::char_eval(spec, y, x);
            if (inverse) chi = std::conj(chi);
            BasisLabel nl = l;
            nl[reg] = yi;
            out.add_amplitude(std::move(nl), v * chi * scale);
        }
    }
    out.prune();
    out.check_norm();
    s = std::move(out);
}

}  // namespace

void qft(PureState& s, std::size_t reg) { qft_impl(s, reg, false); }
void qft_inverse(PureState& s, std::size_t reg) { qft_impl(s, reg, true); }

std::map<u64, double> marginal(const PureState& s, std::size_t reg) {
    if (reg >= s.register_count()) throw InputError("marginal: no such register");
    std::map<u64, double> out;
    for (const auto& [l, v] : s.amplitudes()) out[l[reg]] += std::norm(v);
    return out;
}

std::map<std::vector<u64>, double> joint_marginal(const PureState& s,
                                                  const std::vector<std::size_t>& regs) {
    std::map<std::vector<u64>, double> out;
    std::vector<u64> key(regs.size());
    for (const auto& [l, v] : s.amplitudes()) {
        for (std::size_t i = 0; i < regs.size(); ++i) {
            if (regs[i] >= l.size()) throw InputError("joint_marginal: no such register");
            key[i] = l[regs[i]];
        }
        out[key] += std::norm(v);
    }
    return out;
}

u64 measure(PureState& s, std::size_t reg, Rng& rng) {
    std::map<u64, double> dist = marginal(s, reg);
    if (dist.empty()) throw InternalError("measure: empty state");
    double draw = rng.real();
    double acc = 0;
    u64 outcome = dist.rbegin()->first;
    for (const auto& [val, p] : dist) {
        acc += p;
        if (draw < acc) {
            outcome = val;
            break;
        }
    }
    PureState out(s.layout(), s.limits());
    for (const auto& [l, v] : s.amplitudes())
        if (l[reg] == outcome) out.set_amplitude(l, v);
    out.renormalize();
    s = std::move(out);
    return outcome;
}

cplx overlap(const PureState& a, const PureState& b) {
    if (a.layout() != b.layout()) throw InputError("overlap: layouts differ");
    const PureState& small = a.support_size() <= b.support_size() ? a : b;
    const PureState& big = a.support_size() <= b.support_size() ? b : a;
    bool swapped = &small == &b;
    cplx acc = 0;
    for (const auto& [l, v] : small.amplitudes()) {
        cplx w = big.amplitude(l);
        acc += swapped ? std::conj(w) * v : std::conj(v) * w;
    }
    return acc;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(overlap(a, b));
}

}  // namespace htoc::sim
