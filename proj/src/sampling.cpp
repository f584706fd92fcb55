#include "htoc/sampling.hpp"

#include <cmath>

namespace htoc::sim {

PureState fourier_sampling_state(const AbelianGroupSpec& spec, const OracleFn& f, u64 value_count,
                                 SimLimits limits) {
    PureState s = uniform_superposition(spec, limits);
    s = extend(s, Register::value_reg(value_count), 0);
    apply_oracle(s, f, {0}, 1);
    qft(s, 0);
    return s;
}

AbelianElement fourier_sampling(const AbelianGroupSpec& spec, const OracleFn& f, u64 value_count,
                                Rng& rng, SimLimits limits) {
    PureState s = fourier_sampling_state(spec, f, value_count, limits);
    u64 idx = measure(s, 0, rng);
    return spec.element_at(idx);
}

AbelianElement sample_group_register(const PureState& s, const AbelianGroupSpec& spec,
                                     std::size_t reg, Rng& rng) {
    std::map<u64, double> dist = marginal(s, reg);
    if (dist.empty()) throw InternalError("sample_group_register: empty state");
    double draw = rng.real();
    double acc = 0.0;
    u64 chosen = dist.rbegin()->first;
    for (const auto& [value, prob] : dist) {
        acc += prob;
        if (draw < acc) {
            chosen = value;
            break;
        }
    }
    return spec.element_at(chosen);
}

bool swap_test(const PureState& a, const PureState& b, Rng& rng) {
    double fid = fidelity(a, b);
    double accept = 0.5 * (1.0 + fid);
    return rng.bernoulli(accept);
}

std::size_t equality_test_rounds(double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw InputError("equality_test: eps must be in (0,1)");
    return static_cast<std::size_t>(std::ceil(std::log2(1.0 / eps)));
}

bool equality_test(const PureState& a, const PureState& b, double eps, Rng& rng) {
    std::size_t rounds = equality_test_rounds(eps);
    for (std::size_t i = 0; i < rounds; ++i) {
        if (!swap_test(a, b, rng)) return false;
    }
    return true;
}

}  // namespace htoc::sim
