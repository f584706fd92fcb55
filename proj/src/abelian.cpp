#include "htoc/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace htoc::groups {

AbelianGroupSpec::AbelianGroupSpec(std::vector<u64> f) : factors(std::move(f)) {
    for (u64 m : factors)
        if (!fp::is_prime_power(m))
            throw InputError("AbelianGroupSpec: factors must be prime powers >= 2");
}

u64 AbelianGroupSpec::order() const {
    u64 acc = 1;
    for (u64 m : factors) acc *= m;
    return acc;
}

AbelianElement AbelianGroupSpec::identity() const { return AbelianElement(factors.size(), 0); }

void AbelianGroupSpec::check_element(const AbelianElement& a) const {
    if (a.size() != factors.size()) throw InputError("abelian element: wrong arity");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= factors[i]) throw InputError("abelian element: coordinate out of range");
}

AbelianElement AbelianGroupSpec::add(const AbelianElement& a, const AbelianElement& b) const {
    check_element(a);
    check_element(b);
    AbelianElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<u32>((static_cast<u64>(a[i]) + b[i]) % factors[i]);
    return out;
}

AbelianElement AbelianGroupSpec::negate(const AbelianElement& a) const {
    check_element(a);
    AbelianElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<u32>((factors[i] - a[i]) % factors[i]);
    return out;
}

AbelianElement AbelianGroupSpec::scale(u64 c, const AbelianElement& a) const {
    check_element(a);
    AbelianElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<u32>((c % factors[i]) * a[i] % factors[i]);
    return out;
}

u64 AbelianGroupSpec::index_of(const AbelianElement& a) const {
    check_element(a);
    u64 idx = 0;
    for (std::size_t i = factors.size(); i-- > 0;) idx = idx * factors[i] + a[i];
    return idx;
}

AbelianElement AbelianGroupSpec::element_at(u64 index) const {
    AbelianElement out(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out[i] = static_cast<u32>(index % factors[i]);
        index /= factors[i];
    }
    return out;
}

AbelianGroupSpec zpn_spec(u32 p, std::size_t n) {
    return AbelianGroupSpec(std::vector<u64>(n, p));
}

cplx char_eval(const AbelianGroupSpec& spec, const AbelianElement& y, const AbelianElement& x) {
    spec.check_element(y);
    spec.check_element(x);
    constexpr double two_pi = 6.283185307179586476925286766559;
    double phase = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        phase += static_cast<double>(static_cast<u64>(y[i]) * x[i] % spec.factors[i]) /
                 static_cast<double>(spec.factors[i]);
    return std::polar(1.0, two_pi * phase);
}

bool char_is_trivial(const AbelianGroupSpec& spec, const AbelianElement& y,
                     const AbelianElement& x) {
    spec.check_element(y);
    spec.check_element(x);
    u64 lcm = 1;
    for (u64 m : spec.factors) lcm = std::lcm(lcm, m);
    u64 acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        u64 term = static_cast<u64>(y[i]) * x[i] % spec.factors[i];
        acc = (acc + term * (lcm / spec.factors[i])) % lcm;
    }
    return acc == 0;
}

std::vector<AbelianElement> generated_subgroup(const AbelianGroupSpec& spec,
                                               const std::vector<AbelianElement>& gens) {
    std::set<AbelianElement> seen;
    std::vector<AbelianElement> frontier{spec.identity()};
    seen.insert(spec.identity());
    while (!frontier.empty()) {
        std::vector<AbelianElement> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                AbelianElement s = spec.add(e, g);
                if (seen.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<AbelianElement>(seen.begin(), seen.end());
}

std::vector<AbelianElement> reduce_generators(const AbelianGroupSpec& spec,
                                              const std::vector<AbelianElement>& elements) {
    std::vector<AbelianElement> gens;
    std::set<AbelianElement> span{spec.identity()};
    for (const auto& e : elements) {
        if (span.count(e)) continue;
        gens.push_back(e);
        auto grown = generated_subgroup(spec, gens);
        span = std::set<AbelianElement>(grown.begin(), grown.end());
    }
    return gens;
}

bool same_subgroup(const AbelianGroupSpec& spec, const std::vector<AbelianElement>& a,
                   const std::vector<AbelianElement>& b) {
    return generated_subgroup(spec, a) == generated_subgroup(spec, b);
}

namespace {

bool uniform_prime(const AbelianGroupSpec& spec, u32& p) {
    if (spec.factors.empty()) return false;
    u64 m = spec.factors[0];
    if (!fp::is_prime(m)) return false;
    for (u64 f : spec.factors)
        if (f != m) return false;
    p = static_cast<u32>(m);
    return true;
}

}  // namespace

std::vector<AbelianElement> orthogonal_subgroup(const AbelianGroupSpec& spec,
                                                const std::vector<AbelianElement>& samples) {
    for (const auto& y : samples) spec.check_element(y);
    u32 p = 0;
    if (uniform_prime(spec, p)) {
        // elementary abelian: null space of the sample matrix
        fp::FpMatrix m(p, spec.factor_count());
        for (const auto& y : samples) m.append_row(std::vector<u32>(y.begin(), y.end()));
        std::vector<AbelianElement> gens;
        for (const auto& v : fp::null_space(m)) gens.push_back(v.coords);
        return gens;
    }
    // general desk-scale path: filter all elements, then shrink to generators
    std::vector<AbelianElement> members;
    for (u64 idx = 0; idx < spec.order(); ++idx) {
        AbelianElement x = spec.element_at(idx);
        bool ok = true;
        for (const auto& y : samples)
            if (!char_is_trivial(spec, y, x)) {
                ok = false;
                break;
            }
        if (ok) members.push_back(std::move(x));
    }
    return reduce_generators(spec, members);
}

std::vector<std::vector<u64>> all_subgroups(const AbelianGroupSpec& spec) {
    u64 n = spec.order();
    std::set<std::vector<u64>> found;
    std::vector<AbelianElement> elems;
    for (u64 i = 0; i < n; ++i) elems.push_back(spec.element_at(i));

    // closure of every subset of up to three generators covers desk-scale groups
    auto record = [&](const std::vector<AbelianElement>& gens) {
        auto sub = generated_subgroup(spec, gens);
        std::vector<u64> idx;
        for (const auto& e : sub) idx.push_back(spec.index_of(e));
        std::sort(idx.begin(), idx.end());
        found.insert(std::move(idx));
    };
    record({});
    for (u64 a = 0; a < n; ++a) {
        record({elems[a]});
        for (u64 b = a; b < n; ++b) {
            record({elems[a], elems[b]});
            for (u64 c = b; c < n; ++c) record({elems[a], elems[b], elems[c]});
        }
    }
    return std::vector<std::vector<u64>>(found.begin(), found.end());
}

}  // namespace htoc::groups
