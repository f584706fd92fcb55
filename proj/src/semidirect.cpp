#include "htoc/semidirect.hpp"

namespace htoc::groups {

SemidirectZpnZ2::SemidirectZpnZ2(u32 p_, std::size_t n_) : p(p_), n(n_) {
    if (!fp::is_prime(p_)) throw InputError("SemidirectZpnZ2: p must be prime");
}

SemidirectZpnZ2::Element SemidirectZpnZ2::identity() const {
    return Element{fp::FpVector(p, n), 0};
}

SemidirectZpnZ2::Element SemidirectZpnZ2::make(std::vector<u32> coords, u32 b) const {
    if (coords.size() != n) throw InputError("SemidirectZpnZ2: wrong coordinate count");
    return Element{fp::FpVector(p, std::move(coords)), b & 1u};
}

SemidirectZpnZ2::Element SemidirectZpnZ2::multiply(const Element& a, const Element& c) const {
    fp::FpVector y = (a.b == 1) ? fp::negate(c.x) : c.x;
    return Element{fp::add(a.x, y), (a.b + c.b) & 1u};
}

SemidirectZpnZ2::Element SemidirectZpnZ2::inverse(const Element& a) const {
    // (x,b)^-1 = (-(-1)^b x, b)
    fp::FpVector nx = fp::negate(a.x);
    if (a.b == 1) nx = fp::negate(nx);
    return Element{std::move(nx), a.b};
}

u64 SemidirectZpnZ2::order() const {
    u64 acc = 2;
    for (std::size_t i = 0; i < n; ++i) acc *= p;
    return acc;
}

Exponents SemidirectZpnZ2::to_pc(const Element& a) const {
    // (x, b) = (0, b)((-1)^b x, 0)
    Exponents e(n + 1, 0);
    e[0] = a.b;
    fp::FpVector xs = (a.b == 1) ? fp::negate(a.x) : a.x;
    for (std::size_t i = 0; i < n; ++i) e[i + 1] = xs.coords[i];
    return e;
}

SemidirectZpnZ2::Element SemidirectZpnZ2::from_pc(const Exponents& e) const {
    if (e.size() != n + 1) throw InputError("SemidirectZpnZ2::from_pc: wrong arity");
    std::vector<u32> coords(e.begin() + 1, e.end());
    fp::FpVector x(p, std::move(coords));
    if (e[0] == 1) x = fp::negate(x);
    return Element{std::move(x), e[0]};
}

}  // namespace htoc::groups
