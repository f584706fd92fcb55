#include "htoc/sym_power.hpp"

#include <numeric>
#include <string>

namespace htoc::fp {

u32 MonomialIndex::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

namespace {

std::string key_of(const std::vector<u32>& exps) {
    std::string key;
    key.reserve(exps.size() * 3);
    for (u32 e : exps) {
        key += std::to_string(e);
        key += ',';
    }
    return key;
}

void enumerate(std::size_t n, u32 remaining, std::vector<u32>& cur,
               std::vector<MonomialIndex>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(remaining);
        out.push_back(MonomialIndex{cur});
        cur.pop_back();
        return;
    }
    for (u32 e = remaining + 1; e-- > 0;) {  // descending lex
        cur.push_back(e);
        enumerate(n, remaining - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, u32 k) : n_(n), k_(k) {
    if (n == 0) throw InputError("MonomialBasis: need at least one variable");
    std::vector<u32> cur;
    enumerate(n, k, cur, items_);
    for (std::size_t i = 0; i < items_.size(); ++i) lookup_[key_of(items_[i].exponents)] = i;
}

std::size_t MonomialBasis::index_of(const std::vector<u32>& exponents) const {
    auto it = lookup_.find(key_of(exponents));
    if (it == lookup_.end()) throw InputError("MonomialBasis: exponent vector not in basis");
    return it->second;
}

std::vector<MonomialIndex> monomial_basis(std::size_t n, u32 k) {
    return MonomialBasis(n, k).items();
}

u64 binomial(u64 n, u64 r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    u64 acc = 1;
    for (u64 i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;  // exact at every step
    }
    return acc;
}

u64 multinomial(u32 k, const std::vector<u32>& parts) {
    u64 acc = 1;
    u32 left = k;
    for (u32 e : parts) {
        acc *= binomial(left, e);
        left -= e;
    }
    if (left != 0) throw InputError("multinomial: parts do not sum to k");
    return acc;
}

SymPowerVector sym_power(const FpVector& y, u32 k) {
    return sym_power(y, MonomialBasis(y.size(), k));
}

SymPowerVector sym_power(const FpVector& y, const MonomialBasis& basis) {
    if (y.size() != basis.n()) throw InputError("sym_power: dimension mismatch");
    SymPowerVector out{y.p, basis.n(), basis.k(), std::vector<u32>(basis.size(), 0)};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.at(i).exponents;
        u32 c = static_cast<u32>(multinomial(basis.k(), e) % y.p);
        for (std::size_t j = 0; j < e.size() && c != 0; ++j)
            c = mul_mod(c, pow_mod(y.coords[j], e[j], y.p), y.p);
        out.coords[i] = c;
    }
    return out;
}

SymPowerVector star_vector(const FpVector& u, u32 k) {
    return star_vector(u, MonomialBasis(u.size(), k));
}

SymPowerVector star_vector(const FpVector& u, const MonomialBasis& basis) {
    if (u.size() != basis.n()) throw InputError("star_vector: dimension mismatch");
    SymPowerVector out{u.p, basis.n(), basis.k(), std::vector<u32>(basis.size(), 0)};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.at(i).exponents;
        u32 c = 1;
        for (std::size_t j = 0; j < e.size(); ++j) c = mul_mod(c, pow_mod(u.coords[j], e[j], u.p), u.p);
        out.coords[i] = c;
    }
    return out;
}

u32 dot(const SymPowerVector& a, const SymPowerVector& b) {
    if (a.p != b.p || a.n != b.n || a.k != b.k)
        throw InputError("SymPowerVector dot: shape mismatch");
    u64 acc = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        acc += static_cast<u64>(a.coords[i]) * b.coords[i];
    return static_cast<u32>(acc % a.p);
}

}  // namespace htoc::fp
