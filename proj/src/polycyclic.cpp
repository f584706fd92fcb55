#include "htoc/polycyclic.hpp"

#include <algorithm>

namespace htoc::groups {

PolycyclicGroupSpec::PolycyclicGroupSpec(std::vector<u32> relative_orders)
    : r_(std::move(relative_orders)) {
    for (u32 r : r_)
        if (!fp::is_prime(r)) throw InputError("PolycyclicGroupSpec: relative orders must be prime");
    power_.assign(r_.size(), Exponents(r_.size(), 0));
    conj_.resize(r_.size());
    for (std::size_t i = 0; i < r_.size(); ++i) {
        for (std::size_t j = i + 1; j < r_.size(); ++j) {
            Exponents triv(r_.size(), 0);
            triv[j] = 1;
            conj_[i].push_back(std::move(triv));
        }
    }
    blocks_ = {SeriesBlock{0, r_.size(), SeriesBlock::Kind::Small}};
    if (r_.empty()) blocks_.clear();
}

u64 PolycyclicGroupSpec::order() const {
    u64 acc = 1;
    for (u32 r : r_) acc *= r;
    return acc;
}

namespace {
void require_support_above(const Exponents& w, std::size_t i, const char* what) {
    for (std::size_t k = 0; k <= i && k < w.size(); ++k)
        if (w[k] != 0) throw InputError(std::string(what) + ": word must live on later generators");
}
}  // namespace

void PolycyclicGroupSpec::set_power_relation(std::size_t i, Exponents word) {
    if (i >= r_.size() || word.size() != r_.size())
        throw InputError("set_power_relation: bad index or arity");
    require_support_above(word, i, "power relation");
    check_element(word);
    power_[i] = std::move(word);
}

void PolycyclicGroupSpec::set_conjugation_relation(std::size_t i, std::size_t j, Exponents word) {
    if (i >= j || j >= r_.size() || word.size() != r_.size())
        throw InputError("set_conjugation_relation: bad indices or arity");
    require_support_above(word, i, "conjugation relation");
    check_element(word);
    conj_[i][j - i - 1] = std::move(word);
}

const Exponents& PolycyclicGroupSpec::conjugation_relation(std::size_t i, std::size_t j) const {
    if (i >= j || j >= r_.size()) throw InputError("conjugation_relation: bad indices");
    return conj_[i][j - i - 1];
}

void PolycyclicGroupSpec::set_blocks(std::vector<SeriesBlock> blocks) {
    std::size_t at = 0;
    for (const auto& b : blocks) {
        if (b.first != at || b.count == 0) throw InputError("set_blocks: blocks must partition the series");
        if (b.kind == SeriesBlock::Kind::Elementary) {
            for (std::size_t k = b.first; k < b.first + b.count; ++k)
                if (r_[k] != r_[b.first])
                    throw InputError("set_blocks: elementary block needs a uniform prime");
        }
        at += b.count;
    }
    if (at != r_.size()) throw InputError("set_blocks: blocks must cover every generator");
    blocks_ = std::move(blocks);
}

void PolycyclicGroupSpec::set_commutator_start(std::size_t i) {
    if (i > r_.size()) throw InputError("set_commutator_start: out of range");
    commutator_start_ = i;
}

Exponents PolycyclicGroupSpec::generator(std::size_t i) const {
    if (i >= r_.size()) throw InputError("generator: index out of range");
    Exponents e(r_.size(), 0);
    e[i] = 1;
    return e;
}

void PolycyclicGroupSpec::check_element(const Exponents& e) const {
    if (e.size() != r_.size()) throw InputError("polycyclic element: wrong arity");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= r_[i]) throw InputError("polycyclic element: exponent out of range");
}

Exponents PolycyclicGroupSpec::conj_word_by_gen(const Exponents& w, std::size_t g) const {
    // z_g^{-1} w z_g, for w supported on indices > g
    Exponents acc(r_.size(), 0);
    for (std::size_t j = g + 1; j < r_.size(); ++j) {
        if (w[j] == 0) continue;
        Exponents letter = conj_[g][j - g - 1];
        for (u32 c = 0; c < w[j]; ++c) acc = multiply(acc, letter);
    }
    return acc;
}

Exponents PolycyclicGroupSpec::mul_letter(Exponents res, std::size_t g, u32 e) const {
    Exponents tail(r_.size(), 0);
    for (std::size_t j = g + 1; j < r_.size(); ++j) {
        tail[j] = res[j];
        res[j] = 0;
    }
    Exponents moved = tail;
    for (u32 step = 0; step < e; ++step) moved = conj_word_by_gen(moved, g);

    u64 total = static_cast<u64>(res[g]) + e;
    res[g] = static_cast<u32>(total % r_[g]);
    u64 wraps = total / r_[g];

    Exponents suffix = moved;
    if (wraps > 0) suffix = multiply(power(power_[g], wraps), moved);
    for (std::size_t j = g + 1; j < r_.size(); ++j) res[j] = suffix[j];
    return res;
}

Exponents PolycyclicGroupSpec::multiply(const Exponents& a, const Exponents& b) const {
    check_element(a);
    check_element(b);
    Exponents res = a;
    for (std::size_t g = 0; g < r_.size(); ++g)
        if (b[g] != 0) res = mul_letter(std::move(res), g, b[g]);
    return res;
}

Exponents PolycyclicGroupSpec::power(const Exponents& a, u64 e) const {
    Exponents acc = identity();
    Exponents base = a;
    while (e) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

Exponents PolycyclicGroupSpec::inverse(const Exponents& a) const {
    return power(a, order() - 1);  // Lagrange
}

Exponents PolycyclicGroupSpec::conjugate(const Exponents& g, const Exponents& x) const {
    return multiply(multiply(inverse(x), g), x);
}

u64 PolycyclicGroupSpec::index_of(const Exponents& e) const {
    check_element(e);
    u64 idx = 0;
    for (std::size_t i = r_.size(); i-- > 0;) idx = idx * r_[i] + e[i];
    return idx;
}

Exponents PolycyclicGroupSpec::element_at(u64 index) const {
    Exponents e(r_.size());
    for (std::size_t i = 0; i < r_.size(); ++i) {
        e[i] = static_cast<u32>(index % r_[i]);
        index /= r_[i];
    }
    return e;
}

PolycyclicGroupSpec prefix_subgroup(const PolycyclicGroupSpec& spec, std::size_t i) {
    std::size_t m = spec.gen_count();
    if (i > m) throw InputError("prefix_subgroup: index out of range");
    std::vector<u32> orders(spec.relative_orders().begin() + i, spec.relative_orders().end());
    PolycyclicGroupSpec sub(std::move(orders));
    auto strip = [&](const Exponents& w) {
        return Exponents(w.begin() + i, w.end());
    };
    for (std::size_t a = i; a < m; ++a) {
        sub.set_power_relation(a - i, strip(spec.power_relation(a)));
        for (std::size_t b = a + 1; b < m; ++b)
            sub.set_conjugation_relation(a - i, b - i, strip(spec.conjugation_relation(a, b)));
    }
    std::vector<SeriesBlock> blocks;
    for (const auto& blk : spec.blocks()) {
        std::size_t lo = std::max(blk.first, i);
        std::size_t hi = blk.first + blk.count;
        if (hi <= lo) continue;
        blocks.push_back(SeriesBlock{lo - i, hi - lo, blk.kind});
    }
    if (m > i) sub.set_blocks(std::move(blocks));
    if (auto c = spec.commutator_start()) {
        sub.set_commutator_start(std::max(*c, i) - i);
    }
    return sub;
}

QuotientMap quotient_map(const PolycyclicGroupSpec& spec, std::size_t i) {
    std::size_t m = spec.gen_count();
    if (i > m) throw InputError("quotient_map: index out of range");
    // G_i normal in G: conjugates of later generators by earlier ones stay late
    for (std::size_t a = 0; a < i; ++a) {
        for (std::size_t b = std::max(a + 1, i); b < m; ++b) {
            const Exponents& w = spec.conjugation_relation(a, b);
            for (std::size_t k = 0; k < i; ++k)
                if (w[k] != 0) throw InputError("quotient_map: subgroup is not normal");
        }
    }
    std::vector<u32> orders(spec.relative_orders().begin(), spec.relative_orders().begin() + i);
    PolycyclicGroupSpec q(std::move(orders));
    auto crop = [&](const Exponents& w) {
        return Exponents(w.begin(), w.begin() + i);
    };
    for (std::size_t a = 0; a < i; ++a) {
        q.set_power_relation(a, crop(spec.power_relation(a)));
        for (std::size_t b = a + 1; b < i; ++b)
            q.set_conjugation_relation(a, b, crop(spec.conjugation_relation(a, b)));
    }
    std::vector<SeriesBlock> blocks;
    for (const auto& blk : spec.blocks()) {
        if (blk.first >= i) break;
        std::size_t hi = std::min(blk.first + blk.count, i);
        blocks.push_back(SeriesBlock{blk.first, hi - blk.first, blk.kind});
    }
    if (i > 0) q.set_blocks(std::move(blocks));
    if (auto c = spec.commutator_start()) {
        q.set_commutator_start(std::min(*c, i));
    }
    QuotientMap qm{std::move(q), i, m};
    return qm;
}

Exponents QuotientMap::project(const Exponents& parent) const {
    if (parent.size() != parent_arity) throw InputError("quotient project: wrong arity");
    return Exponents(parent.begin(), parent.begin() + cut);
}

Exponents QuotientMap::section(const Exponents& quotient) const {
    if (quotient.size() != cut) throw InputError("quotient section: wrong arity");
    Exponents out = quotient;
    out.resize(parent_arity, 0);
    return out;
}

void validate_presentation(const PolycyclicGroupSpec& spec, Rng& rng, std::size_t triples) {
    u64 n = spec.order();
    auto rand_elem = [&]() { return spec.element_at(rng.below(n)); };
    for (std::size_t t = 0; t < triples; ++t) {
        Exponents a = rand_elem(), b = rand_elem(), c = rand_elem();
        if (spec.multiply(spec.multiply(a, b), c) != spec.multiply(a, spec.multiply(b, c)))
            throw InternalError("presentation is not associative under collection");
    }
    for (std::size_t i = 0; i < spec.gen_count(); ++i) {
        Exponents g = spec.generator(i);
        if (spec.power(g, spec.relative_order(i)) != spec.power_relation(i))
            throw InternalError("power relation mismatch");
    }
    for (std::size_t t = 0; t < triples; ++t) {
        Exponents a = rand_elem();
        if (spec.multiply(a, spec.inverse(a)) != spec.identity())
            throw InternalError("inverse law failed");
    }
}

std::optional<AbelianForm> abelian_decomposition(const PolycyclicGroupSpec& spec) {
    std::size_t m = spec.gen_count();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Exponents triv(m, 0);
            triv[j] = 1;
            if (spec.conjugation_relation(i, j) != triv) return std::nullopt;
        }
    // power words must be trivial or a single next-link with exponent 1
    std::vector<std::optional<std::size_t>> next(m);
    std::vector<bool> pointed(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const Exponents& w = spec.power_relation(i);
        std::size_t nz = 0, at = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (w[k] != 0) {
                ++nz;
                at = k;
            }
        if (nz == 0) continue;
        if (nz > 1 || w[at] != 1 || pointed[at]) return std::nullopt;
        next[i] = at;
        pointed[at] = true;
    }
    AbelianForm form;
    form.gen_count = m;
    std::vector<u64> factors;
    for (std::size_t i = 0; i < m; ++i) {
        if (pointed[i]) continue;  // not a chain head
        std::vector<std::size_t> chain;
        std::vector<u32> orders;
        u64 size = 1;
        std::size_t cur = i;
        while (true) {
            chain.push_back(cur);
            orders.push_back(spec.relative_order(cur));
            size *= spec.relative_order(cur);
            if (!next[cur]) break;
            cur = *next[cur];
        }
        factors.push_back(size);
        form.chains.push_back(std::move(chain));
        form.chain_orders.push_back(std::move(orders));
    }
    form.spec = AbelianGroupSpec(std::move(factors));
    return form;
}

AbelianElement AbelianForm::to_abelian(const Exponents& e) const {
    // chain position k carries weight prod of the earlier relative orders,
    // since z_{i_{k}} = z_{i_0}^{that weight}
    AbelianElement out(chains.size(), 0);
    for (std::size_t f = 0; f < chains.size(); ++f) {
        u64 modulus = spec.factors[f];
        u64 weight = 1, val = 0;
        for (std::size_t pos = 0; pos < chains[f].size(); ++pos) {
            val = (val + weight * e[chains[f][pos]]) % modulus;
            weight *= chain_orders[f][pos];
        }
        out[f] = static_cast<u32>(val);
    }
    return out;
}

Exponents AbelianForm::from_abelian(const AbelianElement& a) const {
    Exponents out(gen_count, 0);
    for (std::size_t f = 0; f < chains.size(); ++f) {
        u64 rest = a[f];
        for (std::size_t pos = 0; pos < chains[f].size(); ++pos) {
            out[chains[f][pos]] = static_cast<u32>(rest % chain_orders[f][pos]);
            rest /= chain_orders[f][pos];
        }
    }
    return out;
}

PolycyclicGroupSpec elementary_abelian_pc(u32 p, std::size_t n) {
    PolycyclicGroupSpec spec(std::vector<u32>(n, p));
    if (n > 0) spec.set_blocks({SeriesBlock{0, n, SeriesBlock::Kind::Elementary}});
    return spec;
}

PolycyclicGroupSpec cyclic_pc(u64 prime_power) {
    if (!fp::is_prime_power(prime_power)) throw InputError("cyclic_pc: need a prime power");
    u64 q = prime_power;
    u32 p = 0;
    for (u32 d = 2;; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::vector<u32> orders;
    while (q > 1) {
        orders.push_back(p);
        q /= p;
    }
    PolycyclicGroupSpec spec(orders);
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
        Exponents w(orders.size(), 0);
        w[i + 1] = 1;
        spec.set_power_relation(i, std::move(w));
    }
    spec.set_blocks({SeriesBlock{0, orders.size(),
                                 orders.size() == 1 ? SeriesBlock::Kind::Elementary
                                                    : SeriesBlock::Kind::Small}});
    return spec;
}

PolycyclicGroupSpec semidirect_zpn_z2_pc(u32 p, std::size_t n) {
    if (!fp::is_prime(p)) throw InputError("semidirect_zpn_z2_pc: p must be prime");
    std::vector<u32> orders(n + 1, p);
    orders[0] = 2;
    PolycyclicGroupSpec spec(std::move(orders));
    for (std::size_t j = 1; j <= n; ++j) {
        Exponents w(n + 1, 0);
        w[j] = p - 1;  // z_0^-1 z_j z_0 = z_j^{-1}
        if (p == 2) w[j] = 1;
        spec.set_conjugation_relation(0, j, std::move(w));
    }
    std::vector<SeriesBlock> blocks{SeriesBlock{0, 1, SeriesBlock::Kind::Small}};
    if (n > 0) blocks.push_back(SeriesBlock{1, n, SeriesBlock::Kind::Elementary});
    spec.set_blocks(std::move(blocks));
    spec.set_commutator_start(1);
    return spec;
}

PolycyclicGroupSpec direct_product_pc(const PolycyclicGroupSpec& a, const PolycyclicGroupSpec& b) {
    std::vector<u32> orders = a.relative_orders();
    orders.insert(orders.end(), b.relative_orders().begin(), b.relative_orders().end());
    PolycyclicGroupSpec spec(std::move(orders));
    std::size_t na = a.gen_count(), nb = b.gen_count();
    auto lift_a = [&](const Exponents& w) {
        Exponents out(na + nb, 0);
        std::copy(w.begin(), w.end(), out.begin());
        return out;
    };
    auto lift_b = [&](const Exponents& w) {
        Exponents out(na + nb, 0);
        std::copy(w.begin(), w.end(), out.begin() + na);
        return out;
    };
    for (std::size_t i = 0; i < na; ++i) {
        spec.set_power_relation(i, lift_a(a.power_relation(i)));
        for (std::size_t j = i + 1; j < na; ++j)
            spec.set_conjugation_relation(i, j, lift_a(a.conjugation_relation(i, j)));
    }
    for (std::size_t i = 0; i < nb; ++i) {
        spec.set_power_relation(na + i, lift_b(b.power_relation(i)));
        for (std::size_t j = i + 1; j < nb; ++j)
            spec.set_conjugation_relation(na + i, na + j, lift_b(b.conjugation_relation(i, j)));
    }
    std::vector<SeriesBlock> blocks;
    for (const auto& blk : a.blocks()) blocks.push_back(blk);
    for (const auto& blk : b.blocks())
        blocks.push_back(SeriesBlock{blk.first + na, blk.count, blk.kind});
    spec.set_blocks(std::move(blocks));
    return spec;
}

}  // namespace htoc::groups
