#include "htoc/action.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace htoc::orbit {

using sim::BasisLabel;
using sim::Register;

QuantumAction::QuantumAction(PolycyclicGroupSpec group, u64 label_count,
                             std::vector<std::vector<u64>> generator_permutations,
                             std::string name)
    : group_(std::move(group)),
      labels_(label_count),
      perm_(std::move(generator_permutations)),
      name_(std::move(name)) {
    if (labels_ == 0) throw InputError("action: empty label set");
    if (perm_.size() != group_.gen_count()) {
        throw InputError("action: need one permutation per generator");
    }
    for (const auto& p : perm_) {
        if (p.size() != labels_) throw InputError("action: permutation arity mismatch");
        std::vector<bool> hit(labels_, false);
        for (u64 v : p) {
            if (v >= labels_ || hit[v]) throw InputError("action: table is not a permutation");
            hit[v] = true;
        }
    }
}

u64 QuantumAction::act(const Exponents& g, u64 label) const {
    group_.check_element(g);
    if (label >= labels_) throw InputError("action: label out of range");
    ++queries_;
    // normal form z_0^{e_0} .. z_{m-1}^{e_{m-1}} acts rightmost factor first
    for (std::size_t i = group_.gen_count(); i-- > 0;) {
        for (u32 rep = 0; rep < g[i]; ++rep) label = perm_[i][label];
    }
    return label;
}

u64 QuantumAction::act_index(u64 g_index, u64 label) const {
    return act(group_.element_at(g_index), label);
}

void QuantumAction::act_state(PureState& s, std::size_t reg, const Exponents& g) const {
    group_.check_element(g);
    ++queries_;
    sim::map_labels(s, [&](const BasisLabel& label) {
        BasisLabel out = label;
        u64 v = label[reg];
        for (std::size_t i = group_.gen_count(); i-- > 0;) {
            for (u32 rep = 0; rep < g[i]; ++rep) v = perm_[i][v];
        }
        out[reg] = v;
        return out;
    });
}

PureState QuantumAction::expand_label(u64 label) const {
    if (!expander_) throw InputError("action: no label expander installed");
    if (label >= labels_) throw InputError("action: label out of range");
    return expander_(label);
}

void QuantumAction::validate(Rng& rng, std::size_t pairs) const {
    u64 saved = queries_;
    const Exponents id = group_.identity();
    for (u64 l = 0; l < labels_; ++l) {
        if (act(id, l) != l) throw InternalError("action: identity does not fix labels");
    }
    for (std::size_t trial = 0; trial < pairs; ++trial) {
        Exponents a = group_.element_at(rng.below(group_.order()));
        Exponents b = group_.element_at(rng.below(group_.order()));
        Exponents ab = group_.multiply(a, b);
        for (u64 l = 0; l < labels_; ++l) {
            if (act(ab, l) != act(a, act(b, l))) {
                throw InternalError("action: homomorphism law violated");
            }
        }
    }
    queries_ = saved;
}

std::vector<u64> QuantumAction::orbit_of(u64 label) const {
    u64 saved = queries_;
    std::set<u64> seen = {label};
    std::vector<u64> frontier = {label};
    while (!frontier.empty()) {
        std::vector<u64> next;
        for (u64 l : frontier) {
            for (std::size_t i = 0; i < group_.gen_count(); ++i) {
                u64 img = perm_[i][l];
                if (seen.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    queries_ = saved;
    return std::vector<u64>(seen.begin(), seen.end());
}

std::vector<u64> QuantumAction::stabilizer_of(u64 label) const {
    u64 saved = queries_;
    std::vector<u64> out;
    for (u64 gi = 0; gi < group_.order(); ++gi) {
        if (act_index(gi, label) == label) out.push_back(gi);
    }
    queries_ = saved;
    return out;
}

std::vector<u64> PowerAction::act(const Exponents& g, const std::vector<u64>& labels) const {
    if (!base) throw InputError("power action: no base action");
    if (labels.size() != t) throw InputError("power action: tuple arity mismatch");
    std::vector<u64> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) out[i] = base->act(g, labels[i]);
    return out;
}

std::vector<u64> subgroup_closure(const PolycyclicGroupSpec& spec,
                                  const std::vector<Exponents>& gens) {
    std::set<u64> seen = {spec.index_of(spec.identity())};
    std::vector<Exponents> frontier = {spec.identity()};
    while (!frontier.empty()) {
        std::vector<Exponents> next;
        for (const Exponents& g : frontier) {
            for (const Exponents& z : gens) {
                Exponents img = spec.multiply(g, z);
                if (seen.insert(spec.index_of(img)).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<u64>(seen.begin(), seen.end());
}

QuantumAction regular_action(const PolycyclicGroupSpec& spec, std::string name) {
    u64 order = spec.order();
    std::vector<std::vector<u64>> perms(spec.gen_count(), std::vector<u64>(order));
    for (std::size_t i = 0; i < spec.gen_count(); ++i) {
        Exponents z = spec.generator(i);
        for (u64 x = 0; x < order; ++x) {
            perms[i][x] = spec.index_of(spec.multiply(z, spec.element_at(x)));
        }
    }
    return QuantumAction(spec, order, std::move(perms), std::move(name));
}

QuantumAction trivial_action(const PolycyclicGroupSpec& spec, u64 label_count, std::string name) {
    std::vector<u64> id(label_count);
    for (u64 i = 0; i < label_count; ++i) id[i] = i;
    std::vector<std::vector<u64>> perms(spec.gen_count(), id);
    return QuantumAction(spec, label_count, std::move(perms), std::move(name));
}

QuantumAction coset_action(const PolycyclicGroupSpec& spec,
                           const std::vector<Exponents>& subgroup_gens, std::string name) {
    u64 order = spec.order();
    std::vector<u64> members = subgroup_closure(spec, subgroup_gens);

    // assign ascending labels by each coset's smallest element index
    std::vector<u64> coset_label(order, order);
    u64 next_label = 0;
    std::vector<u64> canonical;
    for (u64 e = 0; e < order; ++e) {
        if (coset_label[e] != order) continue;
        Exponents g = spec.element_at(e);
        for (u64 h : members) {
            u64 idx = spec.index_of(spec.multiply(g, spec.element_at(h)));
            if (coset_label[idx] != order) {
                throw InternalError("coset_action: cosets are not disjoint");
            }
            coset_label[idx] = next_label;
        }
        canonical.push_back(e);
        ++next_label;
    }

    std::vector<std::vector<u64>> perms(spec.gen_count(), std::vector<u64>(next_label));
    for (std::size_t i = 0; i < spec.gen_count(); ++i) {
        Exponents z = spec.generator(i);
        for (u64 l = 0; l < next_label; ++l) {
            Exponents moved = spec.multiply(z, spec.element_at(canonical[l]));
            perms[i][l] = coset_label[spec.index_of(moved)];
        }
    }
    return QuantumAction(spec, next_label, std::move(perms), std::move(name));
}

QuantumAction natural_semidirect_action(u32 p, std::size_t n, std::string name) {
    PolycyclicGroupSpec spec = groups::semidirect_zpn_z2_pc(p, n);
    groups::AbelianGroupSpec labels = groups::zpn_spec(p, n);
    u64 count = labels.order();
    std::vector<std::vector<u64>> perms(spec.gen_count(), std::vector<u64>(count));
    for (u64 l = 0; l < count; ++l) {
        groups::AbelianElement y = labels.element_at(l);
        perms[0][l] = labels.index_of(labels.negate(y));
        for (std::size_t j = 0; j < n; ++j) {
            groups::AbelianElement shifted = y;
            shifted[j] = static_cast<u32>((shifted[j] + 1) % p);
            perms[1 + j][l] = labels.index_of(shifted);
        }
    }
    return QuantumAction(spec, count, std::move(perms), std::move(name));
}

QuantumAction disjoint_union_action(const QuantumAction& a, const QuantumAction& b,
                                    std::string name) {
    if (!(a.group() == b.group())) throw InputError("disjoint union: group mismatch");
    u64 total = a.label_count() + b.label_count();
    std::vector<std::vector<u64>> perms(a.group().gen_count(), std::vector<u64>(total));
    for (std::size_t i = 0; i < a.group().gen_count(); ++i) {
        Exponents z = a.group().generator(i);
        for (u64 l = 0; l < a.label_count(); ++l) perms[i][l] = a.act(z, l);
        for (u64 l = 0; l < b.label_count(); ++l) {
            perms[i][a.label_count() + l] = a.label_count() + b.act(z, l);
        }
    }
    return QuantumAction(a.group(), total, std::move(perms), std::move(name));
}

PureState function_superposition(const PolycyclicGroupSpec& spec, const std::vector<u64>& f_table,
                                 u64 value_count, const Exponents& translate, SimLimits limits) {
    u64 order = spec.order();
    if (f_table.size() != order) throw InputError("function superposition: table length mismatch");
    sim::Layout layout = {Register::value_reg(order), Register::value_reg(value_count)};
    PureState s(layout, limits);
    double amp = 1.0 / std::sqrt(static_cast<double>(order));
    for (u64 g = 0; g < order; ++g) {
        u64 moved = spec.index_of(spec.multiply(spec.element_at(g), translate));
        s.set_amplitude({g, f_table[moved]}, amp);
    }
    s.check_norm();
    return s;
}

QuantumAction translation_action(const PolycyclicGroupSpec& spec, std::vector<u64> f_table,
                                 u64 value_count, std::string name) {
    QuantumAction action = regular_action(spec, std::move(name));
    action.set_label_expander([spec, f_table = std::move(f_table), value_count](u64 label) {
        return function_superposition(spec, f_table, value_count, spec.element_at(label));
    });
    return action;
}

}  // namespace htoc::orbit
