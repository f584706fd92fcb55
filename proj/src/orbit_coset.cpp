#include "htoc/orbit_coset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>

#include "htoc/stabilizer_abelian.hpp"

namespace htoc::orbit {

namespace {

using groups::SeriesBlock;

bool is_elementary_prime_spec(const AbelianGroupSpec& spec) {
    if (spec.factor_count() == 0) return false;
    u64 f = spec.factors[0];
    if (!fp::is_prime(f)) return false;
    for (u64 g : spec.factors) {
        if (g != f) return false;
    }
    return true;
}

std::size_t log2_ceil(u64 v) {
    std::size_t bits = 0;
    u64 x = 1;
    while (x < v) {
        x <<= 1;
        ++bits;
    }
    return bits;
}

CopyPool pseudo_pool(const GroupActionContext& ctx, u64 label, const SolverConfig& cfg) {
    return CopyPool::from_basis(ctx.label_count, label, cfg.pseudo_copy_budget);
}

}  // namespace

LabelCosetSolver recursive_label_solver(const SolverConfig& cfg, Rng& rng) {
    if (cfg.transparent) return transparent_label_solver();
    using Key = std::tuple<std::size_t, u64, u64>;
    auto memo = std::make_shared<std::map<Key, Exponents>>();
    return [cfg, memo, &rng](const GroupActionContext& parent, std::size_t cut, u64 target,
                             u64 base) -> OrbitCosetResult {
        Key key{cut, target, base};
        if (auto it = memo->find(key); it != memo->end()) {
            OrbitCosetResult hit;
            hit.status = OrbitCosetResult::Status::Found;
            hit.u = it->second;
            return hit;
        }
        OrbitCosetResult res =
            orbit_coset_smooth(subgroup_context(parent, cut), target, base, cfg, rng);
        if (res.found()) {
            res.u = prefix_embed(res.u, cut, parent.group.gen_count());
            memo->emplace(key, res.u);
        }
        return res;
    };
}

namespace {

//! Budgeted source of quotient-level copies |N . phi|, manufactured on
//! demand by orbit superposition runs inside the prefix subgroup.
CopyPool quotient_copy_pool(const GroupActionContext& ctx, std::size_t cut, u64 phi,
                            const LabelCosetSolver& solver, const SolverConfig& cfg, Rng& rng,
                            SolverStats& stats, u64 budget) {
    auto sub = std::make_shared<GroupActionContext>(subgroup_context(ctx, cut));
    auto pseudo = std::make_shared<CopyPool>(
        CopyPool::from_basis(ctx.label_count, phi, cfg.pseudo_copy_budget));
    auto buffer = std::make_shared<std::vector<PureState>>();
    auto maker = [sub, pseudo, buffer, solver, phi, &rng, &stats]() -> PureState {
        if (buffer->empty()) {
            OrbitSuperpositionOutcome run = orbit_superposition(*sub, phi, 1, *pseudo, solver, rng);
            stats.absorb(run.stats);
            *buffer = std::move(run.copies);
        }
        PureState out = std::move(buffer->back());
        buffer->pop_back();
        return out;
    };
    return CopyPool::from_maker(std::move(maker), budget);
}

//! All right-translate tables T_t(g) = f(g t) of one function table.
std::vector<std::vector<u64>> translate_tables(const groups::PolycyclicGroupSpec& spec,
                                               const std::vector<u64>& f) {
    u64 order = spec.order();
    if (f.size() != order) {
        throw InputError("translate action: table length must equal the group order");
    }
    std::vector<std::vector<u64>> tables(order, std::vector<u64>(order));
    for (u64 t = 0; t < order; ++t) {
        Exponents te = spec.element_at(t);
        for (u64 g = 0; g < order; ++g) {
            tables[t][g] = f[spec.index_of(spec.multiply(spec.element_at(g), te))];
        }
    }
    return tables;
}

}  // namespace

SolverConfig derive_recursion_config(const SolverConfig& cfg,
                                     const groups::PolycyclicGroupSpec& group) {
    if (cfg.derived) return cfg;
    SolverConfig out = cfg;
    double lg = std::max<double>(1.0, static_cast<double>(log2_ceil(group.order())));
    double denom = std::max(1.0, cfg.error_expansion_c * (lg + lg * lg));
    out.eps = std::max(cfg.eps / denom, cfg.eps_floor);
    out.derived = true;
    return out;
}

std::vector<groups::SeriesBlock> effective_blocks(const groups::PolycyclicGroupSpec& group,
                                                  const SolverConfig& cfg) {
    std::size_t m = group.gen_count();
    // set_blocks already validated tiling on the way in
    if (!group.blocks().empty()) return group.blocks();
    if (m == 0) return {};
    auto form = groups::abelian_decomposition(group);
    if (form && is_elementary_prime_spec(form->spec)) {
        return {SeriesBlock{0, m, SeriesBlock::Kind::Elementary}};
    }
    if (group.order() <= cfg.small_threshold) {
        return {SeriesBlock{0, m, SeriesBlock::Kind::Small}};
    }
    throw InputError("group needs series block annotations for the solver");
}

OrbitCosetResult exhaustive_stabilizer(const GroupActionContext& ctx, CopyPool& pool,
                                       const SolverConfig& cfg, Rng& rng) {
    ctx.check();
    u64 order = ctx.group.order();
    if (order > cfg.small_threshold) {
        throw InputError("exhaustive stabilizer: order above the small-factor threshold");
    }
    OrbitCosetResult res;
    res.status = OrbitCosetResult::Status::Found;
    res.u = ctx.group.identity();
    res.stats.exhaustive_calls = 1;
    std::size_t rounds = cfg.equality_rounds();
    u64 start = pool.used();
    for (u64 e = 1; e < order; ++e) {
        Exponents g = ctx.group.element_at(e);
        bool accept = true;
        for (std::size_t k = 0; accept && k < rounds; ++k) {
            PureState a = pool.take();
            PureState b = pool.take();
            ctx.act_state(b, g);
            ++res.stats.swap_tests;
            accept = sim::swap_test(a, b, rng);
        }
        if (accept) res.stabilizer.push_back(std::move(g));
    }
    res.stats.copies_consumed = pool.used() - start;
    return res;
}

OrbitCosetResult exhaustive_orbit_coset(const GroupActionContext& ctx, CopyPool& pool0,
                                        CopyPool& pool1, const SolverConfig& cfg, Rng& rng,
                                        bool want_stabilizer) {
    ctx.check();
    u64 order = ctx.group.order();
    if (order > cfg.small_threshold) {
        throw InputError("exhaustive orbit coset: order above the small-factor threshold");
    }
    OrbitCosetResult res;
    res.stats.exhaustive_calls = 1;
    std::size_t rounds = cfg.equality_rounds();
    u64 start0 = pool0.used();
    u64 start1 = pool1.used();
    for (u64 e = 0; e < order; ++e) {
        Exponents g = ctx.group.element_at(e);
        bool accept = true;
        for (std::size_t k = 0; accept && k < rounds; ++k) {
            PureState a = pool0.take();
            PureState b = pool1.take();
            ctx.act_state(b, g);
            ++res.stats.swap_tests;
            accept = sim::swap_test(a, b, rng);
        }
        if (accept) {
            res.status = OrbitCosetResult::Status::Found;
            res.u = std::move(g);
            break;
        }
    }
    if (res.found() && want_stabilizer) {
        OrbitCosetResult stab = exhaustive_stabilizer(ctx, pool1, cfg, rng);
        res.stabilizer = std::move(stab.stabilizer);
        res.stats.absorb(stab.stats);
    }
    res.stats.copies_consumed = (pool0.used() - start0) + (pool1.used() - start1);
    return res;
}

OrbitCosetResult stabilizer_step(const GroupActionContext& ctx, std::size_t cut, u64 phi,
                                 const SolverConfig& cfg0, Rng& rng) {
    ctx.check();
    if (cut == 0 || cut >= ctx.group.gen_count()) {
        throw InputError("stabilizer step: cut must be interior to the series");
    }
    SolverConfig cfg = derive_recursion_config(cfg0, ctx.group);
    std::size_t arity = ctx.group.gen_count();

    OrbitCosetResult res;
    res.status = OrbitCosetResult::Status::Found;
    res.u = ctx.group.identity();
    res.stats.recursive_steps = 1;

    // intersection with the prefix subgroup, by recursion on the label
    GroupActionContext sub = subgroup_context(ctx, cut);
    OrbitCosetResult inner = stabilizer_smooth(sub, phi, cfg, rng);
    res.stats.absorb(inner.stats);
    for (const Exponents& g : inner.stabilizer) {
        res.stabilizer.push_back(prefix_embed(g, cut, arity));
    }

    // quotient-level stabilizer on manufactured orbit copies
    groups::QuotientMap qm = groups::quotient_map(ctx.group, cut);
    GroupActionContext qctx = quotient_context(ctx, cut);
    LabelCosetSolver solver = recursive_label_solver(cfg, rng);
    u64 qorder = qm.group.order();

    std::vector<Exponents> quotient_gens;
    auto form = groups::abelian_decomposition(qm.group);
    if (form) {
        AbelianActionContext actx = abelian_context(qctx);
        u64 need = stabilizer_sample_count(qorder, cfg.eps, cfg.c0_stab) + cfg.quotient_slack;
        CopyPool pool = quotient_copy_pool(ctx, cut, phi, solver, cfg, rng, res.stats, need);
        StabilizerOutcome qs = stabilizer_abelian(actx, pool, cfg.eps, cfg.c0_stab, rng);
        res.stats.absorb(qs.stats);
        for (const AbelianElement& a : qs.generators) {
            quotient_gens.push_back(actx.form.from_abelian(a));
        }
    } else if (qorder <= cfg.small_threshold) {
        u64 need = (qorder - 1) * cfg.equality_rounds() * 2 + cfg.quotient_slack;
        CopyPool pool = quotient_copy_pool(ctx, cut, phi, solver, cfg, rng, res.stats, need);
        OrbitCosetResult qs = exhaustive_stabilizer(qctx, pool, cfg, rng);
        res.stats.absorb(qs.stats);
        quotient_gens = std::move(qs.stabilizer);
    } else {
        throw InputError("stabilizer step: unsupported quotient factor");
    }

    // lift each quotient generator back into the stabilizer through the
    // subgroup: find n with z n fixing phi
    for (const Exponents& vq : quotient_gens) {
        Exponents z = qm.section(vq);
        if (z == ctx.group.identity()) continue;
        u64 shifted = act_label(ctx, ctx.group.inverse(z), phi);
        OrbitCosetResult lift = orbit_coset_smooth(sub, shifted, phi, cfg, rng);
        res.stats.absorb(lift.stats);
        if (!lift.found()) {
            ++res.stats.rejected_lifts;
            continue;
        }
        res.stabilizer.push_back(ctx.group.multiply(z, prefix_embed(lift.u, cut, arity)));
    }
    return res;
}

OrbitCosetResult orbit_coset_step(const GroupActionContext& ctx, std::size_t cut, u64 phi0,
                                  u64 phi1, const SolverConfig& cfg0, Rng& rng) {
    ctx.check();
    if (cut == 0 || cut >= ctx.group.gen_count()) {
        throw InputError("orbit coset step: cut must be interior to the series");
    }
    SolverConfig cfg = derive_recursion_config(cfg0, ctx.group);
    std::size_t arity = ctx.group.gen_count();

    OrbitCosetResult res;
    res.stats.recursive_steps = 1;

    // the stabilizer of phi1, which is also the coset's generator output
    OrbitCosetResult stab = stabilizer_step(ctx, cut, phi1, cfg, rng);
    res.stats.absorb(stab.stats);
    res.stabilizer = std::move(stab.stabilizer);

    // quotient-level orbit coset on manufactured copies
    groups::QuotientMap qm = groups::quotient_map(ctx.group, cut);
    GroupActionContext qctx = quotient_context(ctx, cut);
    LabelCosetSolver solver = recursive_label_solver(cfg, rng);
    u64 qorder = qm.group.order();

    OrbitCosetResult quotient;
    auto form = groups::abelian_decomposition(qm.group);
    if (form && is_elementary_prime_spec(form->spec)) {
        AbelianActionContext actx = abelian_context(qctx);
        u32 p = static_cast<u32>(form->spec.factors[0]);
        u64 need = orbit_coset_zpn_copy_need(p, form->spec.factor_count(), cfg) + cfg.quotient_slack;
        CopyPool qp0 = quotient_copy_pool(ctx, cut, phi0, solver, cfg, rng, res.stats, need);
        CopyPool qp1 = quotient_copy_pool(ctx, cut, phi1, solver, cfg, rng, res.stats, need);
        quotient = orbit_coset_zpn(actx, qp0, qp1, cfg, rng);
    } else if (qorder <= cfg.small_threshold) {
        u64 need = qorder * cfg.equality_rounds() + cfg.quotient_slack;
        CopyPool qp0 = quotient_copy_pool(ctx, cut, phi0, solver, cfg, rng, res.stats, need);
        CopyPool qp1 = quotient_copy_pool(ctx, cut, phi1, solver, cfg, rng, res.stats, need);
        quotient = exhaustive_orbit_coset(qctx, qp0, qp1, cfg, rng, false);
    } else {
        throw InputError("orbit coset step: unsupported quotient factor");
    }
    res.stats.absorb(quotient.stats);
    if (!quotient.found()) return res;  // empty quotient coset: reject

    // finish inside the subgroup from the shifted instance
    Exponents v = qm.section(quotient.u);
    u64 shifted = act_label(ctx, ctx.group.inverse(v), phi0);
    GroupActionContext sub = subgroup_context(ctx, cut);
    OrbitCosetResult fin = orbit_coset_smooth(sub, shifted, phi1, cfg, rng);
    res.stats.absorb(fin.stats);
    if (!fin.found()) return res;
    res.status = OrbitCosetResult::Status::Found;
    res.u = ctx.group.multiply(v, prefix_embed(fin.u, cut, arity));
    return res;
}

OrbitCosetResult orbit_coset_smooth(const GroupActionContext& ctx, u64 phi0, u64 phi1,
                                    const SolverConfig& cfg0, Rng& rng) {
    ctx.check();
    SolverConfig cfg = derive_recursion_config(cfg0, ctx.group);
    std::size_t m = ctx.group.gen_count();
    if (m == 0) {
        OrbitCosetResult res;
        PureState a = PureState::basis({sim::Register::value_reg(ctx.label_count)}, {phi0});
        PureState b = PureState::basis({sim::Register::value_reg(ctx.label_count)}, {phi1});
        bool eq = true;
        std::size_t rounds = cfg.equality_rounds();
        for (std::size_t k = 0; eq && k < rounds; ++k) {
            ++res.stats.swap_tests;
            eq = sim::swap_test(a, b, rng);
        }
        if (eq) {
            res.status = OrbitCosetResult::Status::Found;
            res.u = ctx.group.identity();
        }
        return res;
    }
    std::vector<SeriesBlock> blocks = effective_blocks(ctx.group, cfg);
    if (blocks.size() == 1) {
        CopyPool p0 = pseudo_pool(ctx, phi0, cfg);
        CopyPool p1 = pseudo_pool(ctx, phi1, cfg);
        if (blocks[0].kind == SeriesBlock::Kind::Elementary) {
            AbelianActionContext actx = abelian_context(ctx);
            return orbit_coset_zpn(actx, p0, p1, cfg, rng);
        }
        return exhaustive_orbit_coset(ctx, p0, p1, cfg, rng, true);
    }
    return orbit_coset_step(ctx, blocks[0].first + blocks[0].count, phi0, phi1, cfg, rng);
}

OrbitCosetResult stabilizer_smooth(const GroupActionContext& ctx, u64 phi,
                                   const SolverConfig& cfg0, Rng& rng) {
    ctx.check();
    SolverConfig cfg = derive_recursion_config(cfg0, ctx.group);
    std::size_t m = ctx.group.gen_count();
    OrbitCosetResult res;
    res.status = OrbitCosetResult::Status::Found;
    res.u = ctx.group.identity();
    if (m == 0) return res;
    std::vector<SeriesBlock> blocks = effective_blocks(ctx.group, cfg);
    if (blocks.size() == 1) {
        CopyPool pool = pseudo_pool(ctx, phi, cfg);
        if (blocks[0].kind == SeriesBlock::Kind::Elementary) {
            AbelianActionContext actx = abelian_context(ctx);
            StabilizerOutcome s = stabilizer_abelian(actx, pool, cfg.eps, cfg.c0_stab, rng);
            res.stats.absorb(s.stats);
            for (const AbelianElement& a : s.generators) {
                res.stabilizer.push_back(actx.form.from_abelian(a));
            }
            return res;
        }
        return exhaustive_stabilizer(ctx, pool, cfg, rng);
    }
    return stabilizer_step(ctx, blocks[0].first + blocks[0].count, phi, cfg, rng);
}

OrbitCosetResult stabilizer_solvable(const GroupActionContext& ctx, u64 phi,
                                     const SolverConfig& cfg0, Rng& rng) {
    ctx.check();
    SolverConfig cfg = derive_recursion_config(cfg0, ctx.group);
    auto form = groups::abelian_decomposition(ctx.group);
    if (form) {
        // trivial derived subgroup: the direct abelian solver applies
        AbelianActionContext actx = abelian_context(ctx);
        CopyPool pool = pseudo_pool(ctx, phi, cfg);
        StabilizerOutcome s = stabilizer_abelian(actx, pool, cfg.eps, cfg.c0_stab, rng);
        OrbitCosetResult res;
        res.status = OrbitCosetResult::Status::Found;
        res.u = ctx.group.identity();
        res.stats.absorb(s.stats);
        for (const AbelianElement& a : s.generators) {
            res.stabilizer.push_back(actx.form.from_abelian(a));
        }
        return res;
    }
    std::optional<std::size_t> cut = ctx.group.commutator_start();
    if (!cut) {
        throw InputError("stabilizer: needs an abelian presentation or a commutator annotation");
    }
    return stabilizer_step(ctx, *cut, phi, cfg, rng);
}

QuantumAction translate_orbit_action(const groups::PolycyclicGroupSpec& spec,
                                     const std::vector<u64>& f_table, u64 value_count) {
    u64 order = spec.order();
    for (u64 v : f_table) {
        if (v >= value_count) throw InputError("translate action: value out of range");
    }
    std::vector<std::vector<u64>> tables = translate_tables(spec, f_table);

    std::map<std::vector<u64>, u64> label_of_table;
    std::vector<u64> label_of_t(order);
    std::vector<u64> rep_t;  // first-seen translate per distinct table
    for (u64 t = 0; t < order; ++t) {
        auto [it, fresh] = label_of_table.try_emplace(tables[t], rep_t.size());
        if (fresh) rep_t.push_back(t);
        label_of_t[t] = it->second;
    }

    u64 labels = rep_t.size();
    std::vector<std::vector<u64>> perms(spec.gen_count(), std::vector<u64>(labels));
    for (std::size_t i = 0; i < spec.gen_count(); ++i) {
        Exponents z = spec.generator(i);
        for (u64 l = 0; l < labels; ++l) {
            u64 image_t = spec.index_of(spec.multiply(z, spec.element_at(rep_t[l])));
            perms[i][l] = label_of_t[image_t];
        }
    }
    QuantumAction action(spec, labels, std::move(perms), "translate-orbit");
    action.set_label_expander([spec, f = f_table, reps = rep_t, value_count](u64 label) {
        return function_superposition(spec, f, value_count, spec.element_at(reps.at(label)));
    });
    return action;
}

LabeledCosetInstance reduce_ht_to_oc(const groups::PolycyclicGroupSpec& spec,
                                     const std::vector<u64>& f0, const std::vector<u64>& f1,
                                     u64 value_count) {
    u64 order = spec.order();
    if (f0.size() != order || f1.size() != order) {
        throw InputError("ht reduction: table lengths must equal the group order");
    }
    // classical preprocessing of the given tables: locate f1 among the
    // translates of f0 to label it; solvers still only see the action
    std::vector<std::vector<u64>> tables = translate_tables(spec, f0);
    std::optional<u64> t1;
    for (u64 t = 0; t < order && !t1; ++t) {
        if (tables[t] == f1) t1 = t;
    }
    if (t1) {
        QuantumAction action = translate_orbit_action(spec, f0, value_count);
        u64 phi1 = action.act(spec.element_at(*t1), 0);
        action.reset_queries();
        return LabeledCosetInstance{std::move(action), 0, phi1, true};
    }
    QuantumAction a0 = translate_orbit_action(spec, f0, value_count);
    QuantumAction a1 = translate_orbit_action(spec, f1, value_count);
    u64 offset = a0.label_count();
    QuantumAction joined = disjoint_union_action(a0, a1, "ht-disjoint");
    return LabeledCosetInstance{std::move(joined), 0, offset, false};
}

LabeledStabilizerInstance reduce_hsp_to_stab(const groups::PolycyclicGroupSpec& spec,
                                             const std::vector<u64>& f_table, u64 value_count) {
    return LabeledStabilizerInstance{translate_orbit_action(spec, f_table, value_count), 0};
}

}  // namespace htoc::orbit
