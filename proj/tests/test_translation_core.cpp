#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "htoc/hsp_semidirect.hpp"
#include "htoc/orbit_coset.hpp"
#include "htoc/stabilizer_abelian.hpp"
#include "htoc/sym_power.hpp"
#include "htoc/translation_finding.hpp"

using namespace htoc;
using fp::FpVector;
using ht::HiddenTranslationInstance;

namespace {

FpVector vec(u32 p, std::vector<u32> c) { return FpVector(p, std::move(c)); }

double total_variation(const std::map<std::pair<u64, u32>, double>& a,
                       const std::map<std::pair<u64, u32>, double>& b) {
    double tv = 0.0;
    std::set<std::pair<u64, u32>> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (const auto& k : keys) {
        double pa = a.count(k) ? a.at(k) : 0.0;
        double pb = b.count(k) ? b.at(k) : 0.0;
        tv += std::abs(pa - pb);
    }
    return tv / 2.0;
}

}  // namespace

TEST_CASE("instances keep the translation property and injectivity") {
    Rng rng(3);
    for (int it = 0; it < 20; ++it) {
        HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
        CHECK_FALSE(inst.planted_u().is_zero());
        std::set<u64> seen0, seen1;
        for (u64 i = 0; i < inst.domain_size(); ++i) {
            seen0.insert(inst.f0_at(i));
            seen1.insert(inst.f1_at(i));
            FpVector x = inst.vector_at(i);
            CHECK(inst.index_of(x) == i);
            CHECK(inst.f1(fp::add(x, inst.planted_u())) == inst.f0(x));
        }
        CHECK(seen0.size() == inst.domain_size());
        CHECK(seen1.size() == inst.domain_size());
    }
    HiddenTranslationInstance fixed = ht::random_instance_with_u(3, 2, vec(3, {2, 1}), rng);
    CHECK(fixed.planted_u() == vec(3, {2, 1}));
    CHECK(fixed.f1_table()[fixed.index_of(vec(3, {2, 1}))] == fixed.f0_table()[0]);
}

TEST_CASE("class distribution matches the closed form") {
    auto rows = ht::exact_sample_distribution(3, 2, vec(3, {1, 0}));
    std::map<std::pair<u32, u32>, double> table;
    double total = 0.0;
    for (const auto& r : rows) {
        table[{r.k, r.c}] = r.prob;
        total += r.prob;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(table[{0, 1}]) < 1e-12);
    CHECK(std::abs(table[{1, 1}] - 0.25) < 1e-12);
    CHECK(std::abs(table[{2, 1}] - 0.25) < 1e-12);
    CHECK(std::abs(table[{0, 0}] - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(table[{1, 0}] - 1.0 / 12.0) < 1e-12);

    auto rows2 = ht::exact_sample_distribution(2, 3, vec(2, {1, 1, 0}));
    for (const auto& r : rows2) {
        if (r.c == 1) CHECK(std::abs(r.prob - (r.k == 1 ? 0.5 : 0.0)) < 1e-12);
    }

    CHECK_THROWS_AS(ht::exact_sample_distribution(3, 2, vec(3, {0, 0})), InputError);
}

TEST_CASE("per-outcome table agrees with the statevector born distribution") {
    Rng rng(7);
    HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
    auto joint = ht::exact_joint_table(inst);

    double mass = 0.0;
    for (const auto& [key, prob] : joint) {
        mass += prob;
        if (key.second == 1 && fp::dot(inst.vector_at(key.first), inst.planted_u()) == 0) {
            CHECK(prob < 1e-15);
        }
    }
    CHECK(std::abs(mass - 1.0) < 1e-12);

    ht::HtSampler sampler(inst, ht::SamplerMode::Statevector);
    CHECK(total_variation(sampler.born_table(), joint) < 1e-9);

    // class aggregation reproduces the class table
    auto classes = ht::exact_sample_distribution(3, 2, inst.planted_u());
    std::map<std::pair<u32, u32>, double> agg;
    for (const auto& [key, prob] : joint) {
        agg[{fp::dot(inst.vector_at(key.first), inst.planted_u()), key.second}] += prob;
    }
    for (const auto& r : classes) CHECK(std::abs(agg[{r.k, r.c}] - r.prob) < 1e-12);
}

TEST_CASE("both sampler modes draw the same distribution") {
    Rng rng(11);
    HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
    ht::HtSampler sv(inst, ht::SamplerMode::Statevector);
    ht::HtSampler sc(inst, ht::SamplerMode::Shortcut);

    const u64 draws = 10000;
    std::map<std::pair<u64, u32>, double> emp_sv, emp_sc;
    u64 ones = 0;
    for (u64 t = 0; t < draws; ++t) {
        ht::SampleRecord a = sv.draw(rng);
        ht::SampleRecord b = sc.draw(rng);
        if (a.c == 1) {
            ++ones;
            CHECK(fp::dot(a.y, inst.planted_u()) != 0);
        }
        if (b.c == 1) CHECK(fp::dot(b.y, inst.planted_u()) != 0);
        emp_sv[{inst.index_of(a.y), a.c}] += 1.0 / draws;
        emp_sc[{inst.index_of(b.y), b.c}] += 1.0 / draws;
    }
    double ones_rate = static_cast<double>(ones) / draws;
    CHECK(ones_rate > 0.48);
    CHECK(ones_rate < 0.52);
    CHECK(total_variation(emp_sv, emp_sc) < 0.03);
}

TEST_CASE("two-oracle wrapper equals the direct combined oracle") {
    Rng rng(13);
    HiddenTranslationInstance inst = ht::random_instance(3, 3, rng);
    sim::Layout layout{sim::Register::group_reg(groups::zpn_spec(3, 3)),
                       sim::Register::group_reg(groups::AbelianGroupSpec({2})),
                       sim::Register::value_reg(inst.label_count()),
                       sim::Register::value_reg(inst.label_count())};
    for (u64 x = 0; x < inst.domain_size(); ++x) {
        for (u64 b = 0; b <= 1; ++b) {
            sim::PureState via_program = sim::PureState::basis(layout, {x, b, 0, 0});
            sim::PureState direct = via_program;
            ht::apply_dual_oracle_program(via_program, inst);
            ht::apply_dual_oracle_direct(direct, inst);
            REQUIRE(via_program.support_size() == 1);
            REQUIRE(sim::fidelity(via_program, direct) > 1.0 - 1e-12);
        }
    }
    sim::PureState origin = sim::PureState::basis(layout, {0, 0, 0, 0});
    ht::apply_dual_oracle_program(origin, inst);
    CHECK(std::abs(origin.amplitude({0, 0, inst.f0_at(0), inst.f1_at(0)}) - 1.0) < 1e-12);
}

TEST_CASE("sample budget formula") {
    CHECK(ht::paper_sample_count(3, 3) == 234);
    CHECK(ht::paper_sample_count(3, 2) == 117);
    CHECK(ht::paper_sample_count(2, 1) == 26);
    CHECK(ht::paper_sample_count(5, 2) == 325);
}

TEST_CASE("translation finder is exact on every non-abort") {
    Rng zero_rng(17);
    HiddenTranslationInstance zero = ht::random_instance_with_u(3, 2, vec(3, {0, 0}), zero_rng);
    ht::TFOutcome out = ht::translation_finding(zero, zero_rng, ht::SamplerMode::Shortcut);
    REQUIRE(out.status == ht::TFStatus::Found);
    CHECK(out.u.is_zero());
    CHECK(out.stats.samples_drawn == 0);

    u64 found = 0, aborts = 0;
    for (u64 t = 0; t < 120; ++t) {
        Rng rng(19, t);
        HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
        ht::TFOutcome res = ht::translation_finding(inst, rng, ht::SamplerMode::Shortcut);
        if (res.status == ht::TFStatus::Found) {
            ++found;
            REQUIRE(res.u == inst.planted_u());
            CHECK(res.stats.samples_drawn == 117);
        } else {
            ++aborts;
            CHECK(res.stats.solve_outcome != fp::SolveOutcome::Unique);
        }
    }
    CHECK(found + aborts == 120);
    CHECK(aborts * 2 < 120);  // abort on fewer than half the runs

    // a larger sample budget drives the abort rate down further
    u64 found_amplified = 0;
    for (u64 t = 0; t < 20; ++t) {
        Rng rng(23, t);
        HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
        ht::TFOutcome res = ht::translation_finding(inst, rng, ht::SamplerMode::Shortcut, 4);
        if (res.status == ht::TFStatus::Found) {
            ++found_amplified;
            CHECK(res.stats.samples_drawn == 4 * 117);
            REQUIRE(res.u == inst.planted_u());
        }
    }
    CHECK(found_amplified >= 18);

    // the statevector path agrees with the shortcut path trial for trial
    for (u64 t = 0; t < 10; ++t) {
        Rng rng(29, t);
        HiddenTranslationInstance inst = ht::random_instance(3, 2, rng);
        ht::TFOutcome res = ht::translation_finding(inst, rng, ht::SamplerMode::Statevector);
        if (res.status == ht::TFStatus::Found) REQUIRE(res.u == inst.planted_u());
    }
}

TEST_CASE("pivot recovery algebra inverts the evaluation vector") {
    // from the evaluation vector of u alone, the pivot rules reassemble u
    const u32 p = 3;
    const std::size_t n = 3;
    fp::MonomialBasis basis(n, p - 1);
    for (u64 ui = 1; ui < 27; ++ui) {
        FpVector u(p, n, 0);
        u64 rest = ui;
        for (std::size_t i = 0; i < n; ++i) {
            u.coords[i] = static_cast<u32>(rest % p);
            rest /= p;
        }
        fp::SymPowerVector star = fp::star_vector(u, basis);

        // pivot: smallest j whose pure-power coordinate is 1
        std::size_t j = n;
        for (std::size_t cand = 0; cand < n && j == n; ++cand) {
            std::vector<u32> e(n, 0);
            e[cand] = p - 1;
            if (star.coords[basis.index_of(e)] == 1) j = cand;
        }
        REQUIRE(j < n);
        CHECK(u.coords[j] != 0);

        FpVector v(p, n, 0);
        v.coords[j] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            std::vector<u32> e(n, 0);
            e[k] = 1;
            e[j] = p - 2;
            v.coords[k] = star.coords[basis.index_of(e)];
        }
        CHECK(fp::scale(u.coords[j], v) == u);
    }
}

TEST_CASE("split-extension subgroup recovery") {
    Rng rng(31);
    HiddenTranslationInstance zero = ht::random_instance_with_u(3, 2, vec(3, {0, 0}), rng);
    ht::HspOutcome out = ht::hsp_semidirect(zero, rng, ht::SamplerMode::Shortcut);
    REQUIRE_FALSE(out.aborted);
    CHECK(out.generator.x.is_zero());
    CHECK(out.generator.b == 1);
    CHECK(ht::hides_subgroup(zero, out.generator));

    u64 hits = 0;
    for (u64 t = 0; t < 60; ++t) {
        Rng trial(37, t);
        HiddenTranslationInstance inst = ht::random_instance(3, 2, trial);
        ht::HspOutcome res = ht::hsp_semidirect(inst, trial, ht::SamplerMode::Shortcut);
        if (!res.aborted) {
            ++hits;
            REQUIRE(res.generator.b == 1);
            REQUIRE(res.generator.x == inst.planted_u());
            REQUIRE(ht::hides_subgroup(inst, res.generator));
        }
    }
    CHECK(hits * 2 >= 60);

    // the brute-force oracle rejects wrong claims
    HiddenTranslationInstance inst = ht::random_instance_with_u(3, 2, vec(3, {1, 2}), rng);
    groups::SemidirectZpnZ2 g(3, 2);
    CHECK(ht::hides_subgroup(inst, g.make({1, 2}, 1)));
    CHECK_FALSE(ht::hides_subgroup(inst, g.make({1, 1}, 1)));
    CHECK_FALSE(ht::hides_subgroup(inst, g.make({1, 2}, 0)));
}

TEST_CASE("abelian stabilizers are decoded from action samples") {
    Rng rng(41);
    groups::PolycyclicGroupSpec z32 = groups::elementary_abelian_pc(3, 2);

    orbit::QuantumAction coset = orbit::coset_action(z32, {{1, 1}}, "coset");
    u64 budget = orbit::stabilizer_sample_count(9, 1e-3, 2) + 8;
    orbit::StabilizerOutcome got = orbit::stabilizer_abelian_on_label(coset, 0, 1e-3, 2, budget, rng);
    groups::AbelianGroupSpec spec = groups::zpn_spec(3, 2);
    CHECK(groups::same_subgroup(spec, got.generators, {{1, 1}}));
    CHECK(got.stats.stab_samples > 0);
    CHECK(got.stats.copies_consumed == got.stats.stab_samples);

    orbit::QuantumAction regular = orbit::regular_action(z32, "regular");
    orbit::StabilizerOutcome free_out =
        orbit::stabilizer_abelian_on_label(regular, 0, 1e-3, 2, budget, rng);
    CHECK(groups::generated_subgroup(spec, free_out.generators).size() == 1);

    orbit::QuantumAction still = orbit::trivial_action(z32, 4, "still");
    orbit::StabilizerOutcome full_out =
        orbit::stabilizer_abelian_on_label(still, 2, 1e-3, 2, budget, rng);
    CHECK(groups::generated_subgroup(spec, full_out.generators).size() == 9);

    // budget exhaustion is an explicit error
    CHECK_THROWS_AS(orbit::stabilizer_abelian_on_label(coset, 0, 1e-3, 2, 2, rng), ResourceError);
}

TEST_CASE("elementary orbit coset finds translations between state copies") {
    groups::PolycyclicGroupSpec z32 = groups::elementary_abelian_pc(3, 2);
    orbit::SolverConfig cfg;
    cfg.eps = 1e-2;

    Rng rng(43);
    std::vector<u64> f0(9), f1(9);
    for (u64 i = 0; i < 9; ++i) f0[i] = (i * 4 + 2) % 9;  // injective
    groups::Exponents planted{2, 1};
    for (u64 g = 0; g < 9; ++g) {
        // f1(g . planted) = f0(g), so planted itself maps phi1 back onto phi0
        f1[z32.index_of(z32.multiply(z32.element_at(g), planted))] = f0[g];
    }
    orbit::LabeledCosetInstance inst = orbit::reduce_ht_to_oc(z32, f0, f1, 9);
    REQUIRE(inst.same_orbit);
    orbit::AbelianActionContext actx = orbit::abelian_context(orbit::top_context(inst.action));

    u64 need = orbit::orbit_coset_zpn_copy_need(3, 2, cfg) + 8;
    bool found = false;
    for (int attempt = 0; attempt < 4 && !found; ++attempt) {
        orbit::CopyPool pool0 = orbit::CopyPool::from_basis(inst.action.label_count(), inst.phi0, need);
        orbit::CopyPool pool1 = orbit::CopyPool::from_basis(inst.action.label_count(), inst.phi1, need);
        orbit::OrbitCosetResult res = orbit::orbit_coset_zpn(actx, pool0, pool1, cfg, rng);
        if (res.found()) {
            found = true;
            CHECK(res.u == planted);
            CHECK(res.stabilizer.empty());
            CHECK(res.stats.translation_samples > 0);
        }
    }
    CHECK(found);

    // identical inputs: the identity coset
    orbit::CopyPool same0 = orbit::CopyPool::from_basis(inst.action.label_count(), inst.phi0, need);
    orbit::CopyPool same1 = orbit::CopyPool::from_basis(inst.action.label_count(), inst.phi0, need);
    orbit::OrbitCosetResult eq = orbit::orbit_coset_zpn(actx, same0, same1, cfg, rng);
    REQUIRE(eq.found());
    CHECK(eq.u == groups::Exponents{0, 0});

    // disjoint orbits: reject
    std::vector<u64> g1(9);
    for (u64 i = 0; i < 9; ++i) g1[i] = (i * 2 + 1) % 9;  // not a translate of f0
    orbit::LabeledCosetInstance dis = orbit::reduce_ht_to_oc(z32, f0, g1, 9);
    REQUIRE_FALSE(dis.same_orbit);
    orbit::AbelianActionContext dctx = orbit::abelian_context(orbit::top_context(dis.action));
    orbit::CopyPool dp0 = orbit::CopyPool::from_basis(dis.action.label_count(), dis.phi0, need);
    orbit::CopyPool dp1 = orbit::CopyPool::from_basis(dis.action.label_count(), dis.phi1, need);
    CHECK_FALSE(orbit::orbit_coset_zpn(dctx, dp0, dp1, cfg, rng).found());
}
