// Release gate: every core guarantee of the solver suite, checked end to end
// at fixed seeds and stated tolerances. Prints one PASS/FAIL line per
// criterion and exits with the number of failures.
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "htoc/fp_checks.hpp"
#include "htoc/hsp_semidirect.hpp"
#include "htoc/orbit_coset.hpp"
#include "htoc/report.hpp"
#include "htoc/stabilizer_abelian.hpp"
#include "htoc/translation_finding.hpp"

namespace {

using namespace htoc;

std::string format_coords(const std::vector<u32>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// 1. The sampler's law: exact table == statevector Born distribution, the
//    outcome bit is fair, and the forbidden class never appears.

std::string criterion_sampling_law() {
    for (u32 p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            Rng rng(101, p * 10 + n);
            ht::HiddenTranslationInstance inst = ht::random_instance(p, n, rng);
            ht::HtSampler sampler(inst, ht::SamplerMode::Statevector);

            std::map<std::pair<u64, u32>, double> exact = ht::exact_joint_table(inst);
            const std::map<std::pair<u64, u32>, double>& born = sampler.born_table();
            double tv = 0.0;
            std::set<std::pair<u64, u32>> keys;
            for (const auto& [key, prob] : exact) keys.insert(key);
            for (const auto& [key, prob] : born) keys.insert(key);
            for (const auto& key : keys) {
                double a = exact.count(key) ? exact.at(key) : 0.0;
                double b = born.count(key) ? born.at(key) : 0.0;
                tv += std::abs(a - b);
            }
            tv /= 2.0;
            if (tv >= 1e-9) {
                std::ostringstream os;
                os << "p=" << p << " n=" << n << ": tv " << tv << " between exact and statevector";
                return os.str();
            }

            const u64 draws = 10000;
            u64 ones = 0;
            for (u64 i = 0; i < draws; ++i) {
                ht::SampleRecord rec = sampler.draw(rng);
                if (rec.c == 1) {
                    ++ones;
                    if (fp::dot(rec.y, inst.planted_u()) == 0) {
                        std::ostringstream os;
                        os << "p=" << p << " n=" << n << ": sampled c=1 with y.u=0 at y="
                           << format_coords(rec.y.coords);
                        return os.str();
                    }
                }
            }
            double rate = static_cast<double>(ones) / static_cast<double>(draws);
            if (std::abs(rate - 0.5) > 0.02) {
                std::ostringstream os;
                os << "p=" << p << " n=" << n << ": P(c=1) = " << rate << " off 0.5 by > 0.02";
                return os.str();
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 2. Translation finding at p=3, n=3: the fixed sample budget, a sub-1/2
//    abort rate at 99% confidence, and exactness on every non-abort.

std::string criterion_translation_recovery() {
    const u64 trials = 200;
    u64 aborts = 0;
    for (u64 t = 0; t < trials; ++t) {
        Rng rng(202, t);
        ht::HiddenTranslationInstance inst = ht::random_instance(3, 3, rng);
        ht::TFOutcome res = ht::translation_finding(inst, rng, ht::SamplerMode::Statevector);
        if (res.stats.samples_drawn != 234) {
            std::ostringstream os;
            os << "trial " << t << ": drew " << res.stats.samples_drawn << " samples, expected 234";
            return os.str();
        }
        if (res.status == ht::TFStatus::Found) {
            if (!(res.u == inst.planted_u())) {
                std::ostringstream os;
                os << "trial " << t << ": recovered " << format_coords(res.u.coords)
                   << " instead of " << format_coords(inst.planted_u().coords);
                return os.str();
            }
        } else {
            ++aborts;
        }
    }
    double upper = report::wilson_upper(aborts, trials);
    if (upper >= 0.5) {
        std::ostringstream os;
        os << aborts << "/" << trials << " aborts, 99% upper bound " << upper << " >= 0.5";
        return os.str();
    }
    return "";
}

// ---------------------------------------------------------------------------
// 3. The algebra the solver rests on: line powers span each power of y,
//    the power map spans the whole symmetric space, and no proper subspace
//    captures more than a (p-1)/p fraction of any nonzero class.

std::string criterion_power_span_laws() {
    for (u32 p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            u64 domain = 1;
            for (std::size_t i = 0; i < n; ++i) domain *= p;
            for (u64 a = 0; a < domain; ++a) {
                for (u64 b = 0; b < domain; ++b) {
                    fp::FpVector z(p, n, 0), y(p, n, 0);
                    u64 ai = a, bi = b;
                    for (std::size_t i = 0; i < n; ++i) {
                        z.coords[i] = static_cast<u32>(ai % p);
                        y.coords[i] = static_cast<u32>(bi % p);
                        ai /= p;
                        bi /= p;
                    }
                    if (!fp::check_line_lemma(p, z, y)) {
                        std::ostringstream os;
                        os << "p=" << p << " n=" << n << ": line span misses y^(p-1) at z="
                           << format_coords(z.coords) << " y=" << format_coords(y.coords);
                        return os.str();
                    }
                }
            }
        }
    }

    for (u32 p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            std::size_t want = fp::sym_power_dimension(p, n);
            std::size_t got = fp::check_span_rank(p, n);
            if (got != want) {
                std::ostringstream os;
                os << "p=" << p << " n=" << n << ": power span rank " << got << " != " << want;
                return os.str();
            }
        }
    }

    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
        const u32 p = 3;
        std::size_t dim = fp::sym_power_dimension(p, n);
        Rng rng(303, n);
        for (int iter = 0; iter < 500; ++iter) {
            fp::FpVector u(p, n, 0);
            while (u.is_zero()) {
                for (std::size_t i = 0; i < n; ++i) u.coords[i] = static_cast<u32>(rng.below(p));
            }
            // up to dim-1 random spanning vectors keep the subspace proper
            std::size_t count = 1 + rng.below(dim - 1);
            std::vector<fp::FpVector> w_span;
            for (std::size_t k = 0; k < count; ++k) {
                fp::FpVector w(p, dim, 0);
                for (std::size_t i = 0; i < dim; ++i) w.coords[i] = static_cast<u32>(rng.below(p));
                w_span.push_back(std::move(w));
            }
            fp::FractionCheck res = fp::check_fraction_lemma(p, n, u, w_span);
            if (!res.holds) {
                std::ostringstream os;
                os << "n=" << n << " iter " << iter << ": class k=" << res.worst_class << " kept "
                   << res.members << " of " << res.class_size;
                return os.str();
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 4. The pairing identity behind the recovery step: evaluating the power of
//    y against the star vector of u equals (y.u)^(p-1).

std::string criterion_pairing_identity() {
    for (u32 p : {2u, 3u, 5u}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            u64 domain = 1;
            for (std::size_t i = 0; i < n; ++i) domain *= p;
            fp::MonomialBasis basis(n, p - 1);
            for (u64 a = 0; a < domain; ++a) {
                for (u64 b = 0; b < domain; ++b) {
                    fp::FpVector y(p, n, 0), u(p, n, 0);
                    u64 ai = a, bi = b;
                    for (std::size_t i = 0; i < n; ++i) {
                        y.coords[i] = static_cast<u32>(ai % p);
                        u.coords[i] = static_cast<u32>(bi % p);
                        ai /= p;
                        bi /= p;
                    }
                    u32 lhs = fp::dot(fp::sym_power(y, basis), fp::star_vector(u, basis));
                    u32 rhs = fp::pow_mod(fp::dot(y, u), p - 1, p);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "p=" << p << " n=" << n << ": pairing " << lhs << " != " << rhs
                           << " at y=" << format_coords(y.coords)
                           << " u=" << format_coords(u.coords);
                        return os.str();
                    }
                }
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 5. Every subgroup of Z_3^3 is recovered from coset-action samples, against
//    a brute-force stabilizer, across 50 seeded trials.

std::string criterion_stabilizer_sweep() {
    groups::PolycyclicGroupSpec spec = groups::elementary_abelian_pc(3, 3);
    const u64 order = spec.order();

    // enumerate all subgroups by closing every pair of generators
    std::map<std::vector<u64>, std::vector<groups::Exponents>> subgroups;
    subgroups[orbit::subgroup_closure(spec, {})] = {};
    for (u64 a = 0; a < order; ++a) {
        for (u64 b = a; b < order; ++b) {
            std::vector<groups::Exponents> gens{spec.element_at(a), spec.element_at(b)};
            std::vector<u64> elems = orbit::subgroup_closure(spec, gens);
            if (!subgroups.count(elems)) subgroups[elems] = gens;
        }
    }
    {
        std::vector<groups::Exponents> gens{spec.generator(0), spec.generator(1),
                                            spec.generator(2)};
        std::vector<u64> elems = orbit::subgroup_closure(spec, gens);
        if (!subgroups.count(elems)) subgroups[elems] = gens;
    }
    if (subgroups.size() != 28) {
        return "expected 28 subgroups of Z_3^3, enumerated " + std::to_string(subgroups.size());
    }
    std::vector<std::pair<std::vector<u64>, std::vector<groups::Exponents>>> list(
        subgroups.begin(), subgroups.end());

    for (u64 t = 0; t < 50; ++t) {
        const auto& [elements, gens] = list[t % list.size()];
        orbit::QuantumAction action = orbit::coset_action(spec, gens);
        std::vector<u64> brute = action.stabilizer_of(0);
        if (brute != elements) {
            return "trial " + std::to_string(t) + ": brute-force stabilizer disagrees with the subgroup";
        }
        Rng rng(505, t);
        orbit::StabilizerOutcome res =
            orbit::stabilizer_abelian_on_label(action, 0, 1e-3, 2, 512, rng);
        std::vector<u64> got = orbit::subgroup_closure(spec, res.generators);
        if (got != elements) {
            std::ostringstream os;
            os << "trial " << t << ": recovered subgroup of order " << got.size()
               << ", planted order " << elements.size();
            return os.str();
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 6. Orbit superposition in transparent mode reproduces the analytic uniform
//    orbit state on every built-in action family, covering both the fixed
//    and the moving branch of the step.

std::string criterion_orbit_uniformity() {
    struct Case {
        std::string name;
        orbit::QuantumAction action;
        u64 phi;
    };
    std::vector<Case> cases;
    cases.push_back({"z3-regular", orbit::regular_action(groups::elementary_abelian_pc(3, 1)), 0});
    cases.push_back({"z9-regular", orbit::regular_action(groups::elementary_abelian_pc(3, 2)), 0});
    cases.push_back({"z27-regular", orbit::regular_action(groups::elementary_abelian_pc(3, 3)), 0});
    cases.push_back({"z8-regular", orbit::regular_action(groups::cyclic_pc(8)), 0});
    cases.push_back({"z6-regular",
                     orbit::regular_action(groups::direct_product_pc(
                         groups::cyclic_pc(2), groups::elementary_abelian_pc(3, 1))),
                     0});
    cases.push_back({"sd18-regular", orbit::regular_action(groups::semidirect_zpn_z2_pc(3, 2)), 3});
    cases.push_back({"sd54-regular", orbit::regular_action(groups::semidirect_zpn_z2_pc(3, 3)), 0});
    cases.push_back({"sd6-natural", orbit::natural_semidirect_action(3, 1), 0});
    cases.push_back({"sd18-natural", orbit::natural_semidirect_action(3, 2), 1});
    cases.push_back({"z2-fixed", orbit::trivial_action(groups::cyclic_pc(2), 4), 2});
    cases.push_back({"z2-free", orbit::regular_action(groups::cyclic_pc(2)), 0});

    Rng rng(606);
    for (Case& c : cases) {
        u64 weight = c.action.label_count() * c.action.group().order();
        if (weight > 10000) {
            return c.name + ": case weight " + std::to_string(weight) + " exceeds the 10^4 cap";
        }
        orbit::GroupActionContext ctx = orbit::top_context(c.action);
        orbit::CopyPool pool = orbit::CopyPool::from_basis(ctx.label_count, c.phi, u64{1} << 20);
        orbit::OrbitSuperpositionOutcome out =
            orbit::orbit_superposition(ctx, c.phi, 1, pool, orbit::transparent_label_solver(), rng);
        if (out.copies.empty()) return c.name + ": no surviving copies";
        if (out.skipped_corrections != 0) {
            return c.name + ": " + std::to_string(out.skipped_corrections) +
                   " corrections skipped in transparent mode";
        }
        std::vector<u64> orb = c.action.orbit_of(c.phi);
        sim::PureState exact({sim::Register::value_reg(ctx.label_count)});
        for (u64 l : orb) {
            exact.set_amplitude({l}, 1.0 / std::sqrt(static_cast<double>(orb.size())));
        }
        double fid = sim::fidelity(out.copies.front(), exact);
        if (fid < 1.0 - 1e-6) {
            std::ostringstream os;
            os << c.name << ": fidelity " << fid << " below 1 - 1e-6";
            return os.str();
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 7. The full recursive solver on the order-18 split extension: at least a
//    2/3 success rate over 50 faithful trials, the exact translation on
//    every success, and a clean reject on every disjoint instance.

std::string criterion_coset_translation() {
    groups::PolycyclicGroupSpec spec = groups::semidirect_zpn_z2_pc(3, 2);
    const u64 order = spec.order();
    orbit::SolverConfig cfg;
    cfg.eps = 1e-3;

    u64 found = 0;
    for (u64 t = 0; t < 50; ++t) {
        Rng rng(707, t);
        std::vector<u64> f0(order);
        std::iota(f0.begin(), f0.end(), 0);
        for (u64 i = order; i > 1; --i) std::swap(f0[i - 1], f0[rng.below(i)]);
        groups::Exponents planted = spec.element_at(rng.below(order));
        std::vector<u64> f1(order);
        for (u64 g = 0; g < order; ++g) {
            f1[spec.index_of(spec.multiply(spec.element_at(g), planted))] = f0[g];
        }
        orbit::LabeledCosetInstance inst = orbit::reduce_ht_to_oc(spec, f0, f1, order);
        orbit::GroupActionContext ctx = orbit::top_context(inst.action);
        orbit::OrbitCosetResult res = orbit::orbit_coset_smooth(ctx, inst.phi0, inst.phi1, cfg, rng);
        if (res.found()) {
            if (!(res.u == planted)) {
                std::ostringstream os;
                os << "trial " << t << ": recovered " << format_coords(res.u) << " instead of "
                   << format_coords(planted);
                return os.str();
            }
            ++found;
        }
    }
    if (3 * found < 2 * 50) {
        return "only " + std::to_string(found) + "/50 successes, below the 2/3 bar";
    }

    for (u64 t = 0; t < 10; ++t) {
        Rng rng(808, t);
        std::vector<u64> f0(order);
        std::iota(f0.begin(), f0.end(), 0);
        for (u64 i = order; i > 1; --i) std::swap(f0[i - 1], f0[rng.below(i)]);
        std::vector<u64> f1(order);
        for (u64 g = 0; g < order; ++g) f1[g] = f0[g] + order;  // disjoint value ranges
        orbit::LabeledCosetInstance inst = orbit::reduce_ht_to_oc(spec, f0, f1, 2 * order);
        if (inst.same_orbit) {
            return "disjoint trial " + std::to_string(t) + ": instance landed in one orbit";
        }
        orbit::GroupActionContext ctx = orbit::top_context(inst.action);
        orbit::OrbitCosetResult res = orbit::orbit_coset_smooth(ctx, inst.phi0, inst.phi1, cfg, rng);
        if (res.found()) {
            return "disjoint trial " + std::to_string(t) + ": solver claimed a translation";
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 8. The hidden-subgroup wrapper on the order-54 split extension: every
//    non-abort yields the planted involution coset, and at least half of
//    200 trials finish.

std::string criterion_semidirect_hsp() {
    const u64 trials = 200;
    u64 finished = 0;
    for (u64 t = 0; t < trials; ++t) {
        Rng rng(909, t);
        ht::HiddenTranslationInstance inst =
            ht::random_instance(3, 3, rng, /*allow_zero_u=*/true);
        ht::HspOutcome res = ht::hsp_semidirect(inst, rng, ht::SamplerMode::Statevector);
        if (res.aborted) continue;
        ++finished;
        if (res.generator.b != 1 || !(res.generator.x == inst.planted_u())) {
            std::ostringstream os;
            os << "trial " << t << ": generator " << format_coords(res.generator.x.coords) << ",b="
               << res.generator.b << " does not match the planted translation";
            return os.str();
        }
        if (!ht::hides_subgroup(inst, res.generator)) {
            return "trial " + std::to_string(t) + ": returned generator fails the hiding check";
        }
    }
    if (2 * finished < trials) {
        return "only " + std::to_string(finished) + "/200 non-aborts, below 1/2";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 9. The two-oracle wrapper acts identically to the direct combined oracle
//    on every basis input of the p=3, n=3 instance.

std::string criterion_dual_oracle_agreement() {
    Rng rng(111);
    ht::HiddenTranslationInstance inst = ht::random_instance(3, 3, rng);
    sim::Layout layout{sim::Register::group_reg(groups::zpn_spec(3, 3)),
                       sim::Register::group_reg(groups::AbelianGroupSpec({2})),
                       sim::Register::value_reg(inst.label_count()),
                       sim::Register::value_reg(inst.label_count())};
    for (u64 x = 0; x < inst.domain_size(); ++x) {
        for (u64 b = 0; b <= 1; ++b) {
            u64 neg = inst.index_of(fp::negate(inst.vector_at(x)));
            u64 mine = b == 0 ? inst.f0_at(x) : inst.f1_at(x);
            u64 other = b == 0 ? inst.f1_at(neg) : inst.f0_at(neg);
            sim::BasisLabel expect{x, b, mine, other};

            sim::PureState program = sim::PureState::basis(layout, {x, b, 0, 0});
            sim::PureState direct = program;
            ht::apply_dual_oracle_program(program, inst);
            ht::apply_dual_oracle_direct(direct, inst);
            for (const auto& [name, state] : {std::pair<const char*, const sim::PureState&>{
                                                  "program", program},
                                              {"direct", direct}}) {
                if (state.support_size() != 1 ||
                    std::abs(state.amplitude(expect) - 1.0) > 1e-12) {
                    std::ostringstream os;
                    os << name << " route differs from the analytic image at x=" << x
                       << " b=" << b;
                    return os.str();
                }
            }
        }
    }
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::string (*run)();
    };
    const Criterion criteria[] = {
        {1, "sampling-law", criterion_sampling_law},
        {2, "translation-recovery", criterion_translation_recovery},
        {3, "power-span-laws", criterion_power_span_laws},
        {4, "pairing-identity", criterion_pairing_identity},
        {5, "stabilizer-sweep", criterion_stabilizer_sweep},
        {6, "orbit-uniformity", criterion_orbit_uniformity},
        {7, "coset-translation", criterion_coset_translation},
        {8, "semidirect-hsp", criterion_semidirect_hsp},
        {9, "dual-oracle-agreement", criterion_dual_oracle_agreement},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::printf("PASS %d %s\n", c.id, c.name);
        } else {
            std::printf("FAIL %d %s %s\n", c.id, c.name, detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
