//! Command-line experiment driver: translation finding, sampling
//! distributions, algebra lemma checks, and orbit/stabilizer solver demos on
//! built-in or JSON-supplied groups. Every run is reproducible from the seed;
//! trial i always draws from the stream (seed, i) regardless of order.

#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "htoc/fp_checks.hpp"
#include "htoc/hsp_semidirect.hpp"
#include "htoc/json_io.hpp"
#include "htoc/orbit_coset.hpp"
#include "htoc/translation_finding.hpp"

namespace {

using htoc::InputError;
using htoc::Rng;
using htoc::u32;
using htoc::u64;
namespace fp = htoc::fp;
namespace groups = htoc::groups;
namespace ht = htoc::ht;
namespace io = htoc::io;
namespace orbit = htoc::orbit;
namespace report = htoc::report;

struct Options {
    u32 p = 3;
    std::size_t n = 2;
    u64 trials = 0;  // per-verb default
    u64 seed = 1;
    std::string mode;
    double epsilon = 1e-3;
    std::string out;
    std::string format = "csv";
    std::string group;
    std::string u_text;  // planted translation override, digits joined by ';'
    bool exhaustive = false;
    bool inject_fault = false;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        io::write_file(o.out, text);
    }
}

report::RunMeta make_meta(const char* command, const Options& o) {
    report::RunMeta meta;
    meta.command = command;
    meta.p = o.p;
    meta.n = o.n;
    meta.trials = o.trials;
    meta.seed = o.seed;
    meta.mode = o.mode;
    meta.epsilon = o.epsilon;
    meta.group = o.group;
    return meta;
}

void require_instance_caps(const Options& o) {
    if (!fp::is_prime(o.p)) throw InputError("--p must be a prime");
    if (o.p > 13) throw InputError("--p capped at 13");
    if (o.n == 0 || o.n > 6) throw InputError("--n must be in 1..6");
}

ht::SamplerMode sampler_mode(const Options& o) {
    if (o.mode == "shortcut") return ht::SamplerMode::Shortcut;
    if (o.mode == "statevector") return ht::SamplerMode::Statevector;
    throw InputError("--mode must be statevector or shortcut");
}

fp::FpVector vec_at(u32 p, std::size_t n, u64 index) {
    fp::FpVector v(p, n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        v.coords[i] = static_cast<u32>(index % p);
        index /= p;
    }
    return v;
}

fp::FpVector parse_u(const Options& o) {
    fp::FpVector u(o.p, o.n, 0);
    std::size_t at = 0, i = 0;
    while (i < o.n) {
        std::size_t end = o.u_text.find(';', at);
        std::string part = o.u_text.substr(at, end == std::string::npos ? end : end - at);
        try {
            u.coords[i] = static_cast<u32>(std::stoul(part));
        } catch (const std::exception&) {
            throw InputError("--u: expected digits joined by ';'");
        }
        if (u.coords[i] >= o.p) throw InputError("--u: entries must be below p");
        ++i;
        if (end == std::string::npos) break;
        at = end + 1;
    }
    if (i != o.n) throw InputError("--u: expected " + std::to_string(o.n) + " entries");
    return u;
}

groups::PolycyclicGroupSpec resolve_group(const Options& o) {
    const std::string& key = o.group;
    if (key.empty() || key == "zpn") return groups::elementary_abelian_pc(o.p, o.n);
    if (key == "sdpn") return groups::semidirect_zpn_z2_pc(o.p, o.n);
    if (key == "sd18") return groups::semidirect_zpn_z2_pc(3, 2);
    if (key == "sd54") return groups::semidirect_zpn_z2_pc(3, 3);
    if (key == "z8") return groups::cyclic_pc(8);
    if (key.find('/') != std::string::npos || key.find(".json") != std::string::npos) {
        return io::load_group_file(key);
    }
    throw InputError("unknown group '" + key +
                     "' (builtins: zpn, sdpn, sd18, sd54, z8; or a JSON file path)");
}

// ---------------------------------------------------------------- ht-run --

int run_ht(const Options& o) {
    require_instance_caps(o);
    ht::SamplerMode mode = sampler_mode(o);
    report::RunMeta meta = make_meta("ht-run", o);
    meta.epsilon = 0.0;  // the table solver has no tunable accuracy knob
    std::vector<report::TrialRow> rows;
    report::Aggregate agg;
    for (u64 t = 0; t < o.trials; ++t) {
        Rng rng(o.seed, t);
        auto start = std::chrono::steady_clock::now();
        ht::HiddenTranslationInstance inst =
            o.u_text.empty() ? ht::random_instance(o.p, o.n, rng)
                             : ht::random_instance_with_u(o.p, o.n, parse_u(o), rng);
        ht::TFOutcome res = ht::translation_finding(inst, rng, mode);
        report::TrialRow row;
        row.trial = t;
        row.samples = res.stats.samples_drawn;
        if (res.status == ht::TFStatus::Found) {
            row.status = "found";
            row.verified = true;
            row.correct = res.u == inst.planted_u();
            row.u = res.u.coords;
        } else {
            row.status = "abort";
        }
        row.wall_ms = ms_since(start);
        agg.add(row);
        rows.push_back(std::move(row));
    }
    emit(o, o.format == "json" ? io::trials_json(meta, agg, rows) : report::aggregate_csv(meta, agg));
    return 0;
}

// --------------------------------------------------------- distribution --

int run_distribution(const Options& o) {
    require_instance_caps(o);
    ht::SamplerMode mode = sampler_mode(o);
    fp::FpVector u = o.u_text.empty() ? fp::FpVector(o.p, o.n, 0) : parse_u(o);
    if (o.u_text.empty()) u.coords[0] = 1;
    if (u.is_zero()) throw InputError("distribution: the translation must be nonzero");

    std::vector<ht::ClassProb> classes = ht::exact_sample_distribution(o.p, o.n, u);
    std::map<std::pair<u32, u32>, double> exact;
    for (const ht::ClassProb& cp : classes) exact[{cp.k, cp.c}] = cp.prob;

    std::map<std::pair<u32, u32>, double> empirical;
    bool have_empirical = mode == ht::SamplerMode::Statevector && o.trials > 0;
    if (have_empirical) {
        Rng inst_rng(o.seed, 0);
        ht::HiddenTranslationInstance inst = ht::random_instance_with_u(o.p, o.n, u, inst_rng);
        ht::HtSampler sampler(inst, ht::SamplerMode::Statevector);
        Rng rng(o.seed, 1);
        for (u64 t = 0; t < o.trials; ++t) {
            ht::SampleRecord rec = sampler.draw(rng);
            empirical[{fp::dot(rec.y, u), rec.c}] += 1.0;
        }
        for (auto& [key, count] : empirical) count /= static_cast<double>(o.trials);
    }

    std::vector<report::DistributionRow> rows;
    double tv = 0.0;
    for (u32 k = 0; k < o.p; ++k) {
        for (u32 c = 0; c <= 1; ++c) {
            report::DistributionRow row;
            row.k = k;
            row.c = c;
            row.exact = exact.count({k, c}) ? exact[{k, c}] : 0.0;
            if (have_empirical) {
                row.has_empirical = true;
                row.empirical = empirical.count({k, c}) ? empirical[{k, c}] : 0.0;
                tv += std::abs(row.exact - row.empirical);
            }
            rows.push_back(row);
        }
    }
    tv /= 2.0;

    report::RunMeta meta = make_meta("distribution", o);
    emit(o, o.format == "json" ? io::distribution_json(meta, rows, tv)
                               : report::distribution_csv(rows));
    return 0;
}

// ----------------------------------------------------------- lemma-check --

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string format_vec(const std::vector<u32>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

int run_lemma_check(const Options& o) {
    if (!fp::is_prime(o.p)) throw InputError("--p must be a prime");
    if (o.p > 7) throw InputError("lemma-check: p capped at 7");
    if (o.n == 0 || o.n > 4) throw InputError("lemma-check: n must be in 1..4");
    u64 domain = 1;
    for (std::size_t i = 0; i < o.n; ++i) domain *= o.p;
    if (o.exhaustive && domain * domain > 1u << 20) {
        throw InputError("lemma-check: exhaustive sweep too large for this p, n");
    }

    // the optional fault shifts the first coefficient of every computed
    // power, which knocks the line-span containment out for independent pairs
    fp::SymPowerHook hook;
    if (o.inject_fault) {
        u32 p = o.p;
        hook = [p](fp::SymPowerVector& s) { s.coords[0] = (s.coords[0] + 1) % p; };
    }

    std::vector<CheckLine> checks;

    fp::LineBasisDeterminant det = fp::line_basis_determinant(o.p);
    checks.push_back({"line-basis-determinant", det.computed == det.closed_form && det.computed != 0,
                      "computed " + std::to_string(det.computed) + " closed form " +
                          std::to_string(det.closed_form)});

    {
        CheckLine line{"line-power-span", true, ""};
        auto try_pair = [&](const fp::FpVector& z, const fp::FpVector& y) {
            if (line.pass && !fp::check_line_lemma(o.p, z, y, hook)) {
                line.pass = false;
                line.detail = "power of y not in the line span at z=" + format_vec(z.coords) +
                              " y=" + format_vec(y.coords);
            }
        };
        if (o.exhaustive) {
            for (u64 a = 0; a < domain && line.pass; ++a) {
                for (u64 b = 0; b < domain && line.pass; ++b) {
                    try_pair(vec_at(o.p, o.n, a), vec_at(o.p, o.n, b));
                }
            }
        } else {
            Rng rng(o.seed, 2);
            for (int k = 0; k < 100 && line.pass; ++k) {
                try_pair(vec_at(o.p, o.n, rng.below(domain)),
                         vec_at(o.p, o.n, rng.below(domain)));
            }
        }
        checks.push_back(std::move(line));
    }

    {
        std::size_t want = fp::sym_power_dimension(o.p, o.n);
        std::size_t got = fp::check_span_rank(o.p, o.n);
        checks.push_back({"power-span-rank", got == want,
                          "rank " + std::to_string(got) + " of " + std::to_string(want)});
    }

    {
        CheckLine frac{"fraction-bound", true, ""};
        u64 count = 0;
        for (u64 ui = 1; ui < domain && frac.pass; ++ui) {
            if (!o.exhaustive && count >= 6) break;
            fp::FpVector u = vec_at(o.p, o.n, ui);
            ++count;
            // W = span of the powers of the orthogonal hyperplane, the
            // adversarial subspace the solver's kept equations fight against
            std::vector<fp::FpVector> w_span;
            for (u64 yi = 0; yi < domain; ++yi) {
                fp::FpVector y = vec_at(o.p, o.n, yi);
                if (fp::dot(y, u) == 0) {
                    w_span.push_back(fp::sym_power(y, o.p - 1).as_fp_vector());
                }
            }
            fp::FractionCheck res = fp::check_fraction_lemma(o.p, o.n, u, w_span);
            if (!res.holds) {
                frac.pass = false;
                frac.detail = "u=" + format_vec(u.coords) + " class k=" + std::to_string(res.worst_class) +
                              " kept " + std::to_string(res.members) + " of " +
                              std::to_string(res.class_size);
            }
        }
        checks.push_back(std::move(frac));
    }

    bool all = true;
    std::string text = "check,pass,detail\n";
    for (const CheckLine& c : checks) {
        all = all && c.pass;
        text += c.name;
        text += c.pass ? ",PASS," : ",FAIL,";
        text += c.detail + "\n";
    }
    if (o.format == "json") {
        std::string j = "{\n  \"checks\": [\n";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            j += std::string("    {\"name\": \"") + checks[i].name + "\", \"pass\": " +
                 (checks[i].pass ? "true" : "false") + ", \"detail\": \"" + checks[i].detail +
                 "\"}";
            j += i + 1 < checks.size() ? ",\n" : "\n";
        }
        j += "  ]\n}\n";
        emit(o, j);
    } else {
        emit(o, text);
    }
    return all ? 0 : 1;
}

// ------------------------------------------------------------ orbit-demo --

orbit::SolverConfig demo_config(const Options& o) {
    orbit::SolverConfig cfg;
    cfg.eps = o.epsilon;
    if (o.mode == "transparent") {
        cfg.transparent = true;
    } else if (o.mode != "faithful") {
        throw InputError("--mode must be faithful or transparent");
    }
    return cfg;
}

std::vector<u64> random_injection(u64 order, Rng& rng) {
    std::vector<u64> f(order);
    std::iota(f.begin(), f.end(), 0);
    for (u64 i = order; i > 1; --i) std::swap(f[i - 1], f[rng.below(i)]);
    return f;
}

int run_orbit_demo(const Options& o) {
    groups::PolycyclicGroupSpec spec = resolve_group(o);
    orbit::SolverConfig cfg = demo_config(o);
    report::RunMeta meta = make_meta("orbit-demo", o);
    u64 order = spec.order();

    std::vector<report::TrialRow> rows;
    report::Aggregate agg;
    for (u64 t = 0; t < o.trials; ++t) {
        Rng rng(o.seed, t);
        auto start = std::chrono::steady_clock::now();
        std::vector<u64> f0 = random_injection(order, rng);
        groups::Exponents planted = spec.element_at(rng.below(order));
        std::vector<u64> f1(order);
        for (u64 g = 0; g < order; ++g) {
            // f1(g . planted) = f0(g): the planted element is the coset representative
            f1[spec.index_of(spec.multiply(spec.element_at(g), planted))] = f0[g];
        }
        orbit::LabeledCosetInstance inst = orbit::reduce_ht_to_oc(spec, f0, f1, order);
        orbit::GroupActionContext ctx = orbit::top_context(inst.action);
        orbit::OrbitCosetResult res = orbit::orbit_coset_smooth(ctx, inst.phi0, inst.phi1, cfg, rng);

        // independent fidelity probe: manufacture one full orbit
        // superposition and compare against the exact uniform one
        orbit::CopyPool pool =
            orbit::CopyPool::from_basis(ctx.label_count, inst.phi1, cfg.pseudo_copy_budget);
        orbit::SolverConfig probe_cfg = orbit::derive_recursion_config(cfg, spec);
        orbit::LabelCosetSolver solver = orbit::recursive_label_solver(probe_cfg, rng);
        orbit::OrbitSuperpositionOutcome made =
            orbit::orbit_superposition(ctx, inst.phi1, 1, pool, solver, rng);
        std::vector<u64> orb = inst.action.orbit_of(inst.phi1);
        htoc::sim::PureState exact({htoc::sim::Register::value_reg(ctx.label_count)});
        for (u64 l : orb) {
            exact.set_amplitude({l}, 1.0 / std::sqrt(static_cast<double>(orb.size())));
        }
        double fid = htoc::sim::fidelity(made.copies.front(), exact);

        report::TrialRow row;
        row.trial = t;
        if (res.found()) {
            row.status = "found";
            row.verified = true;
            row.correct = res.u == planted;
            row.u = res.u;
        } else {
            row.status = "reject";
        }
        row.samples = res.stats.stab_samples + res.stats.translation_samples;
        row.copies = res.stats.copies_consumed;
        row.queries = inst.action.queries();
        row.fidelity = fid;
        row.wall_ms = ms_since(start);
        agg.add(row);
        rows.push_back(std::move(row));
    }
    emit(o, o.format == "json" ? io::trials_json(meta, agg, rows) : report::aggregate_csv(meta, agg));
    return 0;
}

// -------------------------------------------------------- stabilizer-run --

int run_stabilizer(const Options& o) {
    groups::PolycyclicGroupSpec spec = resolve_group(o);
    orbit::SolverConfig cfg = demo_config(o);
    report::RunMeta meta = make_meta("stabilizer-run", o);
    u64 order = spec.order();

    std::vector<report::TrialRow> rows;
    report::Aggregate agg;
    for (u64 t = 0; t < o.trials; ++t) {
        Rng rng(o.seed, t);
        auto start = std::chrono::steady_clock::now();
        std::vector<groups::Exponents> planted_gens;
        for (u64 k = rng.below(3); k > 0; --k) {
            planted_gens.push_back(spec.element_at(rng.below(order)));
        }
        std::vector<u64> subgroup = orbit::subgroup_closure(spec, planted_gens);

        // hiding function: label each left coset by its smallest member
        std::vector<u64> f(order);
        for (u64 g = 0; g < order; ++g) {
            u64 best = order;
            for (u64 h : subgroup) {
                best = std::min(best,
                                spec.index_of(spec.multiply(spec.element_at(g), spec.element_at(h))));
            }
            f[g] = best;
        }
        orbit::LabeledStabilizerInstance inst = orbit::reduce_hsp_to_stab(spec, f, order);
        orbit::GroupActionContext ctx = orbit::top_context(inst.action);
        orbit::OrbitCosetResult res = orbit::stabilizer_solvable(ctx, inst.phi, cfg, rng);

        report::TrialRow row;
        row.trial = t;
        row.status = "found";
        row.verified = true;
        row.correct = orbit::subgroup_closure(spec, res.stabilizer) == subgroup;
        row.samples = res.stats.stab_samples + res.stats.translation_samples;
        row.copies = res.stats.copies_consumed;
        row.queries = inst.action.queries();
        row.wall_ms = ms_since(start);
        agg.add(row);
        rows.push_back(std::move(row));
    }
    emit(o, o.format == "json" ? io::trials_json(meta, agg, rows) : report::aggregate_csv(meta, agg));
    return 0;
}

// --------------------------------------------------------------- hsp-run --

int run_hsp(const Options& o) {
    require_instance_caps(o);
    ht::SamplerMode mode = sampler_mode(o);
    report::RunMeta meta = make_meta("hsp-run", o);
    std::vector<report::TrialRow> rows;
    report::Aggregate agg;
    for (u64 t = 0; t < o.trials; ++t) {
        Rng rng(o.seed, t);
        auto start = std::chrono::steady_clock::now();
        ht::HiddenTranslationInstance inst =
            o.u_text.empty() ? ht::random_instance(o.p, o.n, rng, /*allow_zero_u=*/true)
                             : ht::random_instance_with_u(o.p, o.n, parse_u(o), rng);
        ht::HspOutcome res = ht::hsp_semidirect(inst, rng, mode);
        report::TrialRow row;
        row.trial = t;
        row.samples = res.stats.samples_drawn;
        if (!res.aborted) {
            row.status = "found";
            row.verified = true;
            row.correct = ht::hides_subgroup(inst, res.generator) &&
                          res.generator.x == inst.planted_u();
            row.u = res.generator.x.coords;
            row.u.push_back(res.generator.b);
        } else {
            row.status = "abort";
        }
        row.wall_ms = ms_since(start);
        agg.add(row);
        rows.push_back(std::move(row));
    }
    emit(o, o.format == "json" ? io::trials_json(meta, agg, rows) : report::aggregate_csv(meta, agg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simulators for translation finding and orbit problems on finite groups"};
    app.require_subcommand(1);

    Options o;
    // several subcommands bind the same Options field, so defaults are applied
    // per verb at dispatch (default_val here would cross-contaminate them)
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--trials", o.trials, "number of independent trials")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "base seed; trial i draws from stream (seed, i)");
        cmd->add_option("--mode", o.mode, "execution mode");
        cmd->add_option("--epsilon", o.epsilon, "target error budget for solver runs")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", o.out, "write the report here instead of stdout");
        cmd->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_pn = [&](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "prime modulus");
        cmd->add_option("--n", o.n, "dimension");
    };

    CLI::App* ht_cmd = app.add_subcommand("ht-run", "translation finding on random planted instances");
    add_pn(ht_cmd);
    add_common(ht_cmd);
    ht_cmd->add_option("--u", o.u_text, "planted translation, digits joined by ';'");

    CLI::App* dist_cmd =
        app.add_subcommand("distribution", "exact sampling distribution, optionally vs empirical");
    add_pn(dist_cmd);
    add_common(dist_cmd);
    dist_cmd->add_option("--u", o.u_text, "translation defining the classes (default 1,0,...)");

    CLI::App* lemma_cmd = app.add_subcommand("lemma-check", "verify the supporting algebra facts");
    add_pn(lemma_cmd);
    add_common(lemma_cmd);
    lemma_cmd->add_flag("--exhaustive", o.exhaustive, "sweep all vector pairs and translations");
    lemma_cmd->add_flag("--inject-fault", o.inject_fault,
                        "corrupt computed powers to exercise the FAIL path");

    CLI::App* orbit_cmd =
        app.add_subcommand("orbit-demo", "orbit-coset solver demo on planted translate instances");
    add_pn(orbit_cmd);
    add_common(orbit_cmd);
    orbit_cmd->add_option("--group", o.group, "builtin key or group JSON path");

    CLI::App* stab_cmd =
        app.add_subcommand("stabilizer-run", "stabilizer solver demo on planted subgroups");
    add_pn(stab_cmd);
    add_common(stab_cmd);
    stab_cmd->add_option("--group", o.group, "builtin key or group JSON path");

    CLI::App* hsp_cmd =
        app.add_subcommand("hsp-run", "hidden subgroup in the split extension via translation finding");
    add_pn(hsp_cmd);
    add_common(hsp_cmd);
    hsp_cmd->add_option("--u", o.u_text, "planted involution part, digits joined by ';'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto with_defaults = [](Options opts, u64 trials, const char* mode, const char* group = "") {
        if (opts.trials == 0) opts.trials = trials;
        if (opts.mode.empty()) opts.mode = mode;
        if (opts.group.empty()) opts.group = group;
        return opts;
    };

    try {
        if (app.got_subcommand(ht_cmd)) return run_ht(with_defaults(o, 100, "statevector"));
        if (app.got_subcommand(dist_cmd))
            return run_distribution(with_defaults(o, 10000, "statevector"));
        if (app.got_subcommand(lemma_cmd)) return run_lemma_check(with_defaults(o, 1, "exact"));
        if (app.got_subcommand(orbit_cmd))
            return run_orbit_demo(with_defaults(o, 10, "faithful", "sd18"));
        if (app.got_subcommand(stab_cmd))
            return run_stabilizer(with_defaults(o, 20, "faithful", "zpn"));
        if (app.got_subcommand(hsp_cmd)) return run_hsp(with_defaults(o, 100, "statevector"));
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
