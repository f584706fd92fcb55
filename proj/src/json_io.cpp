#include "htoc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace htoc::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(path + ": cannot open for writing");
    out << content;
    if (!out) throw InputError(path + ": write failed");
}

namespace {

json parse(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

u64 need_u64(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_unsigned()) {
        throw InputError(where + "." + key + ": expected a non-negative integer");
    }
    return v.get<u64>();
}

std::vector<u32> word_from(const json& v, std::size_t arity, const std::string& where) {
    if (!v.is_array() || v.size() != arity) {
        throw InputError(where + ": expected an array of " + std::to_string(arity) + " exponents");
    }
    std::vector<u32> w;
    w.reserve(arity);
    for (const json& e : v) {
        if (!e.is_number_unsigned()) throw InputError(where + ": exponents must be non-negative");
        w.push_back(e.get<u32>());
    }
    return w;
}

groups::PolycyclicGroupSpec group_from(const json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    const json& ro = need(j, "relative_orders", where);
    if (!ro.is_array() || ro.empty()) {
        throw InputError(where + ".relative_orders: expected a non-empty array");
    }
    std::vector<u32> orders;
    for (const json& e : ro) {
        if (!e.is_number_unsigned() || e.get<u64>() < 2) {
            throw InputError(where + ".relative_orders: entries must be integers >= 2");
        }
        orders.push_back(e.get<u32>());
    }
    auto spec = [&] {
        try {
            return groups::PolycyclicGroupSpec(std::move(orders));
        } catch (const std::exception& e) {
            throw InputError(where + ".relative_orders: " + e.what());
        }
    }();
    std::size_t m = spec.gen_count();

    if (auto it = j.find("powers"); it != j.end()) {
        if (!it->is_array() || it->size() != m) {
            throw InputError(where + ".powers: expected one word per generator");
        }
        for (std::size_t i = 0; i < m; ++i) {
            spec.set_power_relation(i, word_from((*it)[i], m,
                                                 where + ".powers[" + std::to_string(i) + "]"));
        }
    }
    if (auto it = j.find("conjugations"); it != j.end()) {
        if (!it->is_array()) throw InputError(where + ".conjugations: expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& entry = (*it)[k];
            std::string ew = where + ".conjugations[" + std::to_string(k) + "]";
            std::size_t a = need_u64(entry, "i", ew);
            std::size_t b = need_u64(entry, "j", ew);
            if (a >= m || b >= m || a >= b) {
                throw InputError(ew + ": need generator indices i < j");
            }
            spec.set_conjugation_relation(a, b, word_from(need(entry, "word", ew), m, ew + ".word"));
        }
    }
    if (auto it = j.find("blocks"); it != j.end()) {
        if (!it->is_array()) throw InputError(where + ".blocks: expected an array");
        std::vector<groups::SeriesBlock> blocks;
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& entry = (*it)[k];
            std::string ew = where + ".blocks[" + std::to_string(k) + "]";
            groups::SeriesBlock b;
            b.first = need_u64(entry, "first", ew);
            b.count = need_u64(entry, "count", ew);
            const json& kind = need(entry, "kind", ew);
            if (kind == "elementary") b.kind = groups::SeriesBlock::Kind::Elementary;
            else if (kind == "small") b.kind = groups::SeriesBlock::Kind::Small;
            else throw InputError(ew + ".kind: expected 'elementary' or 'small'");
            blocks.push_back(b);
        }
        spec.set_blocks(std::move(blocks));
    }
    if (auto it = j.find("commutator_start"); it != j.end()) {
        if (!it->is_number_unsigned()) {
            throw InputError(where + ".commutator_start: expected a generator index");
        }
        spec.set_commutator_start(it->get<std::size_t>());
    }
    try {
        Rng rng(0);  // fixed stream: loading must be deterministic
        groups::validate_presentation(spec, rng);
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
    return spec;
}

json group_to(const groups::PolycyclicGroupSpec& spec) {
    json j;
    j["kind"] = "group";
    j["relative_orders"] = spec.relative_orders();
    std::size_t m = spec.gen_count();
    json powers = json::array();
    for (std::size_t i = 0; i < m; ++i) powers.push_back(spec.power_relation(i));
    j["powers"] = powers;
    json conj = json::array();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const groups::Exponents& w = spec.conjugation_relation(a, b);
            groups::Exponents trivial(m, 0);
            trivial[b] = 1;
            if (w != trivial) conj.push_back({{"i", a}, {"j", b}, {"word", w}});
        }
    }
    if (!conj.empty()) j["conjugations"] = conj;
    if (!spec.blocks().empty()) {
        json blocks = json::array();
        for (const groups::SeriesBlock& b : spec.blocks()) {
            blocks.push_back(
                {{"first", b.first},
                 {"count", b.count},
                 {"kind", b.kind == groups::SeriesBlock::Kind::Elementary ? "elementary" : "small"}});
        }
        j["blocks"] = blocks;
    }
    if (auto cs = spec.commutator_start()) j["commutator_start"] = *cs;
    return j;
}

}  // namespace

groups::PolycyclicGroupSpec load_group_text(const std::string& text, const std::string& origin) {
    json j = parse(text, origin);
    if (j.value("kind", "group") != "group") {
        throw InputError(origin + ": expected kind 'group'");
    }
    return group_from(j, origin);
}

groups::PolycyclicGroupSpec load_group_file(const std::string& path) {
    return load_group_text(read_file(path), path);
}

orbit::QuantumAction load_action_text(const std::string& text, const std::string& origin) {
    json j = parse(text, origin);
    if (!j.is_object() || j.value("kind", "") != "action") {
        throw InputError(origin + ": expected kind 'action'");
    }
    groups::PolycyclicGroupSpec spec = group_from(need(j, "group", origin), origin + ".group");
    u64 labels = need_u64(j, "label_count", origin);
    const json& perms = need(j, "permutations", origin);
    if (!perms.is_array() || perms.size() != spec.gen_count()) {
        throw InputError(origin + ".permutations: expected one permutation per generator");
    }
    std::vector<std::vector<u64>> table;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        const json& row = perms[i];
        std::string ew = origin + ".permutations[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != labels) {
            throw InputError(ew + ": expected " + std::to_string(labels) + " labels");
        }
        std::vector<u64> p;
        p.reserve(labels);
        for (const json& e : row) {
            if (!e.is_number_unsigned() || e.get<u64>() >= labels) {
                throw InputError(ew + ": label out of range");
            }
            p.push_back(e.get<u64>());
        }
        table.push_back(std::move(p));
    }
    try {
        return orbit::QuantumAction(std::move(spec), labels, std::move(table),
                                    j.value("name", std::string{}));
    } catch (const std::exception& e) {
        throw InputError(origin + ": " + e.what());
    }
}

orbit::QuantumAction load_action_file(const std::string& path) {
    return load_action_text(read_file(path), path);
}

std::string group_json(const groups::PolycyclicGroupSpec& spec) {
    return group_to(spec).dump(2) + "\n";
}

std::string action_json(const orbit::QuantumAction& action) {
    json j;
    j["kind"] = "action";
    j["group"] = group_to(action.group());
    j["label_count"] = action.label_count();
    if (!action.name().empty()) j["name"] = action.name();
    json perms = json::array();
    for (std::size_t i = 0; i < action.group().gen_count(); ++i) {
        groups::Exponents g = action.group().generator(i);
        std::vector<u64> row(action.label_count());
        for (u64 l = 0; l < action.label_count(); ++l) row[l] = action.act(g, l);
        perms.push_back(row);
    }
    j["permutations"] = perms;
    return j.dump(2) + "\n";
}

namespace {

json meta_to(const report::RunMeta& meta) {
    json j;
    j["command"] = meta.command;
    j["p"] = meta.p;
    j["n"] = meta.n;
    j["trials"] = meta.trials;
    j["seed"] = meta.seed;
    j["mode"] = meta.mode;
    j["epsilon"] = meta.epsilon;
    if (!meta.group.empty()) j["group"] = meta.group;
    return j;
}

}  // namespace

std::string trials_json(const report::RunMeta& meta, const report::Aggregate& agg,
                        const std::vector<report::TrialRow>& rows) {
    json j = meta_to(meta);
    j["aggregate"] = {{"found", agg.found},
                      {"aborts", agg.aborts},
                      {"rejects", agg.rejects},
                      {"errors", agg.errors},
                      {"verified", agg.verified},
                      {"correct", agg.correct},
                      {"found_rate", agg.found_rate()},
                      {"abort_rate", agg.abort_rate()},
                      {"correct_rate", agg.correct_rate()},
                      {"abort_ci99_upper", report::wilson_upper(agg.aborts, agg.trials)},
                      {"samples", agg.samples},
                      {"copies", agg.copies},
                      {"queries", agg.queries},
                      {"min_fidelity", agg.min_fidelity}};
    json detail = json::array();
    for (const report::TrialRow& row : rows) {
        json r = {{"trial", row.trial},   {"status", row.status},
                  {"verified", row.verified}, {"correct", row.correct},
                  {"u", row.u},           {"samples", row.samples},
                  {"copies", row.copies}, {"queries", row.queries},
                  {"fidelity", row.fidelity}, {"wall_ms", row.wall_ms}};
        if (!row.note.empty()) r["note"] = row.note;
        detail.push_back(std::move(r));
    }
    j["trial_detail"] = detail;
    return j.dump(2) + "\n";
}

std::string distribution_json(const report::RunMeta& meta,
                              const std::vector<report::DistributionRow>& rows,
                              double tv_distance) {
    json j = meta_to(meta);
    json table = json::array();
    bool emp = false;
    for (const report::DistributionRow& r : rows) {
        json e = {{"k", r.k}, {"c", r.c}, {"exact", r.exact}};
        if (r.has_empirical) {
            e["empirical"] = r.empirical;
            emp = true;
        }
        table.push_back(std::move(e));
    }
    j["table"] = table;
    if (emp) j["tv_distance"] = tv_distance;
    return j.dump(2) + "\n";
}

}  // namespace htoc::io
