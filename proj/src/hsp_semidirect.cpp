#include "htoc/hsp_semidirect.hpp"

#include <map>
#include <set>

namespace htoc::ht {

using groups::SemidirectZpnZ2;

HspOutcome hsp_semidirect(const HiddenTranslationInstance& inst, Rng& rng, SamplerMode mode,
                          u64 sample_multiplier) {
    TFOutcome tf = translation_finding(inst, rng, mode, sample_multiplier);
    HspOutcome out;
    out.stats = tf.stats;
    if (tf.status != TFStatus::Found) return out;
    SemidirectZpnZ2 group(inst.p(), inst.n());
    out.aborted = false;
    out.generator = group.make(tf.u.coords, 1);
    return out;
}

bool hides_subgroup(const HiddenTranslationInstance& inst, const SemidirectZpnZ2::Element& gen) {
    SemidirectZpnZ2 group(inst.p(), inst.n());
    groups::PolycyclicGroupSpec pc = group.pc_spec();

    std::vector<SemidirectZpnZ2::Element> subgroup = {group.identity()};
    SemidirectZpnZ2::Element acc = gen;
    while (!(acc == group.identity())) {
        subgroup.push_back(acc);
        acc = group.multiply(acc, gen);
        if (subgroup.size() > group.order()) {
            throw InternalError("hides_subgroup: generator closure did not terminate");
        }
    }

    auto f_value = [&](const SemidirectZpnZ2::Element& g) {
        return g.b == 0 ? inst.f0(g.x) : inst.f1(g.x);
    };

    // constant on each left coset, distinct across cosets
    std::set<u64> coset_values;
    std::set<u64> seen_elements;
    for (u64 i = 0; i < group.order(); ++i) {
        if (seen_elements.count(i)) continue;
        SemidirectZpnZ2::Element g = group.from_pc(pc.element_at(i));
        u64 value = f_value(g);
        for (const auto& h : subgroup) {
            SemidirectZpnZ2::Element member = group.multiply(g, h);
            seen_elements.insert(pc.index_of(group.to_pc(member)));
            if (f_value(member) != value) return false;
        }
        if (!coset_values.insert(value).second) return false;
    }
    return true;
}

}  // namespace htoc::ht
