#include "htoc/ht_instance.hpp"

#include <algorithm>
#include <unordered_set>

namespace htoc::ht {

namespace {

groups::AbelianElement to_element(const FpVector& x) {
    return groups::AbelianElement(x.coords.begin(), x.coords.end());
}

FpVector from_element(u32 p, const groups::AbelianElement& e) {
    return FpVector(p, std::vector<u32>(e.begin(), e.end()));
}

}  // namespace

HiddenTranslationInstance::HiddenTranslationInstance(u32 p, std::size_t n, FpVector u,
                                                     std::vector<u64> f0_table, u64 label_count)
    : p_(p), n_(n), u_(std::move(u)), spec_(groups::zpn_spec(p, n)), table_(std::move(f0_table)) {
    if (n_ == 0) throw InputError("instance: n must be positive");
    if (u_.p != p_ || u_.size() != n_) throw InputError("instance: u has wrong shape");
    domain_ = spec_.order();
    label_count_ = label_count == 0 ? domain_ : label_count;
    if (table_.size() != domain_) throw InputError("instance: f0 table has wrong length");
    std::unordered_set<u64> seen;
    for (u64 v : table_) {
        if (v >= label_count_) throw InputError("instance: label out of range");
        if (!seen.insert(v).second) throw InputError("instance: f0 not injective");
    }
}

u64 HiddenTranslationInstance::index_of(const FpVector& x) const {
    if (x.p != p_ || x.size() != n_) throw InputError("instance: vector has wrong shape");
    return spec_.index_of(to_element(x));
}

FpVector HiddenTranslationInstance::vector_at(u64 index) const {
    return from_element(p_, spec_.element_at(index));
}

u64 HiddenTranslationInstance::f0(const FpVector& x) const { return table_[index_of(x)]; }

u64 HiddenTranslationInstance::f1(const FpVector& x) const {
    return table_[index_of(fp::sub(x, u_))];
}

u64 HiddenTranslationInstance::f0_at(u64 index) const { return table_.at(index); }

u64 HiddenTranslationInstance::f1_at(u64 index) const { return f1(vector_at(index)); }

std::vector<u64> HiddenTranslationInstance::f1_table() const {
    std::vector<u64> out(domain_);
    for (u64 i = 0; i < domain_; ++i) out[i] = f1_at(i);
    return out;
}

HiddenTranslationInstance random_instance_with_u(u32 p, std::size_t n, const FpVector& u, Rng& rng,
                                                 u64 label_count) {
    u64 domain = 1;
    for (std::size_t i = 0; i < n; ++i) domain *= p;
    if (label_count == 0) label_count = domain;
    if (label_count < domain) throw InputError("instance: label range too small for injectivity");

    std::vector<u64> labels;
    if (label_count == domain) {
        labels.resize(domain);
        for (u64 i = 0; i < domain; ++i) labels[i] = i;
    } else {
        std::unordered_set<u64> seen;
        while (labels.size() < domain) {
            u64 v = rng.below(label_count);
            if (seen.insert(v).second) labels.push_back(v);
        }
    }
    // Fisher-Yates with the shared stream keeps instances reproducible.
    for (std::size_t i = labels.size(); i > 1; --i) {
        std::swap(labels[i - 1], labels[rng.below(i)]);
    }
    return HiddenTranslationInstance(p, n, u, std::move(labels), label_count);
}

HiddenTranslationInstance random_instance(u32 p, std::size_t n, Rng& rng, bool allow_zero_u,
                                          u64 label_count) {
    u64 domain = 1;
    for (std::size_t i = 0; i < n; ++i) domain *= p;
    u64 idx = allow_zero_u ? rng.below(domain) : 1 + rng.below(domain - 1);
    groups::AbelianGroupSpec spec = groups::zpn_spec(p, n);
    FpVector u = from_element(p, spec.element_at(idx));
    return random_instance_with_u(p, n, u, rng, label_count);
}

}  // namespace htoc::ht
