#pragma once

//! Group actions on a finite set of mutually orthogonal labeled states.
//! An action stores one permutation per polycyclic generator and acts on
//! normal forms by composing generator permutations; it lifts linearly to
//! sparse states by permuting one register's labels. Labels may optionally
//! expand to inner states (e.g. function superpositions) for demos and
//! fidelity checks; the solvers work on the labels themselves.

#include <functional>
#include <string>

#include "htoc/polycyclic.hpp"
#include "htoc/state_ops.hpp"

namespace htoc::orbit {

using groups::Exponents;
using groups::PolycyclicGroupSpec;
using sim::PureState;

class QuantumAction {
  public:
    QuantumAction(PolycyclicGroupSpec group, u64 label_count,
                  std::vector<std::vector<u64>> generator_permutations, std::string name = "");

    const PolycyclicGroupSpec& group() const { return group_; }
    u64 label_count() const { return labels_; }
    const std::string& name() const { return name_; }

    //! One black-box action query.
    u64 act(const Exponents& g, u64 label) const;
    u64 act_index(u64 g_index, u64 label) const;

    //! Permute the labels of one register; counts as one query.
    void act_state(PureState& s, std::size_t reg, const Exponents& g) const;

    u64 queries() const { return queries_; }
    void reset_queries() { queries_ = 0; }

    void set_label_expander(std::function<PureState(u64)> fn) { expander_ = std::move(fn); }
    bool has_label_expander() const { return static_cast<bool>(expander_); }
    PureState expand_label(u64 label) const;

    //! Identity and homomorphism laws: exhaustive over labels, random pairs.
    //! Throws InternalError on violation.
    void validate(Rng& rng, std::size_t pairs = 32) const;

    //! All labels reachable from the given one, sorted.
    std::vector<u64> orbit_of(u64 label) const;

    //! Brute force { g : act(g, label) = label } as group element indices.
    std::vector<u64> stabilizer_of(u64 label) const;

  private:
    PolycyclicGroupSpec group_;
    u64 labels_ = 0;
    std::vector<std::vector<u64>> perm_;
    std::string name_;
    mutable u64 queries_ = 0;
    std::function<PureState(u64)> expander_;
};

//! Diagonal action on t-tuples of labels; issues t base queries per call.
struct PowerAction {
    const QuantumAction* base = nullptr;
    u32 t = 1;

    std::vector<u64> act(const Exponents& g, const std::vector<u64>& labels) const;
};

// Builders.
QuantumAction regular_action(const PolycyclicGroupSpec& spec, std::string name = "");
QuantumAction trivial_action(const PolycyclicGroupSpec& spec, u64 label_count,
                             std::string name = "");
//! Left translation on the cosets gH; label = position of the coset's
//! smallest element index. The subgroup is given by generator exponent words.
QuantumAction coset_action(const PolycyclicGroupSpec& spec,
                           const std::vector<Exponents>& subgroup_gens, std::string name = "");
//! Z_p^n x| Z_2 on Z_p^n labels via (x, b) . y = x + (-1)^b y.
QuantumAction natural_semidirect_action(u32 p, std::size_t n, std::string name = "");
//! Two independent copies of the same action side by side (disjoint orbits).
QuantumAction disjoint_union_action(const QuantumAction& a, const QuantumAction& b,
                                    std::string name = "");
//! Left translation on the right-translates f_v = g -> f(g v) of a function
//! table on the group; labels carry an expander to the inner superposition
//! state sum_g |g>|f(g v)> / sqrt|G|.
QuantumAction translation_action(const PolycyclicGroupSpec& spec, std::vector<u64> f_table,
                                 u64 value_count, std::string name = "");

//! Elements of the subgroup generated by the given words (closure, sorted
//! indices). Shared by the coset builder and the brute-force verifiers.
std::vector<u64> subgroup_closure(const PolycyclicGroupSpec& spec,
                                  const std::vector<Exponents>& gens);

//! Direct construction of |f_v>: registers [group-as-values, value set].
PureState function_superposition(const PolycyclicGroupSpec& spec, const std::vector<u64>& f_table,
                                 u64 value_count, const Exponents& translate,
                                 SimLimits limits = default_limits());

}  // namespace htoc::orbit
