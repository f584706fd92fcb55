#pragma once

//! Finite solvable groups by consistent polycyclic presentation: generators
//! z_0..z_{m-1} with prime relative orders, power relations z_i^{r_i} and
//! conjugation relations z_i^{-1} z_j z_i (i < j) given as normal forms on
//! the later generators. Products normalize by collection. The generator
//! order encodes a subnormal series G = G_0 > G_1 > ... > G_m = 1 with
//! G_i = <z_i, ..., z_{m-1}> and prime cyclic factors.

#include <optional>
#include <vector>

#include "htoc/abelian.hpp"
#include "htoc/common.hpp"

namespace htoc::groups {

//! Normal-form exponent tuple; entry i is in [0, r_i).
using Exponents = std::vector<u32>;

//! Annotation for a run of consecutive series steps whose combined factor is
//! abelian: either elementary abelian (all the same prime, componentwise) or
//! small enough for exhaustive treatment.
struct SeriesBlock {
    enum class Kind { Elementary, Small };
    std::size_t first = 0;
    std::size_t count = 0;
    Kind kind = Kind::Small;

    bool operator==(const SeriesBlock&) const = default;
};

class PolycyclicGroupSpec {
  public:
    //! Trivial relations: direct product of Z_{r_i}.
    explicit PolycyclicGroupSpec(std::vector<u32> relative_orders);

    std::size_t gen_count() const { return r_.size(); }
    u32 relative_order(std::size_t i) const { return r_[i]; }
    const std::vector<u32>& relative_orders() const { return r_; }
    u64 order() const;

    void set_power_relation(std::size_t i, Exponents word);
    void set_conjugation_relation(std::size_t i, std::size_t j, Exponents word);
    const Exponents& power_relation(std::size_t i) const { return power_[i]; }
    const Exponents& conjugation_relation(std::size_t i, std::size_t j) const;

    void set_blocks(std::vector<SeriesBlock> blocks);
    const std::vector<SeriesBlock>& blocks() const { return blocks_; }
    void set_commutator_start(std::size_t i);
    std::optional<std::size_t> commutator_start() const { return commutator_start_; }

    Exponents identity() const { return Exponents(r_.size(), 0); }
    Exponents generator(std::size_t i) const;
    void check_element(const Exponents& e) const;

    Exponents multiply(const Exponents& a, const Exponents& b) const;
    Exponents inverse(const Exponents& a) const;
    Exponents power(const Exponents& a, u64 e) const;
    Exponents conjugate(const Exponents& g, const Exponents& x) const;  // x^-1 g x

    u64 index_of(const Exponents& e) const;
    Exponents element_at(u64 index) const;

    bool operator==(const PolycyclicGroupSpec&) const = default;

  private:
    Exponents mul_letter(Exponents res, std::size_t g, u32 e) const;
    Exponents conj_word_by_gen(const Exponents& w, std::size_t g) const;

    std::vector<u32> r_;
    std::vector<Exponents> power_;                // power_[i]: z_i^{r_i}
    std::vector<std::vector<Exponents>> conj_;    // conj_[i][j-i-1]: z_i^-1 z_j z_i
    std::vector<SeriesBlock> blocks_;
    std::optional<std::size_t> commutator_start_;
};

//! Subgroup G_i = <z_i .. z_{m-1}> with the inherited presentation.
//! Elements embed into the parent by prepending i zero exponents.
PolycyclicGroupSpec prefix_subgroup(const PolycyclicGroupSpec& spec, std::size_t i);

//! The natural map G -> G/G_i when G_i is normal in G.
struct QuotientMap {
    PolycyclicGroupSpec group;  // presentation on the first i generators

    std::size_t cut = 0;
    std::size_t parent_arity = 0;
    Exponents project(const Exponents& parent) const;  // truncate
    Exponents section(const Exponents& quotient) const;  // pad with zeros
};

//! Throws InputError when G_i is not normal in G (checked from the relations).
QuotientMap quotient_map(const PolycyclicGroupSpec& spec, std::size_t i);

//! Spot-check presentation consistency: associativity on sampled triples plus
//! inverse and generator-order laws. Throws InternalError on failure.
void validate_presentation(const PolycyclicGroupSpec& spec, Rng& rng, std::size_t triples = 64);

//! When the presentation is a direct sum of disjoint cyclic power chains
//! (all conjugation trivial), the group is abelian; returns the cyclic
//! factor decomposition together with coordinate maps.
struct AbelianForm {
    AbelianGroupSpec spec;
    std::vector<std::vector<std::size_t>> chains;       // generator indices per factor
    std::vector<std::vector<u32>> chain_orders;         // matching relative orders
    std::size_t gen_count = 0;

    AbelianElement to_abelian(const Exponents& e) const;
    Exponents from_abelian(const AbelianElement& a) const;
};
std::optional<AbelianForm> abelian_decomposition(const PolycyclicGroupSpec& spec);

// Builders for the shipped group families.
PolycyclicGroupSpec elementary_abelian_pc(u32 p, std::size_t n);
PolycyclicGroupSpec cyclic_pc(u64 prime_power);
//! Z_p^n semidirect Z_2 with the flip generator first: z_0^2 = 1,
//! z_0^-1 z_j z_0 = z_j^{p-1}. Blocks: small Z_2, then elementary Z_p^n.
PolycyclicGroupSpec semidirect_zpn_z2_pc(u32 p, std::size_t n);
PolycyclicGroupSpec direct_product_pc(const PolycyclicGroupSpec& a, const PolycyclicGroupSpec& b);

}  // namespace htoc::groups
