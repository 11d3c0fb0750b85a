#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rcay {

/// Finite Abelian group given as Z_{n_1} x ... x Z_{n_s}, every n_k >= 2.
struct GroupSpec {
    std::vector<std::int64_t> moduli;

    GroupSpec() = default;
    explicit GroupSpec(std::vector<std::int64_t> m);

    std::size_t arity() const { return moduli.size(); }
    std::int64_t order() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Element as a residue vector, residues[k] in [0, n_k).
using GroupElement = std::vector<std::int64_t>;

GroupElement identity(const GroupSpec& spec);
bool is_identity(const GroupElement& g);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& spec, const GroupElement& a);

/// Least t >= 1 with t*g = 0, i.e. lcm over components of n_k / gcd(n_k, g_k).
std::int64_t element_order(const GroupSpec& spec, const GroupElement& g);

/// Mixed-radix rank, a bijection between residue vectors and [0, order).
/// Coordinate 0 is the least significant digit.
std::int64_t rank_of(const GroupSpec& spec, const GroupElement& g);
GroupElement element_at(const GroupSpec& spec, std::int64_t rank);

/// The lexicographically smaller of {g, -g}.
GroupElement pair_representative(const GroupSpec& spec, const GroupElement& g);

/// Connection set: identity-free and deduplicated, insertion order kept.
struct GeneratorSet {
    std::vector<GroupElement> elements;
    bool inverse_closed = false;

    static GeneratorSet of(const GroupSpec& spec, std::vector<GroupElement> elems);
};

/// elems together with all their inverses.
GeneratorSet inverse_closure(const GroupSpec& spec, std::vector<GroupElement> elems);

/// One representative per {a, -a} pair, in first-occurrence order.
std::vector<GroupElement> pair_representatives(const GroupSpec& spec, const GeneratorSet& s);

/// True iff the additive closure of gens is the whole group.
bool generates(const GroupSpec& spec, const std::vector<GroupElement>& gens);

struct MinimalSubset {
    std::vector<GroupElement> elements;  // pair representatives
    std::int64_t ceil_half_sum = 0;      // sum over the subset of ceil(order / 2)
};

/// All minimal generating subsets of the pair representatives of s
/// (subsets that generate the group while no proper subset does).
/// Throws when there are more than 16 representatives.
std::vector<MinimalSubset> minimal_generating_subsets(const GroupSpec& spec,
                                                      const GeneratorSet& s);

/// "2,2,2" -> Z_2 x Z_2 x Z_2
GroupSpec parse_moduli(const std::string& text);
/// "1,0,0;0,1,0" -> two residue vectors (reduced mod the moduli)
std::vector<GroupElement> parse_elements(const GroupSpec& spec, const std::string& text);

std::string to_string(const GroupSpec& spec);
std::string to_string(const GroupElement& g);

}  // namespace rcay
