#pragma once

#include <cstdint>

#include "rcay/graph.hpp"
#include "rcay/group.hpp"

namespace rcay {

/// Cayley graph of a group with respect to an inverse-closed connection set.
/// Vertex ids are mixed-radix ranks of the elements; each edge label is the
/// index into `generators` (one representative per {a, -a} pair, first-
/// occurrence order), so the label classes partition the edge set.
struct CayleyGraph {
    GroupSpec spec;
    std::vector<GroupElement> generators;
    LabeledGraph graph;
};

/// Throws unless s is inverse-closed and identity-free.
CayleyGraph build_cayley(const GroupSpec& spec, const GeneratorSet& s);

/// Diameter predicted from generator orders, sum of floor(|a|/2) over reps.
/// Throws unless reps is a minimal generating set. Matches the BFS diameter
/// when the cyclic subgroups <a> intersect trivially (e.g. coordinate
/// generators); a minimal set with hidden relations can have a smaller
/// graph diameter than this value.
std::int64_t minimal_set_diameter(const GroupSpec& spec,
                                  const std::vector<GroupElement>& reps);

}  // namespace rcay
