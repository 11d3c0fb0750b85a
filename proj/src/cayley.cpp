#include "rcay/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcay {

CayleyGraph build_cayley(const GroupSpec& spec, const GeneratorSet& s) {
    if (s.elements.empty()) {
        throw std::invalid_argument("connection set is empty");
    }
    if (!s.inverse_closed) {
        throw std::invalid_argument("connection set must be inverse-closed");
    }
    const std::int64_t n64 = spec.order();
    if (n64 > 5'000'000) {
        throw std::invalid_argument("group too large to materialize");
    }
    const int n = static_cast<int>(n64);
    std::vector<GroupElement> reps = pair_representatives(spec, s);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * reps.size());
    for (int u = 0; u < n; ++u) {
        GroupElement x = element_at(spec, u);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            int v = static_cast<int>(rank_of(spec, add(spec, x, reps[i])));
            edges.push_back({std::min(u, v), std::max(u, v), static_cast<int>(i)});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.label) < std::tie(b.u, b.v, b.label);
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    return CayleyGraph{spec, std::move(reps), LabeledGraph(n, std::move(edges))};
}

std::int64_t minimal_set_diameter(const GroupSpec& spec,
                                  const std::vector<GroupElement>& reps) {
    if (!generates(spec, reps)) {
        throw std::invalid_argument("representatives do not generate the group");
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::vector<GroupElement> without;
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (j != i) without.push_back(reps[j]);
        }
        if (generates(spec, without)) {
            throw std::invalid_argument("generating set is not minimal");
        }
    }
    std::int64_t sum = 0;
    for (const auto& a : reps) {
        sum += element_order(spec, a) / 2;
    }
    return sum;
}

}  // namespace rcay
