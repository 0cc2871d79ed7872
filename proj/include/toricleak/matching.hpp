#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace toricleak {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

/// Maximum-weight matching on a general graph by Edmonds' blossom algorithm
/// (primal-dual, O(n^3)). With `max_cardinality` the result is the heaviest
/// among maximum-cardinality matchings. Returns mate[v] (or -1). Integer
/// weights keep every dual update exact.
std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges,
                                     bool max_cardinality);

}  // namespace toricleak
