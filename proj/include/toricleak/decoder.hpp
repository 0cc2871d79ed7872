#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "toricleak/syndrome.hpp"
#include "toricleak/toric_code.hpp"

namespace toricleak {

/// A space-time defect: lattice coordinates of a check and the round in which
/// its outcome changed.
struct Defect {
  int row = 0;
  int col = 0;
  int round = 0;

  auto operator<=>(const Defect&) const = default;
};

struct DefectSet {
  std::vector<Defect> x_checks;  // flag Z errors
  std::vector<Defect> z_checks;  // flag X errors
};

/// Defects at (check, t) where the outcome differs from round t-1 (round -1
/// reads all zeros). Throws std::logic_error if either type has an odd count.
DefectSet extract_defects(const SyndromeHistory& history, const ToricLayout& layout);

/// Torus-wrapped Manhattan distance plus the round difference.
int pairwise_distance(const Defect& a, const Defect& b, int distance);

class DefectGraph {
 public:
  DefectGraph(std::vector<Defect> nodes, int distance);

  int size() const { return static_cast<int>(nodes_.size()); }
  int distance() const { return d_; }
  const std::vector<Defect>& nodes() const { return nodes_; }
  int weight(int i, int j) const { return pairwise_distance(nodes_[i], nodes_[j], d_); }

 private:
  std::vector<Defect> nodes_;
  int d_;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // node indices, first < second
  std::int64_t total_weight = 0;
};

/// Graphs above this size drop edges longer than 2d before matching.
inline constexpr int kCompleteGraphLimit = 1000;

/// Minimum-weight perfect matching of the defect graph. Throws
/// std::invalid_argument on an odd node count. Deterministic for a given graph.
Matching mwpm(const DefectGraph& graph);

/// Per logical qubit, whether the residual error acts as Xbar_k / Zbar_k.
struct LogicalFailure {
  std::array<bool, 2> x{false, false};
  std::array<bool, 2> z{false, false};

  bool any() const { return x[0] || x[1] || z[0] || z[1]; }
  bool operator==(const LogicalFailure&) const = default;
};

/// Builds the data correction implied by matched pairs of one check type:
/// X-check pairs give Z corrections along primal edges, Z-check pairs give X
/// corrections across dual edges.
void apply_correction(const DefectGraph& graph, const Matching& matching, CheckType type,
                      const ToricLayout& layout, DataFrame& correction);

/// Composes truth and correction and reads off the logical parity. Throws
/// std::logic_error if the residual still has a syndrome.
LogicalFailure judge(const DefectGraph& x_graph, const Matching& x_matching, const DefectGraph& z_graph,
                     const Matching& z_matching, const DataFrame& truth, const ToricLayout& layout);

/// extract_defects, mwpm per check type, then judge.
LogicalFailure decode(const SyndromeHistory& history, const DataFrame& truth, const ToricLayout& layout);

/// Text format for `decode --graph`: a `distance <d>` line followed by one
/// `<row> <col> <round>` line per defect. `#` starts a comment.
DefectGraph parse_defect_list(std::string_view text);

}  // namespace toricleak
