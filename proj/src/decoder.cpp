#include "toricleak/decoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "toricleak/matching.hpp"

namespace toricleak {

namespace {

int torus_gap(int a, int b, int d) {
  const int raw = std::abs(a - b) % d;
  return std::min(raw, d - raw);
}

int wrap(int v, int d) { return ((v % d) + d) % d; }

// Signed shortest step count from a to b on a ring of size d.
int ring_delta(int a, int b, int d) {
  const int fwd = wrap(b - a, d);
  return fwd <= d / 2 ? fwd : fwd - d;
}

}  // namespace

DefectSet extract_defects(const SyndromeHistory& history, const ToricLayout& layout) {
  if (history.checks() != layout.num_checks()) {
    throw std::invalid_argument("syndrome history width does not match the layout");
  }
  DefectSet out;
  for (int t = 0; t < history.rounds(); ++t) {
    for (int a = 0; a < history.checks(); ++a) {
      const std::uint8_t prev = t == 0 ? 0 : history.at(t - 1, a);
      if (history.at(t, a) == prev) continue;
      const Defect defect{layout.check_row(a), layout.check_col(a), t};
      (layout.check_type(a) == CheckType::x ? out.x_checks : out.z_checks).push_back(defect);
    }
  }
  if (out.x_checks.size() % 2 != 0 || out.z_checks.size() % 2 != 0) {
    throw std::logic_error("odd defect count on the torus: " + std::to_string(out.x_checks.size()) + " X, " +
                           std::to_string(out.z_checks.size()) + " Z");
  }
  return out;
}

int pairwise_distance(const Defect& a, const Defect& b, int distance) {
  return torus_gap(a.row, b.row, distance) + torus_gap(a.col, b.col, distance) + std::abs(a.round - b.round);
}

DefectGraph::DefectGraph(std::vector<Defect> nodes, int distance) : nodes_(std::move(nodes)), d_(distance) {
  if (distance < 1) throw std::invalid_argument("defect graph distance must be positive");
  for (const auto& n : nodes_) {
    if (n.row < 0 || n.row >= d_ || n.col < 0 || n.col >= d_ || n.round < 0) {
      throw std::invalid_argument("defect (" + std::to_string(n.row) + ", " + std::to_string(n.col) + ", " +
                                  std::to_string(n.round) + ") lies outside the lattice");
    }
  }
}

namespace {

Matching solve(const DefectGraph& graph, int cutoff) {
  const int n = graph.size();
  std::vector<WeightedEdge> edges;
  int max_w = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) max_w = std::max(max_w, graph.weight(i, j));
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int w = graph.weight(i, j);
      if (cutoff >= 0 && w > cutoff) continue;
      // Max cardinality first, then heaviest, i.e. shortest total distance.
      edges.push_back({i, j, static_cast<std::int64_t>(max_w + 1 - w)});
    }
  }
  const auto mate = max_weight_matching(n, edges, true);
  Matching m;
  for (int i = 0; i < n; ++i) {
    if (mate[i] < 0) return {};
    if (i < mate[i]) {
      m.pairs.emplace_back(i, mate[i]);
      m.total_weight += graph.weight(i, mate[i]);
    }
  }
  return m;
}

}  // namespace

Matching mwpm(const DefectGraph& graph) {
  const int n = graph.size();
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even node count, got " + std::to_string(n));
  if (n == 0) return {};
  if (n == 2) return {{{0, 1}}, graph.weight(0, 1)};
  if (n > kCompleteGraphLimit) {
    Matching m = solve(graph, 2 * graph.distance());
    if (static_cast<int>(m.pairs.size()) * 2 == n) return m;
  }
  Matching m = solve(graph, -1);
  if (static_cast<int>(m.pairs.size()) * 2 != n) throw std::logic_error("blossom returned an imperfect matching");
  return m;
}

void apply_correction(const DefectGraph& graph, const Matching& matching, CheckType type, const ToricLayout& layout,
                      DataFrame& correction) {
  const int d = layout.distance();
  const int dd = d * d;
  auto h = [&](int r, int c) { return wrap(r, d) * d + wrap(c, d); };
  auto v = [&](int r, int c) { return dd + wrap(r, d) * d + wrap(c, d); };
  auto& bits = type == CheckType::x ? correction.z : correction.x;

  for (const auto& [i, j] : matching.pairs) {
    const Defect& a = graph.nodes()[i];
    const Defect& b = graph.nodes()[j];
    const int dc = ring_delta(a.col, b.col, d);
    const int dr = ring_delta(a.row, b.row, d);
    const int sc = dc >= 0 ? 1 : -1;
    const int sr = dr >= 0 ? 1 : -1;
    int r = a.row;
    int c = a.col;
    // Horizontal leg along row a.row, then vertical leg along column b.col.
    for (int k = 0; k < std::abs(dc); ++k) {
      if (type == CheckType::x) {
        bits[h(r, sc > 0 ? c : c - 1)] ^= 1;  // vertex to vertex along h edges
      } else {
        bits[v(r, sc > 0 ? c + 1 : c)] ^= 1;  // face to face across v edges
      }
      c += sc;
    }
    for (int k = 0; k < std::abs(dr); ++k) {
      if (type == CheckType::x) {
        bits[v(sr > 0 ? r : r - 1, c)] ^= 1;
      } else {
        bits[h(sr > 0 ? r + 1 : r, c)] ^= 1;
      }
      r += sr;
    }
  }
}

LogicalFailure judge(const DefectGraph& x_graph, const Matching& x_matching, const DefectGraph& z_graph,
                     const Matching& z_matching, const DataFrame& truth, const ToricLayout& layout) {
  DataFrame residual = truth;
  apply_correction(x_graph, x_matching, CheckType::x, layout, residual);
  apply_correction(z_graph, z_matching, CheckType::z, layout, residual);

  for (int a = 0; a < layout.num_checks(); ++a) {
    const auto& bits = layout.check_type(a) == CheckType::x ? residual.z : residual.x;
    int parity = 0;
    for (int q : layout.support(a)) parity ^= bits[q];
    if (parity) throw std::logic_error("residual error after correction has a nonzero syndrome at check " + std::to_string(a));
  }

  LogicalFailure f;
  for (int k = 0; k < 2; ++k) {
    int zpar = 0;
    for (int q : layout.x_logical(k)) zpar ^= residual.z[q];
    int xpar = 0;
    for (int q : layout.z_logical(k)) xpar ^= residual.x[q];
    f.z[k] = zpar != 0;
    f.x[k] = xpar != 0;
  }
  return f;
}

LogicalFailure decode(const SyndromeHistory& history, const DataFrame& truth, const ToricLayout& layout) {
  DefectSet defects = extract_defects(history, layout);
  const DefectGraph xg(std::move(defects.x_checks), layout.distance());
  const DefectGraph zg(std::move(defects.z_checks), layout.distance());
  return judge(xg, mwpm(xg), zg, mwpm(zg), truth, layout);
}

DefectGraph parse_defect_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int distance = -1;
  int lineno = 0;
  std::vector<Defect> nodes;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "distance") {
      if (!(fields >> distance) || distance < 1) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'distance <d>'");
      }
      continue;
    }
    if (distance < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": defects before 'distance' line");
    Defect dft;
    std::string rest;
    try {
      dft.row = std::stoi(first);
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '<row> <col> <round>'");
    }
    if (!(fields >> dft.col >> dft.round) || (fields >> rest)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '<row> <col> <round>'");
    }
    nodes.push_back(dft);
  }
  if (distance < 0) throw std::invalid_argument("defect list has no 'distance' line");
  return DefectGraph(std::move(nodes), distance);
}

}  // namespace toricleak
