#include "toricleak/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace toricleak {

namespace {

// Labels: 0 free, 1 = S (outer), 2 = T (inner); bit 4 marks blossoms visited
// by scan_blossom. Endpoints are 2k (u side) and 2k+1 (v side) of edge k.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, std::span<const WeightedEdge> edges, bool max_cardinality)
      : n_(n), edges_(edges), max_cardinality_(max_cardinality) {
    const int m = static_cast<int>(edges.size());
    std::int64_t max_weight = 0;
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
        throw std::invalid_argument("matching edge has an invalid endpoint");
      }
      // Doubled so every dual variable stays integral.
      max_weight = std::max(max_weight, 2 * e.weight);
    }
    endpoint_.resize(2 * m);
    for (int p = 0; p < 2 * m; ++p) endpoint_[p] = p % 2 == 0 ? edges[p / 2].u : edges[p / 2].v;
    neighbend_.assign(n, {});
    for (int k = 0; k < m; ++k) {
      neighbend_[edges[k].u].push_back(2 * k + 1);
      neighbend_[edges[k].v].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, false);
    for (int b = 2 * n - 1; b >= n; --b) unused_.push_back(b);
    dualvar_.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar_[v] = max_weight;
    allowedge_.assign(m, false);
  }

  std::vector<int> solve();

 private:
  std::int64_t weight(int k) const { return 2 * edges_[k].weight; }
  std::int64_t slack(int k) const {
    return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * weight(k);
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  static int wrap(int j, std::size_t len) {
    const int l = static_cast<int>(len);
    return ((j % l) + l) % l;
  }

  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int n_;
  std::span<const WeightedEdge> edges_;
  bool max_cardinality_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

void BlossomMatcher::assign_label(int w, int t, int p) {
  const int b = inblossom_[w];
  assert(label_[w] == 0 && label_[b] == 0);
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const int base = blossombase_[b];
    assert(mate_[base] >= 0);
    assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

int BlossomMatcher::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = blossombase_[b];
      break;
    }
    assert(label_[b] == 1);
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      assert(label_[b] == 2);
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  blossombase_[b] = base;
  blossomparent_[b] = -1;
  blossomparent_[bb] = b;
  auto& path = blossomchilds_[b];
  auto& endps = blossomendps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    blossomparent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  assert(label_[bb] == 1);
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dualvar_[b] = 0;
  for (int leaf : leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }

  std::vector<int> bestedgeto(2 * n_, -1);
  for (int child : path) {
    std::vector<int> candidates;
    if (!has_bestedges_[child]) {
      for (int leaf : leaves(child))
        for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
    } else {
      candidates = blossombestedges_[child];
    }
    for (int kk : candidates) {
      int i = edges_[kk].u;
      int j = edges_[kk].v;
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
        bestedgeto[bj] = kk;
      }
    }
    blossombestedges_[child].clear();
    has_bestedges_[child] = false;
    bestedge_[child] = -1;
  }
  auto& best = blossombestedges_[b];
  best.clear();
  for (int kk : bestedgeto)
    if (kk != -1) best.push_back(kk);
  has_bestedges_[b] = true;
  bestedge_[b] = -1;
  for (int kk : best)
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
}

void BlossomMatcher::expand_blossom(int b, bool endstage) {
  const std::vector<int> childs = blossomchilds_[b];
  for (int s : childs) {
    blossomparent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dualvar_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for (int leaf : leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const auto& ch = blossomchilds_[b];
    const auto& ep = blossomendps_[b];
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
    int jstep, endptrick;
    if (j & 1) {
      j -= static_cast<int>(ch.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[ep[wrap(j - endptrick, ep.size())] ^ endptrick ^ 1]] = 0;
      assign_label(endpoint_[p ^ 1], 2, p);
      allowedge_[ep[wrap(j - endptrick, ep.size())] / 2] = true;
      j += jstep;
      p = ep[wrap(j - endptrick, ep.size())] ^ endptrick;
      allowedge_[p / 2] = true;
      j += jstep;
    }
    int bv = ch[wrap(j, ch.size())];
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (ch[wrap(j, ch.size())] != entrychild) {
      bv = ch[wrap(j, ch.size())];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int found = -1;
      for (int leaf : leaves(bv)) {
        if (label_[leaf] != 0) {
          found = leaf;
          break;
        }
      }
      if (found != -1) {
        assert(label_[found] == 2);
        assert(inblossom_[found] == bv);
        label_[found] = 0;
        label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  blossomchilds_[b].clear();
  blossomendps_[b].clear();
  blossombase_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = false;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v) {
  int t = v;
  while (blossomparent_[t] != b) t = blossomparent_[t];
  if (t >= n_) augment_blossom(t, v);
  auto& ch = blossomchilds_[b];
  auto& ep = blossomendps_[b];
  const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
  int j = i;
  int jstep, endptrick;
  if (i & 1) {
    j -= static_cast<int>(ch.size());
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = ch[wrap(j, ch.size())];
    const int p = ep[wrap(j - endptrick, ep.size())] ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint_[p]);
    j += jstep;
    t = ch[wrap(j, ch.size())];
    if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(ch.begin(), ch.begin() + i, ch.end());
  std::rotate(ep.begin(), ep.begin() + i, ep.end());
  blossombase_[b] = blossombase_[ch[0]];
  assert(blossombase_[b] == v);
}

void BlossomMatcher::augment_matching(int k) {
  const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (const auto& start : ends) {
    int s = start[0];
    int p = start[1];
    while (true) {
      const int bs = inblossom_[s];
      assert(label_[bs] == 1);
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      assert(label_[bt] == 2);
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      assert(blossombase_[bt] == t);
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> BlossomMatcher::solve() {
  const int m = static_cast<int>(edges_.size());
  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), false);
    queue_.clear();
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        assert(label_[inblossom_[v]] == 1);
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = true;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              assert(label_[inblossom_[w]] == 2);
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t kslack = slack(bestedge_[b]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dualvar_[b] < delta)) {
          delta = dualvar_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
      }

      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dualvar_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dualvar_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == 1) {
            dualvar_[b] += delta;
          } else if (label_[b] == 2) {
            dualvar_[b] -= delta;
          }
        }
      }

      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = true;
        int i = edges_[deltaedge].u;
        int j = edges_[deltaedge].v;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = true;
        const int i = edges_[deltaedge].u;
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
        expand_blossom(b, true);
      }
    }
  }
  (void)m;
  std::vector<int> result(n_, -1);
  for (int v = 0; v < n_; ++v)
    if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
  return result;
}

}  // namespace

std::vector<int> max_weight_matching(int num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality) {
  if (num_vertices <= 0 || edges.empty()) return std::vector<int>(std::max(num_vertices, 0), -1);
  BlossomMatcher matcher(num_vertices, edges, max_cardinality);
  return matcher.solve();
}

}  // namespace toricleak
