#include "phlab/matching.hpp"

#include <limits>

#include "phlab/error.hpp"

namespace phlab {

BipartiteInstance bipartite_of(const LayeredGraph& g, int m) {
  if (m < 2 || m % 2 != 0) throw Error("bipartite_of: m must be even and positive");
  if (g.depth() == 0 || g.layers.front() < m / 2 || g.layers.back() < m / 2)
    throw Error("bipartite_of: graph needs at least m/2 sources and sinks");
  g.validate();
  BipartiteInstance inst;
  int64_t total = g.vertex_count();
  if (total + m / 2 > std::numeric_limits<int>::max()) throw Error("bipartite_of: graph too large");
  inst.n = static_cast<int>(total);
  inst.half = m / 2;
  auto off = g.offsets();
  int last = static_cast<int>(off[g.depth() - 1]);
  inst.edges.reserve(g.edges.size() + inst.n + m);
  for (int v = 0; v < inst.n; ++v) inst.edges.push_back({v, v, {}});
  for (int i = 0; i < inst.half; ++i) {
    inst.edges.push_back({inst.n + i, i, {}});
    inst.edges.push_back({last + i, inst.n + i, {}});
  }
  for (const Edge& e : g.edges)
    inst.edges.push_back({static_cast<int>(off[e.layer] + e.u), static_cast<int>(off[e.layer + 1] + e.v), e.tag});
  return inst;
}

namespace {

struct Csr {
  std::vector<int> start, adj;
  Csr(int n, const std::vector<std::pair<int, int>>& edges) : start(n + 1, 0), adj(edges.size()) {
    for (auto [u, v] : edges) ++start[u + 1];
    for (int i = 0; i < n; ++i) start[i + 1] += start[i];
    std::vector<int> pos(start.begin(), start.end() - 1);
    for (auto [u, v] : edges) adj[pos[u]++] = v;
  }
};

}  // namespace

MatchingResult max_matching(int n_left, int n_right, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>* initial_mate_left) {
  for (auto [u, v] : edges)
    if (u < 0 || u >= n_left || v < 0 || v >= n_right) throw Error("max_matching: edge out of range");
  Csr g(n_left, edges);
  MatchingResult res;
  res.mate_left.assign(n_left, -1);
  res.mate_right.assign(n_right, -1);
  if (initial_mate_left) {
    for (int u = 0; u < n_left; ++u) {
      int v = (*initial_mate_left)[u];
      if (v < 0) continue;
      if (res.mate_right[v] != -1) throw Error("max_matching: initial matching is not a matching");
      res.mate_left[u] = v;
      res.mate_right[v] = u;
      ++res.size;
    }
  }
  const int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(n_left), it(n_left), stack, via, queue;
  for (;;) {
    queue.clear();
    for (int u = 0; u < n_left; ++u) {
      dist[u] = res.mate_left[u] == -1 ? 0 : inf;
      if (dist[u] == 0) queue.push_back(u);
    }
    bool found = false;
    for (size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int k = g.start[u]; k < g.start[u + 1]; ++k) {
        int w = res.mate_right[g.adj[k]];
        if (w == -1) {
          found = true;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (!found) break;
    for (int u = 0; u < n_left; ++u) it[u] = g.start[u];
    for (int root = 0; root < n_left; ++root) {
      if (res.mate_left[root] != -1 || dist[root] != 0) continue;
      stack.assign(1, root);
      via.clear();
      while (!stack.empty()) {
        int u = stack.back();
        if (it[u] == g.start[u + 1]) {
          dist[u] = inf;
          stack.pop_back();
          if (!via.empty()) via.pop_back();
          continue;
        }
        int v = g.adj[it[u]++];
        int w = res.mate_right[v];
        if (w == -1) {
          via.push_back(v);
          for (size_t i = 0; i < stack.size(); ++i) {
            res.mate_left[stack[i]] = via[i];
            res.mate_right[via[i]] = stack[i];
          }
          ++res.size;
          break;
        }
        if (dist[w] == dist[u] + 1) {
          stack.push_back(w);
          via.push_back(v);
        }
      }
    }
  }
  // Koenig: Z = vertices reachable from free left vertices by alternating paths.
  std::vector<char> zl(n_left, 0), zr(n_right, 0);
  queue.clear();
  for (int u = 0; u < n_left; ++u)
    if (res.mate_left[u] == -1) {
      zl[u] = 1;
      queue.push_back(u);
    }
  for (size_t q = 0; q < queue.size(); ++q) {
    int u = queue[q];
    for (int k = g.start[u]; k < g.start[u + 1]; ++k) {
      int v = g.adj[k];
      if (zr[v]) continue;
      zr[v] = 1;
      int w = res.mate_right[v];
      if (w != -1 && !zl[w]) {
        zl[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int u = 0; u < n_left; ++u)
    if (!zl[u]) res.cover_left.push_back(u);
  for (int v = 0; v < n_right; ++v)
    if (zr[v]) res.cover_right.push_back(v);
  return res;
}

namespace {

std::vector<std::pair<int, int>> plain_edges(const BipartiteInstance& inst) {
  std::vector<std::pair<int, int>> out;
  out.reserve(inst.edges.size());
  for (const auto& e : inst.edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

MatchingResult max_matching(const BipartiteInstance& inst) {
  std::vector<int> canon(inst.n_left(), -1);
  for (int v = 0; v < inst.n; ++v) canon[v] = v;
  return max_matching(inst.n_left(), inst.n_right(), plain_edges(inst), &canon);
}

std::string check_certificate(int n_left, int n_right, const std::vector<std::pair<int, int>>& edges,
                              const MatchingResult& res) {
  if (static_cast<int>(res.mate_left.size()) != n_left || static_cast<int>(res.mate_right.size()) != n_right)
    return "mate arrays have wrong length";
  std::vector<char> cl(n_left, 0), cr(n_right, 0);
  for (int u : res.cover_left) cl[u] = 1;
  for (int v : res.cover_right) cr[v] = 1;
  int matched = 0;
  for (int u = 0; u < n_left; ++u) {
    int v = res.mate_left[u];
    if (v == -1) continue;
    if (res.mate_right[v] != u) return "mate arrays disagree at left " + std::to_string(u);
    ++matched;
  }
  // Every matched pair must be an edge; every edge must be covered.
  std::vector<char> pair_seen(n_left, 0);
  for (auto [u, v] : edges) {
    if (!cl[u] && !cr[v]) return "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is not covered";
    if (res.mate_left[u] == v) pair_seen[u] = 1;
  }
  for (int u = 0; u < n_left; ++u)
    if (res.mate_left[u] != -1 && !pair_seen[u]) return "matched pair at left " + std::to_string(u) + " is not an edge";
  if (matched != res.size) return "matching size differs from the reported size";
  if (static_cast<int>(res.cover_left.size() + res.cover_right.size()) != res.size)
    return "cover size differs from matching size";
  return {};
}

Permutation sigma_eq(int m) { return Permutation::identity(m); }

Permutation sigma_cross(int m) {
  if (m % 2 != 0) throw Error("cross identity needs even m");
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = (i + m / 2) % m;
  return Permutation(img);
}

DichotomyReport dichotomy_check(const GenParams& params, int trials, Rng& rng) {
  DichotomyReport rep;
  rep.trials = trials;
  rep.m = params.m;
  rep.n = vertex_count(params, true);
  for (int t = 0; t < trials; ++t) {
    for (int side = 0; side < 2; ++side) {
      Rng sub = rng.split(static_cast<uint64_t>(2 * t + side));
      Permutation s = side == 0 ? sigma_eq(params.m) : sigma_cross(params.m);
      LayeredGraph g = gen_general(s, params, sub);
      BipartiteInstance inst = bipartite_of(g, params.m);
      MatchingResult res = max_matching(inst);
      std::string bad = check_certificate(inst.n_left(), inst.n_right(), plain_edges(inst), res);
      if (!bad.empty()) throw Error("dichotomy: invalid matching certificate: " + bad);
      if (side == 0) {
        rep.eq_sizes.push_back(res.size);
        if (res.size == inst.n + inst.half) ++rep.eq_ok;
      } else {
        rep.cross_sizes.push_back(res.size);
        if (res.size == inst.n) ++rep.cross_ok;
      }
    }
  }
  double n = static_cast<double>(rep.n), m = params.m;
  rep.eps_gap = 1 - n / (n + m / 2);
  rep.eps_m4n = m / (4 * n);
  rep.holds = rep.eq_ok == trials && rep.cross_ok == trials;
  return rep;
}

}  // namespace phlab
