#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phlab/hiding_gen.hpp"
#include "phlab/layered_graph.hpp"

namespace phlab {

struct BipartiteEdge {
  int u;  // left vertex
  int v;  // right vertex
  Provenance tag;
};

// Left side: L (copies of G's vertices, ids 0..n-1) then S (n..n+m/2-1).
// Right side: R (0..n-1) then T (n..n+m/2-1). The canonical matching pairs
// left v with right v for v < n.
struct BipartiteInstance {
  int n = 0;
  int half = 0;
  std::vector<BipartiteEdge> edges;

  int n_left() const { return n + half; }
  int n_right() const { return n + half; }
};

BipartiteInstance bipartite_of(const LayeredGraph& g, int m);

struct MatchingResult {
  int size = 0;
  std::vector<int> mate_left;   // -1 when free
  std::vector<int> mate_right;
  // Koenig vertex cover of the same size (optimality certificate).
  std::vector<int> cover_left;
  std::vector<int> cover_right;
};

// Hopcroft-Karp, optionally warm-started from a valid matching.
MatchingResult max_matching(int n_left, int n_right, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>* initial_mate_left = nullptr);
// Warm-starts from the canonical matching.
MatchingResult max_matching(const BipartiteInstance& inst);

// Checks that the matching uses graph edges, the cover covers every edge, and
// both have the stated size. Returns an empty string when valid.
std::string check_certificate(int n_left, int n_right, const std::vector<std::pair<int, int>>& edges,
                              const MatchingResult& res);

Permutation sigma_eq(int m);
// Maps the first half onto the second half and vice versa.
Permutation sigma_cross(int m);

struct DichotomyReport {
  int trials = 0;
  int64_t n = 0;       // vertices of each sampled graph
  int m = 0;
  int eq_ok = 0;       // samples of G(sigma_eq) with matching n + m/2
  int cross_ok = 0;    // samples of G(sigma_cross) with matching n
  std::vector<int> eq_sizes;
  std::vector<int> cross_sizes;
  double eps_gap = 0;  // 1 - n / (n + m/2)
  double eps_m4n = 0;  // m / (4n)
  bool holds = false;
};

DichotomyReport dichotomy_check(const GenParams& params, int trials, Rng& rng);

}  // namespace phlab
