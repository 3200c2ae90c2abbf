#pragma once

#include <utility>
#include <vector>

#include "phlab/layered_graph.hpp"
#include "phlab/perm.hpp"
#include "phlab/rs_graph.hpp"

namespace phlab {

// t rows (matchings) by r columns (edges) of permutations on [b].
using PermMatrix = std::vector<std::vector<Permutation>>;
// k rows, row i lists the r/2 edge indices picked in layer i; column a is
// hyperedge a.
using Hypermatching = std::vector<std::vector<int>>;

struct EdgeTuple {
  int ell = 0;             // matching index in [t]
  std::vector<int> edges;  // r/2 distinct edge indices in [r]
};

PermMatrix random_perm_matrix(int t, int r, int b, Rng& rng);
int perm_matrix_b(const PermMatrix& s);

GroupLayeredGraph encoded_rs(const RSGraph& rs, const PermMatrix& sigma, Provenance tag = {});
// (sigma_L, sigma_R) with sigma_L(i) = left(e_i) and sigma_R(right(e_i)) = i.
std::pair<Permutation, Permutation> edge_pick(const RSGraph& rs, const EdgeTuple& e);

// PermGroups(sigma_R) o EncodedRS o PermGroups(sigma_L); `player` tags the
// encoded-RS edges.
LayeredGraph block(const RSGraph& rs, const PermMatrix& sigma, const EdgeTuple& e, int player = 1);
// Closed form of the block's permutation on (r/2)*b elements.
Permutation block_rho(const PermMatrix& sigma, const EdgeTuple& e);

void check_hypermatching(const Hypermatching& M, int k, int r);
LayeredGraph multi_block(const RSGraph& rs, const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                         const Hypermatching& M);

}  // namespace phlab
