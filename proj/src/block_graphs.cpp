#include "phlab/block_graphs.hpp"

#include "phlab/error.hpp"

namespace phlab {

PermMatrix random_perm_matrix(int t, int r, int b, Rng& rng) {
  PermMatrix s(t);
  for (auto& row : s)
    for (int j = 0; j < r; ++j) row.push_back(Permutation::random(b, rng));
  return s;
}

int perm_matrix_b(const PermMatrix& s) {
  if (s.empty() || s[0].empty()) throw Error("permutation matrix is empty");
  int b = s[0][0].size();
  for (const auto& row : s)
    for (const auto& p : row)
      if (p.size() != b) throw Error("permutation matrix entries differ in size");
  return b;
}

namespace {

void check_dims(const RSGraph& rs, const PermMatrix& sigma) {
  if (static_cast<int>(sigma.size()) != rs.t) throw Error("permutation matrix has wrong row count");
  for (const auto& row : sigma)
    if (static_cast<int>(row.size()) != rs.r) throw Error("permutation matrix has wrong column count");
}

void check_tuple(const RSGraph& rs, const EdgeTuple& e) {
  if (e.ell < 0 || e.ell >= rs.t) throw Error("edge tuple: matching index out of range");
  std::vector<char> seen(rs.r, 0);
  for (int j : e.edges) {
    if (j < 0 || j >= rs.r) throw Error("edge tuple: edge index out of range");
    if (seen[j]) throw Error("edge tuple: repeated edge index");
    seen[j] = 1;
  }
}

}  // namespace

GroupLayeredGraph encoded_rs(const RSGraph& rs, const PermMatrix& sigma, Provenance tag) {
  check_dims(rs, sigma);
  GroupLayeredGraph g;
  g.w = rs.n_rs;
  g.d = 2;
  g.b = perm_matrix_b(sigma);
  for (int i = 0; i < rs.t; ++i)
    for (int j = 0; j < rs.r; ++j) g.tuples.push_back({0, rs.left[i][j], rs.right[i][j], sigma[i][j], tag});
  return g;
}

std::pair<Permutation, Permutation> edge_pick(const RSGraph& rs, const EdgeTuple& e) {
  check_tuple(rs, e);
  std::vector<std::pair<int, int>> ml, mr;
  for (size_t i = 0; i < e.edges.size(); ++i) {
    ml.emplace_back(static_cast<int>(i), rs.left[e.ell][e.edges[i]]);
    mr.emplace_back(rs.right[e.ell][e.edges[i]], static_cast<int>(i));
  }
  return {match_aligned(ml, rs.n_rs), match_aligned(mr, rs.n_rs)};
}

LayeredGraph block(const RSGraph& rs, const PermMatrix& sigma, const EdgeTuple& e, int player) {
  check_dims(rs, sigma);
  int b = perm_matrix_b(sigma);
  auto [sl, sr] = edge_pick(rs, e);
  const Provenance ref{Party::Referee, 0, 0};
  return concat_chain({expand(permute_groups(sr, b, ref)),
                       expand(encoded_rs(rs, sigma, {Party::Player, player, 0})),
                       expand(permute_groups(sl, b, ref))});
}

Permutation block_rho(const PermMatrix& sigma, const EdgeTuple& e) {
  PermVector parts;
  for (int j : e.edges) parts.push_back(sigma.at(e.ell).at(j));
  return join(parts);
}

void check_hypermatching(const Hypermatching& M, int k, int r) {
  if (static_cast<int>(M.size()) != k) throw Error("hypermatching: expected one row per layer");
  for (const auto& row : M) {
    if (static_cast<int>(row.size()) != r / 2) throw Error("hypermatching: expected r/2 hyperedges");
    std::vector<char> seen(r, 0);
    for (int j : row) {
      if (j < 0 || j >= r || seen[j]) throw Error("hypermatching: indices in a layer must be distinct and in [r]");
      seen[j] = 1;
    }
  }
}

LayeredGraph multi_block(const RSGraph& rs, const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                         const Hypermatching& M) {
  int k = static_cast<int>(sigmas.size());
  if (k < 1 || static_cast<int>(L.size()) != k) throw Error("multi_block: need k matrices and k indices");
  check_hypermatching(M, k, rs.r);
  std::vector<LayeredGraph> blocks;
  for (int i = 0; i < k; ++i) blocks.push_back(block(rs, sigmas[i], {L[i], M[i]}, i + 1));
  // Only the first (r/2) b positions of consecutive blocks are joined, so paths
  // through unpicked RS edges cannot re-enter the hidden permutation.
  return concat_chain(blocks, rs.r / 2 * perm_matrix_b(sigmas[0]));
}

}  // namespace phlab
