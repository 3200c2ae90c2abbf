#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "phlab/block_graphs.hpp"
#include "phlab/error.hpp"
#include "phlab/hph.hpp"

using namespace phlab;

namespace {

Permutation P(std::vector<int> one) { return Permutation::from_one_indexed(one); }

EdgeTuple random_edge_tuple(const RSGraph& rs, Rng& rng) {
  EdgeTuple e;
  e.ell = static_cast<int>(rng.below(rs.t));
  std::vector<int> idx(rs.r);
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  e.edges.assign(idx.begin(), idx.begin() + rs.r / 2);
  return e;
}

// Closed form rho computed from the definition, one entry at a time.
oracle::Img rho_oracle(const PermMatrix& s, const EdgeTuple& e, int b) {
  oracle::Img img;
  for (size_t i = 0; i < e.edges.size(); ++i) {
    const auto& p = s[e.ell][e.edges[i]].image();
    for (int a = 0; a < b; ++a) img.push_back(static_cast<int>(i) * b + p[a]);
  }
  return img;
}

}  // namespace

TEST(EncodedRS, EnumeratedExample) {
  RSGraph rs = trivial_rs(2, 2);
  PermMatrix s = {{P({2, 1}), P({1, 2})}};
  GroupLayeredGraph g = encoded_rs(rs, s);
  ASSERT_EQ(g.tuples.size(), 2u);
  EXPECT_EQ(g.tuples[0].a1, 0);
  EXPECT_EQ(g.tuples[0].a2, 0);
  EXPECT_EQ(g.tuples[0].sigma, P({2, 1}));
  EXPECT_EQ(g.tuples[1].a1, 1);
  EXPECT_EQ(g.tuples[1].a2, 1);
  EXPECT_EQ(g.tuples[1].sigma, P({1, 2}));
}

TEST(EncodedRS, TupleCountAndIdentity) {
  Rng rng(1);
  RSGraph rs = trivial_rs(8, 4);
  PermMatrix s = random_perm_matrix(rs.t, rs.r, 3, rng);
  EXPECT_EQ(perm_matrix_b(s), 3);
  EXPECT_EQ(static_cast<int>(encoded_rs(rs, s).tuples.size()), rs.t * rs.r);
  PermMatrix id(rs.t, std::vector<Permutation>(rs.r, Permutation::identity(2)));
  LayeredGraph e = expand(encoded_rs(rs, id));
  std::set<std::pair<int, int>> want, got;
  for (int i = 0; i < rs.t; ++i)
    for (int j = 0; j < rs.r; ++j)
      for (int c = 0; c < 2; ++c) want.insert({rs.left_of(i, j) * 2 + c, rs.right_of(i, j) * 2 + c});
  for (const auto& ed : e.edges) got.insert({ed.u, ed.v});
  EXPECT_EQ(got, want);
  EXPECT_THROW(encoded_rs(rs, PermMatrix(2, std::vector<Permutation>(4, Permutation::identity(2)))), Error);
}

TEST(EdgePick, FigureExample) {
  // two picked edges with left endpoints (1,3) and right endpoints (4,6) on n_rs = 6
  RSGraph rs;
  rs.n_rs = 6;
  rs.r = 4;
  rs.t = 1;
  rs.left = {{0, 2, 1, 4}};
  rs.right = {{3, 5, 0, 1}};
  auto [sl, sr] = edge_pick(rs, {0, {0, 1}});
  EXPECT_EQ(sl, P({1, 3, 2, 4, 5, 6}));
  EXPECT_EQ(sr, P({3, 4, 5, 1, 6, 2}));
}

TEST(EdgePick, Definitional) {
  RSGraph one = trivial_rs(2, 2);
  auto [a, b] = edge_pick(one, {0, {0}});
  EXPECT_TRUE(a.is_identity());
  EXPECT_TRUE(b.is_identity());
  Rng rng(2);
  RSGraph rs = trivial_rs(12, 4);
  for (int t = 0; t < 100; ++t) {
    EdgeTuple e = random_edge_tuple(rs, rng);
    auto [sl, sr] = edge_pick(rs, e);
    for (size_t i = 0; i < e.edges.size(); ++i) {
      EXPECT_EQ(sl(static_cast<int>(i)), rs.left_of(e.ell, e.edges[i]));
      EXPECT_EQ(sr(rs.right_of(e.ell, e.edges[i])), static_cast<int>(i));
    }
  }
  EXPECT_THROW(edge_pick(rs, {0, {0, 0}}), Error);
  EXPECT_THROW(edge_pick(rs, {9, {0, 1}}), Error);
}

TEST(Block, Structure) {
  Rng rng(3);
  RSGraph rs = trivial_rs(8, 4);
  PermMatrix s = random_perm_matrix(rs.t, rs.r, 2, rng);
  LayeredGraph g = block(rs, s, random_edge_tuple(rs, rng));
  EXPECT_EQ(g.layers, std::vector<int>(6, 16));
}

TEST(Block, ExtractEqualsRho) {
  RSGraph tiny = trivial_rs(2, 2);
  PermMatrix s1 = {{P({2, 1}), P({1, 2})}};
  EXPECT_EQ(extract_permutation(block(tiny, s1, {0, {0}}), 2).perm, P({2, 1}));
  PermMatrix id(tiny.t, std::vector<Permutation>(tiny.r, Permutation::identity(2)));
  EXPECT_TRUE(extract_permutation(block(tiny, id, {0, {1}}), 2).perm.is_identity());

  Rng rng(4);
  for (int b : {2, 3}) {
    RSGraph rs = trivial_rs(8, 4);
    for (int t = 0; t < 50; ++t) {
      PermMatrix s = random_perm_matrix(rs.t, rs.r, b, rng);
      EdgeTuple e = random_edge_tuple(rs, rng);
      LayeredGraph g = block(rs, s, e);
      int m = rs.r / 2 * b;
      EXPECT_EQ(oracle::reach_perm(g, m), rho_oracle(s, e, b));
      EXPECT_EQ(block_rho(s, e).image(), rho_oracle(s, e, b));
      EXPECT_TRUE(paths_vertex_disjoint(g, m));
    }
  }
}

TEST(MultiBlock, ComposesBlocks) {
  Rng rng(5);
  RSGraph rs = trivial_rs(8, 4);
  for (int t = 0; t < 100; ++t) {
    int k = 1 + static_cast<int>(rng.below(3));
    std::vector<PermMatrix> sig;
    std::vector<int> L;
    for (int i = 0; i < k; ++i) {
      sig.push_back(random_perm_matrix(rs.t, rs.r, 2, rng));
      L.push_back(static_cast<int>(rng.below(rs.t)));
    }
    Hypermatching M = sample_hypermatching(k, rs.r, rng);
    LayeredGraph g = multi_block(rs, sig, L, M);
    EXPECT_EQ(g.vertex_count(), 6LL * k * rs.n_rs * 2);
    oracle::Img want(4);
    std::iota(want.begin(), want.end(), 0);
    for (int i = 0; i < k; ++i) want = oracle::compose(want, rho_oracle(sig[i], {L[i], M[i]}, 2));
    EXPECT_EQ(extract_permutation(g, 4).perm.image(), want);
    EXPECT_EQ(join(recompute_gamma_star(sig, L, M)).image(), want);
    if (k == 1) EXPECT_EQ(g.edges.size(), block(rs, sig[0], {L[0], M[0]}).edges.size());
  }
}

TEST(MultiBlock, RejectsBadHypermatching) {
  EXPECT_THROW(check_hypermatching({{0, 0}}, 1, 4), Error);
  EXPECT_THROW(check_hypermatching({{0, 4}}, 1, 4), Error);
  EXPECT_THROW(check_hypermatching({{0, 1}}, 2, 4), Error);
  EXPECT_NO_THROW(check_hypermatching({{0, 1}, {3, 2}}, 2, 4));
}

TEST(Block, ProvenanceTags) {
  Rng rng(6);
  RSGraph rs = trivial_rs(4, 2);
  LayeredGraph g = block(rs, random_perm_matrix(rs.t, rs.r, 2, rng), {1, {0}}, 3);
  int players = 0, referee = 0, fixed = 0;
  for (const auto& e : g.edges) {
    if (e.tag.party == Party::Player) {
      ++players;
      EXPECT_EQ(e.tag.player, 3);
    }
    referee += e.tag.party == Party::Referee;
    fixed += e.tag.party == Party::Fixed;
  }
  EXPECT_EQ(players, rs.t * rs.r * 2);
  EXPECT_EQ(referee, 2 * rs.n_rs * 2);  // the two group-permuting gadgets
  EXPECT_EQ(fixed, 2 * rs.n_rs * 2);    // the two joins
}
