#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phlab/matching.hpp"

using namespace phlab;

namespace {

std::vector<std::pair<int, int>> plain(const BipartiteInstance& inst) {
  std::vector<std::pair<int, int>> e;
  for (const auto& x : inst.edges) e.push_back({x.u, x.v});
  return e;
}

}  // namespace

TEST(Bipartite, SmallestExample) {
  // basic(id_1) with m = 2 has n = 2 vertices and one edge.
  LayeredGraph g = basic(Permutation::identity(1));
  BipartiteInstance inst = bipartite_of(g, 2);
  EXPECT_EQ(inst.n_left(), 3);
  EXPECT_EQ(inst.n_right(), 3);
  EXPECT_EQ(static_cast<int64_t>(inst.edges.size()), static_cast<int64_t>(g.edges.size()) + inst.n + 2);
  MatchingResult r = max_matching(inst);
  EXPECT_EQ(r.size, 3);  // canonical matching of size 2 plus one augmenting path
  EXPECT_EQ(check_certificate(inst.n_left(), inst.n_right(), plain(inst), r), "");
}

TEST(Bipartite, EdgeCount) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    LayeredGraph g = concat(basic(Permutation::random(6, rng)), basic(Permutation::random(6, rng)));
    BipartiteInstance inst = bipartite_of(g, 6);
    EXPECT_EQ(static_cast<int64_t>(inst.edges.size()), static_cast<int64_t>(g.edges.size()) + g.vertex_count() + 6);
  }
}

TEST(MaxMatching, EmptyGraphKeepsCanonical) {
  LayeredGraph g;
  g.layers = {2, 2};
  BipartiteInstance inst = bipartite_of(g, 2);
  EXPECT_EQ(max_matching(inst).size, inst.n);
}

TEST(MaxMatching, CompleteBipartite) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) e.push_back({u, v});
  MatchingResult r = max_matching(3, 3, e);
  EXPECT_EQ(r.size, 3);
  EXPECT_EQ(check_certificate(3, 3, e, r), "");
}

TEST(MaxMatching, RandomAgainstKuhn) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    int nl = 1 + static_cast<int>(rng.below(30)), nr = 1 + static_cast<int>(rng.below(30));
    int ne = static_cast<int>(rng.below(nl * nr + 1));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < ne; ++i) e.push_back({static_cast<int>(rng.below(nl)), static_cast<int>(rng.below(nr))});
    MatchingResult r = max_matching(nl, nr, e);
    EXPECT_EQ(r.size, oracle::kuhn(nl, nr, e));
    EXPECT_EQ(check_certificate(nl, nr, e, r), "");
  }
}

TEST(MaxMatching, CertificateCatchesBadCover) {
  std::vector<std::pair<int, int>> e = {{0, 0}, {1, 1}};
  MatchingResult r = max_matching(2, 2, e);
  r.cover_left.clear();
  r.cover_right.clear();
  EXPECT_NE(check_certificate(2, 2, e, r), "");
}

TEST(Sigmas, Shapes) {
  EXPECT_TRUE(sigma_eq(6).is_identity());
  EXPECT_EQ(sigma_cross(4), Permutation::from_one_indexed({3, 4, 1, 2}));
}

TEST(Dichotomy, CrossAndEqOnBasicGraphs) {
  for (int m : {2, 4, 8}) {
    BipartiteInstance eq = bipartite_of(basic(sigma_eq(m)), m), cr = bipartite_of(basic(sigma_cross(m)), m);
    EXPECT_EQ(max_matching(eq).size, eq.n + m / 2);
    EXPECT_EQ(max_matching(cr).size, cr.n);
    EXPECT_EQ(oracle::kuhn(eq.n_left(), eq.n_right(), plain(eq)), eq.n + m / 2);
    EXPECT_EQ(oracle::kuhn(cr.n_left(), cr.n_right(), plain(cr)), cr.n);
  }
}

TEST(Dichotomy, GeneratedSamples) {
  Rng rng(3);
  GenParams q;
  q.m = 8;
  q.b = 2;
  q.k = 2;
  q.p = 1;
  DichotomyReport rep = dichotomy_check(q, 5, rng);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.eq_ok, 5);
  EXPECT_EQ(rep.cross_ok, 5);
  EXPECT_NEAR(rep.eps_gap, 1.0 - double(rep.n) / (rep.n + 4), 1e-15);
}
