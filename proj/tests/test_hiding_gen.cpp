#include <gtest/gtest.h>

#include "oracles.hpp"
#include "phlab/error.hpp"
#include "phlab/hiding_gen.hpp"
#include "phlab/sorting_net.hpp"

using namespace phlab;

namespace {

Permutation random_lex_simple(int m, int b, Rng& rng) {
  PermVector v;
  for (int i = 0; i < m / b; ++i) v.push_back(Permutation::random(b, rng));
  return join(v);
}

GenParams params(int m, int b, int k, int p) {
  GenParams q;
  q.m = m;
  q.b = b;
  q.k = k;
  q.p = p;
  return q;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(validate(params(6, 4, 1, 1)), Error);
  EXPECT_THROW(validate(params(8, 2, 0, 1)), Error);
  EXPECT_THROW(validate(params(8, 2, 1, 0)), Error);
  GenParams q = params(8, 2, 1, 1);
  q.rs = trivial_rs(4, 4);
  EXPECT_THROW(validate(q), Error);
  q.rs = trivial_rs(16, 8);
  EXPECT_NO_THROW(validate(q));
}

TEST(GenSimple, IdentityAndCount) {
  Rng rng(1);
  GenParams q = params(8, 2, 2, 1);
  LayeredGraph g = gen_simple(Permutation::identity(8), Equipartition::lex(8, 2), q, rng);
  EXPECT_TRUE(extract_permutation(g, 8).perm.is_identity());
  RSGraph rs = rs_for(q);
  EXPECT_EQ(g.vertex_count(), 6LL * q.k * rs.n_rs * q.b + 2 * q.m);
  EXPECT_EQ(vertex_count(q, false), g.vertex_count());
}

TEST(GenSimple, RejectsNonSimple) {
  Rng rng(2);
  EXPECT_THROW(gen_simple(Permutation::from_one_indexed({3, 4, 1, 2, 5, 6, 7, 8}), Equipartition::lex(8, 2),
                          params(8, 2, 1, 1), rng),
               Error);
}

TEST(GenSimple, LexSoundnessP1) {
  Rng rng(3);
  GenParams q = params(16, 4, 2, 1);
  for (int t = 0; t < 40; ++t) {
    Permutation rho = random_lex_simple(16, 4, rng);
    Rng sub = rng.split(static_cast<uint64_t>(t));
    LayeredGraph g = gen_simple(rho, Equipartition::lex(16, 4), q, sub);
    EXPECT_EQ(oracle::reach_perm(g, 16), rho.image());
    EXPECT_EQ(g.vertex_count(), vertex_count(q, false));
  }
}

TEST(GenSimple, NonLexPartitionUsesWrapper) {
  Rng rng(4);
  GenParams q = params(4, 2, 2, 1);
  Equipartition P(4, 2, {{0, 2}, {1, 3}});
  Permutation rho = Permutation::from_one_indexed({3, 4, 1, 2});
  SimpleSample s = gen_simple_detailed(rho, P, q, rng);
  EXPECT_EQ(s.swap, Permutation::from_one_indexed({1, 3, 2, 4}));
  EXPECT_EQ(join(s.instance.target()), Permutation::from_one_indexed({2, 1, 4, 3}));
  EXPECT_EQ(extract_permutation(s.graph, 4).perm, rho);
  EXPECT_EQ(s.graph.vertex_count(), vertex_count(q, false, false));
  EXPECT_EQ(vertex_count(q, false, false), vertex_count(q, false, true) + 4 * 4);
}

TEST(GenSimple, P2Soundness) {
  Rng rng(5);
  GenParams q = params(8, 2, 2, 2);
  int64_t want = vertex_count(q, false);
  for (int t = 0; t < 5; ++t) {
    Permutation rho = random_lex_simple(8, 2, rng);
    Rng sub = rng.split(static_cast<uint64_t>(t));
    LayeredGraph g = gen_simple(rho, Equipartition::lex(8, 2), q, sub);
    EXPECT_EQ(extract_permutation(g, 8).perm, rho);
    EXPECT_EQ(g.vertex_count(), want);
  }
}

TEST(GenSimple, P2CountRecurrence) {
  GenParams q = params(8, 2, 2, 2);
  RSGraph rs = rs_for(q);
  GenParams in = inner_params(q);
  GenParams gam = q;
  gam.p = 1;
  int64_t nb = static_cast<int64_t>(rs.n_rs) * q.b;
  EXPECT_EQ(vertex_count(q, false), 2 * q.k * (nb + vertex_count(in, true)) + vertex_count(gam, true));
}

TEST(PBlock, SameSemanticsAcrossPassesAndSeeds) {
  Rng rng(6);
  GenParams q1 = params(8, 2, 2, 1), q2 = params(8, 2, 2, 2);
  RSGraph rs = rs_for(q1);
  for (int t = 0; t < 3; ++t) {
    std::vector<PermMatrix> sig;
    std::vector<int> L;
    for (int i = 0; i < 2; ++i) {
      sig.push_back(random_perm_matrix(rs.t, rs.r, 2, rng));
      L.push_back(static_cast<int>(rng.below(rs.t)));
    }
    Hypermatching M = sample_hypermatching(2, rs.r, rng);
    Rng ra(100 + t), rb(200 + t);
    LayeredGraph g1 = p_multi_block_sample(rs, sig, L, M, q1, ra);
    LayeredGraph ga = p_multi_block_sample(rs, sig, L, M, q2, ra);
    LayeredGraph gb = p_multi_block_sample(rs, sig, L, M, q2, rb);
    Permutation want = join(recompute_gamma_star(sig, L, M));
    EXPECT_EQ(extract_permutation(g1, 8).perm, want);
    EXPECT_EQ(extract_permutation(ga, 8).perm, want);
    EXPECT_EQ(extract_permutation(gb, 8).perm, want);
    EXPECT_EQ(ga.vertex_count(), gb.vertex_count());
    bool differ = ga.edges.size() != gb.edges.size();
    for (size_t i = 0; !differ && i < ga.edges.size(); ++i)
      differ = ga.edges[i].u != gb.edges[i].u || ga.edges[i].v != gb.edges[i].v;
    EXPECT_TRUE(differ);
  }
}

TEST(GenGeneral, Soundness) {
  Rng rng(7);
  GenParams q = params(16, 4, 2, 1);
  int64_t want = vertex_count(q, true);
  for (int t = 0; t < 10; ++t) {
    Permutation s = Permutation::random(16, rng);
    Rng sub = rng.split(static_cast<uint64_t>(t));
    LayeredGraph g = gen_general(s, q, sub);
    EXPECT_EQ(extract_permutation(g, 16).perm, s);
    EXPECT_EQ(g.vertex_count(), want);
  }
}

TEST(GenGeneral, CrossIdentityAndCountBySection) {
  Rng rng(8);
  GenParams q = params(8, 2, 2, 1);
  Permutation cross = Permutation::from_one_indexed({5, 6, 7, 8, 1, 2, 3, 4});
  LayeredGraph g = gen_general(cross, q, rng);
  EXPECT_EQ(extract_permutation(g, 8).perm, cross);
  int64_t sum = 0;
  for (const auto& P : decomposition_partitions(8, 2)) sum += vertex_count(q, false, P.is_lex());
  EXPECT_EQ(g.vertex_count(), sum);
  int max_section = 0;
  for (const auto& e : g.edges) max_section = std::max(max_section, e.tag.section);
  EXPECT_EQ(max_section, static_cast<int>(decomposition_partitions(8, 2).size()));
}

TEST(GenGeneral, BudgetEnforced) {
  Rng rng(9);
  GenParams q = params(8, 2, 2, 2);
  q.max_vertices = 1000;
  EXPECT_THROW(
      {
        try {
          gen_general(Permutation::identity(8), q, rng);
        } catch (const Error& e) {
          EXPECT_NE(std::string(e.what()).find("recursion budget"), std::string::npos);
          throw;
        }
      },
      Error);
}

TEST(GenFromInstance, ExtractIsGammaStarComposedWithGamma) {
  Rng rng(10);
  GenParams q = params(8, 2, 3, 1);
  RSGraph rs = rs_for(q);
  PermVector yes(4, Permutation::identity(2)), no(4, Permutation::from_one_indexed({2, 1}));
  for (int t = 0; t < 20; ++t) {
    MultiHPHInstance inst = sample_instance(rs.r, rs.t, 2, q.k, yes, no, rng);
    LayeredGraph g = gen_from_instance(inst, q, rng);
    EXPECT_EQ(extract_permutation(g, 8).perm, join(inst.target()));
  }
}
