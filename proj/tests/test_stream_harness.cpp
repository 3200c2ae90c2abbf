#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "phlab/error.hpp"
#include "phlab/stream_harness.hpp"

using namespace phlab;

namespace {

EdgeStream bip_stream(int nl, int nr, const std::vector<std::pair<int, int>>& e) {
  EdgeStream s;
  s.n = nl + nr;
  for (auto [u, v] : e) s.edges.push_back({u, nl + v, {}});
  return s;
}

std::vector<std::pair<int, int>> random_bipartite(int nl, int nr, double p, Rng& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < nl; ++u)
    for (int v = 0; v < nr; ++v)
      if (rng.uniform() < p) e.push_back({u, v});
  return e;
}

GenParams small() {
  GenParams q;
  q.m = 4;
  q.b = 2;
  q.k = 1;
  q.p = 1;
  return q;
}

}  // namespace

TEST(StreamFormat, Roundtrip) {
  Rng rng(1);
  LayeredGraph g = gen_general(Permutation::random(4, rng), small(), rng);
  EdgeStream s = stream_of(g);
  EXPECT_TRUE(s.directed);
  EXPECT_EQ(s.n, g.vertex_count());
  std::stringstream ss;
  write_stream(ss, s);
  EXPECT_EQ(ss.str().substr(0, 11), "PHSTREAM v1");
  EdgeStream back = read_stream(ss);
  ASSERT_EQ(back.edges.size(), s.edges.size());
  for (size_t i = 0; i < s.edges.size(); ++i) {
    EXPECT_EQ(back.edges[i].u, s.edges[i].u);
    EXPECT_EQ(back.edges[i].v, s.edges[i].v);
    EXPECT_EQ(back.edges[i].tag, s.edges[i].tag);
  }
}

TEST(StreamFormat, Errors) {
  std::stringstream bad1("PHSTREAM v2\n2 1 0\n1 2\n");
  EXPECT_THROW(read_stream(bad1), Error);
  std::stringstream bad2("PHSTREAM v1\n2 1 0\n1 3\n");
  EXPECT_THROW(read_stream(bad2), Error);
  std::stringstream bad3("PHSTREAM v1\n2 2 0\n1 2\n");
  EXPECT_THROW(read_stream(bad3), Error);
}

TEST(Shuffle, IsPermutationOfEdges) {
  Rng rng(2);
  EdgeStream s = bip_stream(5, 5, random_bipartite(5, 5, 0.5, rng));
  EdgeStream t = s;
  shuffle_stream(t, 9);
  ASSERT_EQ(t.edges.size(), s.edges.size());
  auto key = [](const EdgeStream& x) {
    std::vector<std::pair<int, int>> k;
    for (const auto& e : x.edges) k.push_back({e.u, e.v});
    std::sort(k.begin(), k.end());
    return k;
  };
  EXPECT_EQ(key(s), key(t));
  EdgeStream t2 = s;
  shuffle_stream(t2, 9);
  for (size_t i = 0; i < t.edges.size(); ++i) EXPECT_EQ(t.edges[i].u, t2.edges[i].u);
}

TEST(RunPasses, Counting) {
  Rng rng(3);
  EdgeStream s = bip_stream(6, 6, random_bipartite(6, 6, 0.4, rng));
  auto alg = counting_algorithm();
  RunResult r = run_passes(*alg, s, 2);
  EXPECT_EQ(r.output, static_cast<int64_t>(s.edges.size()));
  EXPECT_EQ(r.snapshots.size(), 2u);
  EXPECT_LE(r.max_state_bits, 64u);
}

TEST(RunPasses, BudgetNamesElement) {
  EdgeStream s = bip_stream(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  auto alg = full_memory_matching();
  RunOptions opt;
  opt.budget_bits = 100;
  try {
    run_passes(*alg, s, 1, opt);
    FAIL() << "budget not enforced";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("element"), std::string::npos);
  }
}

TEST(Greedy, Examples) {
  EdgeStream k22 = bip_stream(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  auto g = greedy_matching_baseline();
  EXPECT_EQ(run_passes(*g, k22, 1).output, 2);
  EdgeStream pm = bip_stream(5, 5, {{0, 3}, {1, 4}, {2, 0}, {3, 1}, {4, 2}});
  EXPECT_EQ(run_passes(*g, pm, 1).output, 5);
}

TEST(Greedy, HalfApproximation) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    int nl = 2 + static_cast<int>(rng.below(15)), nr = 2 + static_cast<int>(rng.below(15));
    auto e = random_bipartite(nl, nr, rng.uniform() * 0.5, rng);
    EdgeStream s = bip_stream(nl, nr, e);
    shuffle_stream(s, t);
    int opt = oracle::kuhn(nl, nr, e);
    auto g = greedy_matching_baseline();
    int64_t got = run_passes(*g, s, 1).output;
    EXPECT_GE(2 * got, opt);
    auto a1 = augmenting_baseline(1);
    EXPECT_EQ(run_passes(*a1, s, 1).output, got);
    auto a3 = augmenting_baseline(3);
    int64_t better = run_passes(*a3, s, 3).output;
    EXPECT_GE(better, got);
    EXPECT_LE(better, opt);
    auto full = full_memory_matching();
    EXPECT_EQ(run_passes(*full, s, 1).output, opt);
  }
}

TEST(RunPasses, SnapshotsDeterministic) {
  Rng rng(5);
  EdgeStream s = bip_stream(8, 8, random_bipartite(8, 8, 0.3, rng));
  auto a = augmenting_baseline(2), b = augmenting_baseline(2);
  RunOptions opt;
  opt.tape_seed = 12;
  RunResult ra = run_passes(*a, s, 2, opt), rb = run_passes(*b, s, 2, opt);
  EXPECT_EQ(ra.snapshots, rb.snapshots);
  // resuming pass 2 from the pass-1 snapshot gives the same final state
  auto c = augmenting_baseline(2);
  c->init(s.n, s.directed);
  c->deserialize(ra.snapshots[0]);
  RandomTape tape(12);
  c->begin_pass(1, tape);
  for (const auto& e : s.edges) c->update(e, tape);
  c->end_pass(1, tape);
  EXPECT_EQ(c->serialize(), ra.snapshots[1]);
}

TEST(Advantage, FullMemoryAndNull) {
  GenParams q = small();
  auto eq = [&](Rng& r) {
    Rng sub = r.split("g");
    return stream_of(bipartite_of(gen_general(sigma_eq(q.m), q, sub), q.m));
  };
  auto cr = [&](Rng& r) {
    Rng sub = r.split("g");
    return stream_of(bipartite_of(gen_general(sigma_cross(q.m), q, sub), q.m));
  };
  int64_t n = vertex_count(q, true);
  Distinguisher by_size = [n](const StreamAlgorithm& a) { return a.output() > n ? 1 : 2; };
  Rng rng(6);
  AdvantageReport full = advantage_estimate(eq, cr, full_memory_matching, by_size, 30, 1, rng);
  EXPECT_DOUBLE_EQ(full.accuracy, 1.0);
  AdvantageReport null = advantage_estimate(eq, eq, full_memory_matching, by_size, 200, 1, rng);
  EXPECT_LE(std::abs(null.accuracy - 0.5), 3 * null.sigma);
  EXPECT_LE(full.ci_low, full.accuracy);
}

TEST(Replay, HandoffsAndBytes) {
  Rng rng(7);
  GenParams q = small();
  q.k = 2;
  LayeredGraph g = gen_general(sigma_cross(4), q, rng);
  EdgeStream s = stream_of(g);
  auto alg = counting_algorithm();
  ReplayReport rep = partitioned_replay(s, *alg, 2);
  EXPECT_EQ(rep.output, static_cast<int64_t>(s.edges.size()));
  ASSERT_EQ(rep.player_handoffs.size(), 2u);
  EXPECT_GT(rep.player_handoffs[0], 0);
  int64_t sum = 0;
  for (const auto& [party, bytes] : rep.bytes_by_party) sum += bytes;
  EXPECT_EQ(sum, rep.total_bytes);
  EXPECT_GT(rep.bytes_by_party["R"], 0);
}

TEST(Replay, PiAStreamsShareThePlayers) {
  Rng rng(8);
  GenParams q;
  q.m = 4;
  q.b = 2;
  q.k = 2;
  RSGraph rs = rs_for(q);
  PermVector yes(2, Permutation::identity(2)), no(2, Permutation::from_one_indexed({2, 1}));
  MultiHPHInstance inst = sample_instance(rs.r, rs.t, 2, 2, yes, no, rng);
  PiAStreams st = pi_a_streams(inst, q, rng);
  auto player_edges = [](const EdgeStream& s) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : s.edges)
      if (e.tag.party == Party::Player) out.push_back({e.u, e.v});
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(player_edges(st.fake), player_edges(st.real));
  auto alg = counting_algorithm();
  ReplayReport rep = partitioned_replay(st.fake, st.real, *alg, 2);
  EXPECT_EQ(rep.output, static_cast<int64_t>(st.real.edges.size()));
}
