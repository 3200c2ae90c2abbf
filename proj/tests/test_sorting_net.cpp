#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "phlab/error.hpp"
#include "phlab/sorting_net.hpp"

using namespace phlab;

namespace {

int ceil_log(int m, int b) {
  int k = 0;
  long long p = 1;
  while (p < m) p *= b, ++k;
  return k;
}

void expect_sorts_all_01(const SorterNetwork& net) {
  const int m = net.m;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = (mask >> i) & 1;
    std::vector<int> out = apply_network(net, v);
    ASSERT_TRUE(std::is_sorted(out.begin(), out.end())) << "mask " << mask;
  }
}

void expect_well_formed(const SorterNetwork& net) {
  for (const auto& layer : net.layers) {
    std::vector<char> used(net.padded, 0);
    for (const auto& g : layer) {
      EXPECT_LE(static_cast<int>(g.size()), net.width);
      EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
      for (int x : g) {
        ASSERT_GE(x, 0);
        ASSERT_LT(x, net.padded);
        EXPECT_FALSE(used[x]);
        used[x] = 1;
      }
    }
  }
}

}  // namespace

TEST(MergeNetwork, SquareIsOneLayer) {
  SorterNetwork net = build_merge_network(9, 3);
  ASSERT_EQ(net.depth(), 1);
  EXPECT_EQ(net.layers[0].size(), 1u);
  EXPECT_THROW(build_merge_network(12, 3), Error);
}

TEST(MergeNetwork, Exhaustive01MergeInputs) {
  for (auto [m, b] : {std::pair{16, 2}, std::pair{8, 2}, std::pair{27, 3}, std::pair{64, 4}}) {
    SorterNetwork net = build_merge_network(m, b);
    expect_well_formed(net);
    const int run = m / b;
    // every 0-1 input made of b sorted runs is determined by the run zero counts
    std::vector<int> zeros(b, 0);
    while (true) {
      std::vector<int> v;
      for (int k = 0; k < b; ++k)
        for (int i = 0; i < run; ++i) v.push_back(i < zeros[k] ? 0 : 1);
      std::vector<int> out = apply_network(net, v);
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end())) << "m=" << m << " b=" << b;
      int k = 0;
      while (k < b && zeros[k] == run) zeros[k++] = 0;
      if (k == b) break;
      ++zeros[k];
    }
  }
}

TEST(MergeNetwork, SortedInputUnchanged) {
  SorterNetwork net = build_merge_network(16, 2);
  std::vector<int> v(16);
  std::iota(v.begin(), v.end(), 0);
  EXPECT_EQ(apply_network(net, v), v);
}

TEST(SortNetwork, SmallIsOneLayer) {
  EXPECT_EQ(build_sort_network(4, 4).depth(), 1);
  EXPECT_EQ(build_sort_network(3, 5).depth(), 1);
}

TEST(SortNetwork, Exhaustive01) {
  for (auto [m, b] : {std::pair{12, 2}, std::pair{12, 4}, std::pair{12, 3}, std::pair{10, 5}, std::pair{16, 4},
                      std::pair{16, 16}, std::pair{18, 9}}) {
    SorterNetwork net = build_sort_network(m, b);
    expect_well_formed(net);
    expect_sorts_all_01(net);
  }
}

TEST(SortNetwork, RandomPermutations) {
  Rng rng(3);
  for (auto [m, b] : {std::pair{64, 2}, std::pair{64, 4}, std::pair{64, 16}, std::pair{81, 9}, std::pair{100, 10}}) {
    SorterNetwork net = build_sort_network(m, b);
    expect_well_formed(net);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> v = Permutation::random(m, rng).image();
      std::vector<int> out = apply_network(net, v);
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
    }
  }
}

TEST(SortNetwork, DepthWithinBoundOnGrid) {
  for (int b : {2, 3, 4, 8, 9, 16})
    for (int m : {16, 64, 256, 1024}) {
      SorterNetwork net = build_sort_network(m, b);
      int L = ceil_log(m, b);
      EXPECT_LE(net.depth(), 4 * L * L) << "m=" << m << " b=" << b;
    }
}

TEST(Decompose, Examples) {
  Decomposition d = decompose(Permutation::identity(8), 2);
  for (const auto& g : d.gammas) EXPECT_TRUE(g.is_identity());
  Permutation s = Permutation::from_one_indexed({2, 1, 4, 3});
  EXPECT_EQ(recompose(decompose(s, 2)), s);
}

TEST(Decompose, RecomposeAndSimplicity) {
  Rng rng(17);
  for (auto [m, b, trials] : {std::tuple{32, 4, 500}, std::tuple{64, 4, 200}, std::tuple{12, 3, 200},
                              std::tuple{16, 2, 200}, std::tuple{36, 9, 100}}) {
    std::vector<Equipartition> parts = decomposition_partitions(m, b);
    for (int t = 0; t < trials; ++t) {
      Permutation s = Permutation::random(m, rng);
      Decomposition d = decompose(s, b);
      ASSERT_EQ(d.partitions.size(), d.gammas.size());
      ASSERT_EQ(d.partitions.size(), parts.size());
      Permutation acc = Permutation::identity(m);
      for (size_t i = 0; i < d.gammas.size(); ++i) {
        EXPECT_TRUE(is_simple(d.gammas[i], d.partitions[i]));
        EXPECT_EQ(d.partitions[i].groups, parts[i].groups);
        acc = compose(acc, d.gammas[i]);
      }
      EXPECT_EQ(acc, s);
      EXPECT_EQ(recompose(d), s);
    }
  }
}

TEST(Decompose, RequiresDivisibility) { EXPECT_THROW(decompose(Permutation::identity(10), 4), Error); }

TEST(DumpNetwork, OneIndexedLines) {
  SorterNetwork net = build_sort_network(4, 2);
  std::string s = dump_network(net);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), net.depth());
  EXPECT_EQ(s.substr(0, 3), "1 2");
}
