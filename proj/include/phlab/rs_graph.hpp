#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phlab {

// Bipartite graph on [n_rs] x [n_rs] whose edges are partitioned into t
// matchings of r edges each. left[i][j] / right[i][j] are the endpoints of
// edge j of matching i (zero-indexed).
struct RSGraph {
  int n_rs = 0;
  int r = 0;
  int t = 0;
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;

  int left_of(int i, int j) const { return left[i][j]; }
  int right_of(int i, int j) const { return right[i][j]; }
  double alpha() const { return static_cast<double>(r) / n_rs; }
};

RSGraph trivial_rs(int n_rs, int r);

struct RSReport {
  bool ok = true;
  int matching = -1;  // offending matching (zero-indexed)
  int edge = -1;      // offending edge inside it
  std::string message;
};

// Checks that every matching is a matching and is induced.
RSReport validate_rs(const RSGraph& g);

void write_rs(std::ostream& out, const RSGraph& g);
RSGraph read_rs(std::istream& in);

}  // namespace phlab
