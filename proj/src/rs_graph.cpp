#include "phlab/rs_graph.hpp"

#include <istream>
#include <ostream>

#include "phlab/error.hpp"

namespace phlab {

RSGraph trivial_rs(int n_rs, int r) {
  if (n_rs <= 0 || r <= 0 || n_rs % r != 0) throw Error("trivial_rs: r must divide n_rs");
  int c = n_rs / r;
  RSGraph g;
  g.n_rs = n_rs;
  g.r = r;
  g.t = c * c;
  g.left.assign(g.t, std::vector<int>(r));
  g.right.assign(g.t, std::vector<int>(r));
  for (int p = 0; p < c; ++p)
    for (int q = 0; q < c; ++q)
      for (int j = 0; j < r; ++j) {
        g.left[p * c + q][j] = p * r + j;
        g.right[p * c + q][j] = q * r + j;
      }
  return g;
}

namespace {

std::string edge_name(int i, int j) {
  return "matching " + std::to_string(i + 1) + " edge " + std::to_string(j + 1);
}

}  // namespace

RSReport validate_rs(const RSGraph& g) {
  RSReport rep;
  auto fail = [&](int i, int j, std::string msg) {
    rep.ok = false;
    rep.matching = i;
    rep.edge = j;
    rep.message = edge_name(i, j) + ": " + msg;
    return rep;
  };
  if (static_cast<int>(g.left.size()) != g.t || static_cast<int>(g.right.size()) != g.t)
    return fail(0, 0, "matching count differs from t");
  for (int i = 0; i < g.t; ++i) {
    if (static_cast<int>(g.left[i].size()) != g.r || static_cast<int>(g.right[i].size()) != g.r)
      return fail(i, 0, "matching size differs from r");
    std::vector<char> seen_l(g.n_rs, 0), seen_r(g.n_rs, 0);
    for (int j = 0; j < g.r; ++j) {
      int l = g.left[i][j], r = g.right[i][j];
      if (l < 0 || l >= g.n_rs || r < 0 || r >= g.n_rs) return fail(i, j, "endpoint out of range");
      if (seen_l[l] || seen_r[r]) return fail(i, j, "shares an endpoint with another edge of its matching");
      seen_l[l] = seen_r[r] = 1;
    }
  }
  // For each matching, reject any edge from another matching with both
  // endpoints inside it; the reported pair names the intruding edge.
  for (int i = 0; i < g.t; ++i) {
    std::vector<char> in_l(g.n_rs, 0), in_r(g.n_rs, 0);
    for (int j = 0; j < g.r; ++j) in_l[g.left[i][j]] = in_r[g.right[i][j]] = 1;
    for (int i2 = 0; i2 < g.t; ++i2) {
      if (i2 == i) continue;
      for (int j = 0; j < g.r; ++j)
        if (in_l[g.left[i2][j]] && in_r[g.right[i2][j]])
          return fail(i2, j, "lies between the endpoints of matching " + std::to_string(i + 1));
    }
  }
  return rep;
}

void write_rs(std::ostream& out, const RSGraph& g) {
  out << g.n_rs << ' ' << g.r << ' ' << g.t << '\n';
  for (int i = 0; i < g.t; ++i)
    for (int j = 0; j < g.r; ++j) out << g.left[i][j] + 1 << ' ' << g.right[i][j] + 1 << '\n';
}

RSGraph read_rs(std::istream& in) {
  RSGraph g;
  if (!(in >> g.n_rs >> g.r >> g.t) || g.n_rs <= 0 || g.r <= 0 || g.t <= 0)
    throw Error("rs file: bad header, expected 'n_rs r t'");
  g.left.assign(g.t, std::vector<int>(g.r));
  g.right.assign(g.t, std::vector<int>(g.r));
  for (int i = 0; i < g.t; ++i)
    for (int j = 0; j < g.r; ++j) {
      int l, r;
      if (!(in >> l >> r)) throw Error("rs file: truncated at " + edge_name(i, j));
      if (l < 1 || l > g.n_rs || r < 1 || r > g.n_rs)
        throw Error("rs file: endpoint out of range at " + edge_name(i, j));
      g.left[i][j] = l - 1;
      g.right[i][j] = r - 1;
    }
  return g;
}

}  // namespace phlab
