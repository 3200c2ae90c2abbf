#include "phlab/layered_graph.hpp"

#include <algorithm>

#include "phlab/error.hpp"

namespace phlab {

std::string to_string(const Provenance& p) {
  std::string s;
  switch (p.party) {
    case Party::Fixed: s = "F"; break;
    case Party::Referee: s = "R"; break;
    case Party::Player: s = "P" + std::to_string(p.player); break;
  }
  if (p.section) s += "/" + std::to_string(p.section);
  return s;
}

Provenance parse_provenance(const std::string& s) {
  Provenance p;
  std::string head = s;
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      head = s.substr(0, slash);
      p.section = std::stoi(s.substr(slash + 1));
    }
    if (head == "F") {
      p.party = Party::Fixed;
    } else if (head == "R") {
      p.party = Party::Referee;
    } else if (head.size() > 1 && head[0] == 'P') {
      p.party = Party::Player;
      p.player = std::stoi(head.substr(1));
    } else {
      throw Error("bad provenance tag '" + s + "'");
    }
  } catch (const std::logic_error&) {
    throw Error("bad provenance tag '" + s + "'");
  }
  return p;
}

int64_t LayeredGraph::vertex_count() const {
  int64_t n = 0;
  for (int s : layers) n += s;
  return n;
}

std::vector<int64_t> LayeredGraph::offsets() const {
  std::vector<int64_t> off(layers.size() + 1, 0);
  for (size_t i = 0; i < layers.size(); ++i) off[i + 1] = off[i] + layers[i];
  return off;
}

void LayeredGraph::validate() const {
  for (size_t e = 0; e < edges.size(); ++e) {
    const Edge& x = edges[e];
    if (x.layer < 0 || x.layer + 1 >= depth() || x.u < 0 || x.u >= layers[x.layer] || x.v < 0 ||
        x.v >= layers[x.layer + 1])
      throw Error("edge " + std::to_string(e + 1) + " (" + std::to_string(x.layer + 1) + ", " +
                  std::to_string(x.u + 1) + ", " + std::to_string(x.v + 1) + ") leaves its layer range");
  }
}

LayeredGraph basic(const Permutation& sigma, Provenance tag) {
  LayeredGraph g;
  g.layers = {sigma.size(), sigma.size()};
  g.edges.reserve(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) g.add_edge(0, i, sigma(i), tag);
  return g;
}

GroupLayeredGraph permute_groups(const Permutation& sigma, int b, Provenance tag) {
  GroupLayeredGraph g;
  g.w = sigma.size();
  g.d = 2;
  g.b = b;
  for (int i = 0; i < sigma.size(); ++i) g.tuples.push_back({0, i, sigma(i), Permutation::identity(b), tag});
  return g;
}

LayeredGraph expand(const GroupLayeredGraph& g) {
  LayeredGraph out;
  out.layers.assign(g.d, g.w * g.b);
  out.edges.reserve(g.tuples.size() * g.b);
  for (const auto& t : g.tuples) {
    if (t.layer < 0 || t.layer + 1 >= g.d || t.a1 < 0 || t.a1 >= g.w || t.a2 < 0 || t.a2 >= g.w ||
        t.sigma.size() != g.b)
      throw Error("expand: malformed tuple");
    for (int j = 0; j < g.b; ++j) out.add_edge(t.layer, t.a1 * g.b + j, t.a2 * g.b + t.sigma(j), t.tag);
  }
  return out;
}

LayeredGraph concat_chain(const std::vector<LayeredGraph>& parts, int width) {
  if (parts.empty()) throw Error("concat: no graphs");
  LayeredGraph out;
  size_t nedges = 0;
  for (const auto& p : parts) nedges += p.edges.size() + p.layers.back();
  out.edges.reserve(nedges);
  // Traversal order is parts[n-1], ..., parts[0].
  for (size_t k = parts.size(); k-- > 0;) {
    const LayeredGraph& g = parts[k];
    if (g.layers.empty()) throw Error("concat: empty graph");
    int base = out.depth();
    if (base > 0) {
      int join = std::min({out.layers.back(), g.layers.front(), width});
      for (int x = 0; x < join; ++x) out.add_edge(base - 1, x, x);
    }
    out.layers.insert(out.layers.end(), g.layers.begin(), g.layers.end());
    for (const Edge& e : g.edges) out.edges.push_back({e.layer + base, e.u, e.v, e.tag});
  }
  return out;
}

LayeredGraph concat(const LayeredGraph& g1, const LayeredGraph& g2) { return concat_chain({g1, g2}); }

void retag(LayeredGraph& g, Provenance tag) {
  for (auto& e : g.edges) e.tag = tag;
}

void set_section(LayeredGraph& g, int section) {
  for (auto& e : g.edges) e.tag.section = section;
}

namespace {

// Edge indices bucketed by layer.
std::vector<std::vector<int>> by_layer(const LayeredGraph& g) {
  std::vector<std::vector<int>> out(std::max(0, g.depth() - 1));
  for (size_t e = 0; e < g.edges.size(); ++e) out[g.edges[e].layer].push_back(static_cast<int>(e));
  return out;
}

}  // namespace

ExtractResult extract_permutation(const LayeredGraph& g, int m) {
  ExtractResult res;
  g.validate();
  if (g.depth() == 0 || g.layers.front() < m || g.layers.back() < m) {
    res.error = "first or last layer has fewer than m vertices";
    return res;
  }
  auto buckets = by_layer(g);
  std::vector<int> sink_of(m, -1);
  // Sources are processed 64 at a time as bit masks.
  for (int base = 0; base < m; base += 64) {
    int cnt = std::min(64, m - base);
    std::vector<uint64_t> cur(g.layers.front(), 0);
    for (int s = 0; s < cnt; ++s) cur[base + s] = uint64_t{1} << s;
    for (int layer = 0; layer + 1 < g.depth(); ++layer) {
      std::vector<uint64_t> nxt(g.layers[layer + 1], 0);
      for (int e : buckets[layer]) nxt[g.edges[e].v] |= cur[g.edges[e].u];
      cur.swap(nxt);
    }
    std::vector<int> hits(cnt, 0);
    for (int t = 0; t < m; ++t) {
      for (int s = 0; s < cnt; ++s) {
        if (!(cur[t] >> s & 1)) continue;
        if (hits[s]++ == 0) sink_of[base + s] = t;
      }
    }
    for (int s = 0; s < cnt; ++s) {
      if (hits[s] != 1) {
        res.source = base + s;
        res.error = "source " + std::to_string(base + s + 1) + " reaches " + std::to_string(hits[s]) +
                    " of the first " + std::to_string(m) + " sinks";
        return res;
      }
    }
  }
  std::vector<int> owner(m, -1);
  for (int s = 0; s < m; ++s) {
    if (owner[sink_of[s]] != -1) {
      res.source = s;
      res.error = "sources " + std::to_string(owner[sink_of[s]] + 1) + " and " + std::to_string(s + 1) +
                  " both reach sink " + std::to_string(sink_of[s] + 1);
      return res;
    }
    owner[sink_of[s]] = s;
  }
  res.ok = true;
  res.perm = Permutation(sink_of);
  return res;
}

bool paths_vertex_disjoint(const LayeredGraph& g, int m) {
  g.validate();
  auto buckets = by_layer(g);
  int d = g.depth();
  // owner: -1 unreached, s reached only from source s, -2 reached from several.
  std::vector<std::vector<int>> owner(d);
  owner[0].assign(g.layers[0], -1);
  for (int s = 0; s < std::min(m, g.layers[0]); ++s) owner[0][s] = s;
  for (int layer = 0; layer + 1 < d; ++layer) {
    owner[layer + 1].assign(g.layers[layer + 1], -1);
    for (int e : buckets[layer]) {
      int o = owner[layer][g.edges[e].u];
      int& t = owner[layer + 1][g.edges[e].v];
      if (o == -1) continue;
      if (t == -1)
        t = o;
      else if (t != o)
        t = -2;
    }
  }
  std::vector<char> co(g.layers[d - 1], 0);
  for (int t = 0; t < std::min(m, g.layers[d - 1]); ++t) co[t] = 1;
  for (int layer = d - 1; layer >= 0; --layer) {
    for (int v = 0; v < g.layers[layer]; ++v)
      if (co[v] && owner[layer][v] == -2) return false;
    if (layer == 0) break;
    std::vector<char> prev(g.layers[layer - 1], 0);
    for (int e : buckets[layer - 1])
      if (co[g.edges[e].v]) prev[g.edges[e].u] = 1;
    co.swap(prev);
  }
  return true;
}

}  // namespace phlab
