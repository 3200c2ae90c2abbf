#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "phlab/perm.hpp"

namespace phlab {

// Which input determined an edge: a player's permutation matrix, the
// referee's input, or fixed plumbing that depends on public parameters only.
enum class Party : uint8_t { Fixed, Player, Referee };

struct Provenance {
  Party party = Party::Fixed;
  int player = 0;   // 1..k for Party::Player
  int section = 0;  // layer index of the general generator, 0 when unused

  bool operator==(const Provenance&) const = default;
};

// "F", "R", "P<i>", optionally suffixed with "/<section>".
std::string to_string(const Provenance& p);
Provenance parse_provenance(const std::string& s);

struct Edge {
  int layer;  // edge goes from layer `layer` to `layer + 1`
  int u;
  int v;
  Provenance tag;
};

struct LayeredGraph {
  std::vector<int> layers;  // vertex count per layer
  std::vector<Edge> edges;

  int depth() const { return static_cast<int>(layers.size()); }
  int64_t vertex_count() const;
  // Global (zero-indexed) id of the first vertex of layer i.
  std::vector<int64_t> offsets() const;
  void add_edge(int layer, int u, int v, Provenance tag = {}) { edges.push_back({layer, u, v, tag}); }
  // Throws Error naming the first edge that leaves its layer range.
  void validate() const;
};

// Member of L_{w,d,b}: layers of w groups of b vertices, edges given as
// tuples (i, a1, a2, sigma) meaning (a1, j) -> (a2, sigma(j)).
struct GroupLayeredGraph {
  struct Tuple {
    int layer;
    int a1;
    int a2;
    Permutation sigma;
    Provenance tag;
  };
  int w = 0;
  int d = 0;
  int b = 0;
  std::vector<Tuple> tuples;
};

LayeredGraph basic(const Permutation& sigma, Provenance tag = {});
GroupLayeredGraph permute_groups(const Permutation& sigma, int b, Provenance tag = {});
// Vertex (a, j) of a group layer becomes a*b + j.
LayeredGraph expand(const GroupLayeredGraph& g);

// G1 o G2: G2's layers are traversed first, then an identity matching from
// Last(G2) to First(G1) truncated to the smaller layer.
LayeredGraph concat(const LayeredGraph& g1, const LayeredGraph& g2);
// parts[0] o parts[1] o ... o parts[n-1]. A finite `width` caps every joining
// matching at its first `width` vertices.
LayeredGraph concat_chain(const std::vector<LayeredGraph>& parts, int width = std::numeric_limits<int>::max());

// Replaces every tag (used when a whole gadget is attributed to one party).
void retag(LayeredGraph& g, Provenance tag);
void set_section(LayeredGraph& g, int section);

struct ExtractResult {
  bool ok = false;
  Permutation perm;
  int source = -1;  // offending source when !ok
  std::string error;
};

// Reachability from First_[m] to Last_[m]; ok iff every source reaches exactly
// one of the first m sinks and the resulting map is a bijection.
ExtractResult extract_permutation(const LayeredGraph& g, int m);

// True iff no vertex on a path from First_[m] to Last_[m] is shared by two
// sources.
bool paths_vertex_disjoint(const LayeredGraph& g, int m);

}  // namespace phlab
