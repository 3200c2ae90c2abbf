#pragma once

#include <cstdint>
#include <optional>

#include "phlab/block_graphs.hpp"
#include "phlab/hph.hpp"
#include "phlab/layered_graph.hpp"
#include "phlab/rs_graph.hpp"

namespace phlab {

struct GenParams {
  int m = 8;
  int b = 2;
  int k = 2;
  int p = 1;
  // Matchings of the default RS family: trivial_rs(rs_chunks * r, r), r = 2m/b.
  int rs_chunks = 2;
  // Group size used by the recursive gadgets; 0 means b.
  int inner_b = 0;
  // Top-level RS graph; inner levels always use the trivial family.
  std::optional<RSGraph> rs;
  int64_t max_vertices = 200'000'000;
};

// Throws Error with an actionable message when the parameters are inconsistent.
void validate(const GenParams& params);
RSGraph rs_for(const GenParams& params);
// Parameters of the gadgets hiding extend(sigma, b) one level down (size n_rs*b, pass p-1).
GenParams inner_params(const GenParams& params);

// p-pass block: the two group-permuting gadgets become samples of the (p-1)
// general generator on extend(sigma, b); p = 1 gives the plain block.
LayeredGraph p_block_sample(const RSGraph& rs, const PermMatrix& sigma, const EdgeTuple& e, int player,
                            const GenParams& params, Rng& rng);
LayeredGraph p_multi_block_sample(const RSGraph& rs, const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                                  const Hypermatching& M, const GenParams& params, Rng& rng);

// Graph for a fully specified Lex instance: p-multi-block o G_{p-1}(join gamma).
LayeredGraph gen_from_instance(const MultiHPHInstance& inst, const GenParams& params, Rng& rng);

struct SimpleSample {
  LayeredGraph graph;
  MultiHPHInstance instance;  // the hidden Lex instance (after swap conjugation)
  Permutation swap;           // identity for Lex partitions
};

SimpleSample gen_simple_detailed(const Permutation& rho, const Equipartition& P, const GenParams& params, Rng& rng);
LayeredGraph gen_simple(const Permutation& rho, const Equipartition& P, const GenParams& params, Rng& rng);
LayeredGraph gen_general(const Permutation& sigma, const GenParams& params, Rng& rng);

// Exact vertex count of any sample with these parameters.
int64_t vertex_count(const GenParams& params, bool general, bool lex_partition = true);

}  // namespace phlab
