#pragma once

#include <string>
#include <vector>

#include "phlab/perm.hpp"

namespace phlab {

// Wires 0..padded-1; wires >= m are padding that carry +infinity. Each layer
// lists its sorters as ascending wire lists; idle wires are omitted. A sorter
// writes its values back in ascending order of wire index.
struct SorterNetwork {
  int m = 0;
  int padded = 0;
  int width = 0;  // largest sorter allowed
  std::vector<std::vector<std::vector<int>>> layers;

  int depth() const { return static_cast<int>(layers.size()); }
};

// Merges b ascending runs of length m/b with b^2-sorters; m must be a power of b.
SorterNetwork build_merge_network(int m, int b);
// Sorts [m] with b-sorters (padded to a power of the merge arity).
SorterNetwork build_sort_network(int m, int b);

// Runs the network; ties keep their relative order.
std::vector<int> apply_network(const SorterNetwork& net, std::vector<int> values);

// One line per layer, sorters separated by ';', one-indexed wires.
std::string dump_network(const SorterNetwork& net);

struct Decomposition {
  std::vector<Equipartition> partitions;
  std::vector<Permutation> gammas;  // gammas[i] is simple on partitions[i]
};

// sigma = gammas[0] o gammas[1] o ... o gammas[d-1]. Requires b | m.
Decomposition decompose(const Permutation& sigma, int b);
Permutation recompose(const Decomposition& d);
// The partitions used by decompose for size m; they do not depend on sigma.
std::vector<Equipartition> decomposition_partitions(int m, int b);

}  // namespace phlab
