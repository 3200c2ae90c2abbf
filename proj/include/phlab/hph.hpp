#pragma once

#include <cstdint>
#include <vector>

#include "phlab/block_graphs.hpp"
#include "phlab/perm.hpp"

namespace phlab {

enum class Answer { Yes, No };
enum class Verdict { Yes, No, Ambiguous };

struct MultiHPHInstance {
  int r = 0, t = 0, b = 0, k = 0;
  std::vector<PermMatrix> sigmas;  // one t x r matrix per player
  std::vector<int> L;              // matching index per player, in [t]
  Hypermatching M;                 // k x r/2
  PermVector gamma;                // referee's shift vector, length r/2
  PermVector target_yes;
  PermVector target_no;
  Answer answer = Answer::Yes;
  uint64_t seed = 0;

  const PermVector& target() const { return answer == Answer::Yes ? target_yes : target_no; }
};

// gamma*_a = sigma^(1)_{L1, M_{1,a}} o ... o sigma^(k)_{Lk, M_{k,a}}.
PermVector recompute_gamma_star(const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                                const Hypermatching& M);

// k rows of r/2 distinct indices, each row a partial Fisher-Yates shuffle of [r].
Hypermatching sample_hypermatching(int k, int r, Rng& rng);

MultiHPHInstance sample_instance(int r, int t, int b, int k, const PermVector& target_yes,
                                 const PermVector& target_no, Rng& rng);
// Builds an instance from explicit inputs, forcing gamma from the answer.
MultiHPHInstance make_instance(std::vector<PermMatrix> sigmas, std::vector<int> L, Hypermatching M,
                               PermVector target_yes, PermVector target_no, Answer answer);

// Full-information referee. Throws Error when gamma* o gamma matches neither target.
Verdict referee_answer(const MultiHPHInstance& inst);

// Referee holding only (L, M, gamma): compares the exact likelihoods of gamma
// under both answers, breaking ties with `rng`.
Answer zero_information_guess(const MultiHPHInstance& inst, Rng& rng);

// The lexicographically first referee input: L = all first matchings,
// M_{i,a} = a, gamma = identities.
MultiHPHInstance lexicographic_referee(const MultiHPHInstance& inst);

}  // namespace phlab
