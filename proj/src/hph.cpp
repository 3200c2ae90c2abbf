#include "phlab/hph.hpp"

#include <numeric>

#include "phlab/dist_sb.hpp"
#include "phlab/error.hpp"

namespace phlab {

PermVector recompute_gamma_star(const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                                const Hypermatching& M) {
  int k = static_cast<int>(sigmas.size());
  if (k < 1 || static_cast<int>(L.size()) != k || static_cast<int>(M.size()) != k)
    throw Error("gamma*: inconsistent dimensions");
  PermVector out;
  for (size_t a = 0; a < M[0].size(); ++a) {
    Permutation acc = sigmas[k - 1].at(L[k - 1]).at(M[k - 1][a]);
    for (int i = k - 2; i >= 0; --i) acc = compose(sigmas[i].at(L[i]).at(M[i][a]), acc);
    out.push_back(acc);
  }
  return out;
}

Hypermatching sample_hypermatching(int k, int r, Rng& rng) {
  if (k < 1 || r < 2 || r % 2 != 0) throw Error("hypermatching: need k >= 1 and a positive even r");
  Hypermatching M(k);
  for (auto& row : M) {
    std::vector<int> pool(r);
    std::iota(pool.begin(), pool.end(), 0);
    for (int a = 0; a < r / 2; ++a) {
      int j = a + static_cast<int>(rng.below(r - a));
      std::swap(pool[a], pool[j]);
      row.push_back(pool[a]);
    }
  }
  return M;
}

MultiHPHInstance make_instance(std::vector<PermMatrix> sigmas, std::vector<int> L, Hypermatching M,
                               PermVector target_yes, PermVector target_no, Answer answer) {
  MultiHPHInstance inst;
  inst.k = static_cast<int>(sigmas.size());
  if (inst.k < 1) throw Error("instance: need at least one player");
  inst.t = static_cast<int>(sigmas[0].size());
  inst.r = inst.t ? static_cast<int>(sigmas[0][0].size()) : 0;
  inst.b = perm_matrix_b(sigmas[0]);
  for (const auto& s : sigmas)
    if (static_cast<int>(s.size()) != inst.t || perm_matrix_b(s) != inst.b) throw Error("instance: matrices differ");
  if (static_cast<int>(L.size()) != inst.k) throw Error("instance: L must have k entries");
  for (int l : L)
    if (l < 0 || l >= inst.t) throw Error("instance: L entry out of range");
  check_hypermatching(M, inst.k, inst.r);
  if (static_cast<int>(target_yes.size()) != inst.r / 2 || static_cast<int>(target_no.size()) != inst.r / 2)
    throw Error("instance: targets must have r/2 entries");
  inst.sigmas = std::move(sigmas);
  inst.L = std::move(L);
  inst.M = std::move(M);
  inst.target_yes = std::move(target_yes);
  inst.target_no = std::move(target_no);
  inst.answer = answer;
  inst.gamma = compose(inverse(recompute_gamma_star(inst.sigmas, inst.L, inst.M)), inst.target());
  return inst;
}

MultiHPHInstance sample_instance(int r, int t, int b, int k, const PermVector& target_yes,
                                 const PermVector& target_no, Rng& rng) {
  if (r <= 0 || r % 2 != 0) throw Error("instance: r must be positive and even");
  if (t <= 0 || b <= 0 || k <= 0) throw Error("instance: dimensions must be positive");
  std::vector<PermMatrix> sigmas;
  for (int i = 0; i < k; ++i) sigmas.push_back(random_perm_matrix(t, r, b, rng));
  std::vector<int> L(k);
  for (int& l : L) l = static_cast<int>(rng.below(t));
  Hypermatching M = sample_hypermatching(k, r, rng);
  Answer ans = rng.coin() ? Answer::Yes : Answer::No;
  MultiHPHInstance inst = make_instance(std::move(sigmas), std::move(L), std::move(M), target_yes, target_no, ans);
  inst.seed = rng.seed();
  return inst;
}

Verdict referee_answer(const MultiHPHInstance& inst) {
  PermVector got = compose(recompute_gamma_star(inst.sigmas, inst.L, inst.M), inst.gamma);
  bool yes = got == inst.target_yes, no = got == inst.target_no;
  if (yes && no) return Verdict::Ambiguous;
  if (yes) return Verdict::Yes;
  if (no) return Verdict::No;
  throw Error("referee: gamma* o gamma matches neither target");
}

Answer zero_information_guess(const MultiHPHInstance& inst, Rng& rng) {
  // Each gamma*_a is a k-fold convolution of uniform laws on S_b, and the
  // entries are independent because every layer uses distinct indices.
  DistSb law = DistSb::uniform(inst.b);
  for (int i = 1; i < inst.k; ++i) law = convolve(law, DistSb::uniform(inst.b));
  double like_yes = 1.0, like_no = 1.0;
  for (size_t a = 0; a < inst.gamma.size(); ++a) {
    // gamma*_a must equal target_a o gamma_a^{-1}.
    like_yes *= law.at(compose(inst.target_yes[a], inverse(inst.gamma[a])));
    like_no *= law.at(compose(inst.target_no[a], inverse(inst.gamma[a])));
  }
  if (like_yes > like_no) return Answer::Yes;
  if (like_no > like_yes) return Answer::No;
  return rng.coin() ? Answer::Yes : Answer::No;
}

MultiHPHInstance lexicographic_referee(const MultiHPHInstance& inst) {
  MultiHPHInstance out = inst;
  out.L.assign(inst.k, 0);
  out.M.assign(inst.k, std::vector<int>(inst.r / 2));
  for (auto& row : out.M) std::iota(row.begin(), row.end(), 0);
  out.gamma.assign(inst.r / 2, Permutation::identity(inst.b));
  return out;
}

}  // namespace phlab
