#include "phlab/hiding_gen.hpp"

#include "phlab/error.hpp"
#include "phlab/sorting_net.hpp"

namespace phlab {

void validate(const GenParams& params) {
  const auto& q = params;
  if (q.m < 1 || q.b < 2 || q.k < 1 || q.p < 1) throw Error("parameters: need m >= 1, b >= 2, k >= 1, p >= 1");
  if (q.m % q.b != 0) throw Error("parameters: b must divide m (got m=" + std::to_string(q.m) +
                                  ", b=" + std::to_string(q.b) + ")");
  if (q.rs_chunks < 1) throw Error("parameters: rs_chunks must be positive");
  if (q.inner_b < 0) throw Error("parameters: inner_b must be nonnegative");
  if (q.rs) {
    if (q.rs->r != 2 * q.m / q.b)
      throw Error("parameters: RS graph must have r = 2m/b = " + std::to_string(2 * q.m / q.b));
    RSReport rep = validate_rs(*q.rs);
    if (!rep.ok) throw Error("parameters: RS graph invalid: " + rep.message);
  }
}

RSGraph rs_for(const GenParams& params) {
  if (params.rs) return *params.rs;
  int r = 2 * params.m / params.b;
  return trivial_rs(params.rs_chunks * r, r);
}

GenParams inner_params(const GenParams& params) {
  GenParams in = params;
  in.m = rs_for(params).n_rs * params.b;
  in.b = params.inner_b ? params.inner_b : params.b;
  in.p = params.p - 1;
  in.rs.reset();
  if (in.m % in.b != 0) throw Error("parameters: inner group size must divide n_rs*b");
  return in;
}

namespace {

const Provenance kReferee{Party::Referee, 0, 0};
const Provenance kFixed{Party::Fixed, 0, 0};

// Referee-side gadget hiding `sigma` at pass budget q; q = 0 is the base gadget.
LayeredGraph referee_gadget(const Permutation& sigma, int q, const GenParams& at, Rng& rng) {
  LayeredGraph g;
  if (q == 0) {
    g = basic(sigma);
  } else {
    GenParams pr = at;
    pr.p = q;
    g = gen_general(sigma, pr, rng);
  }
  retag(g, kReferee);
  return g;
}

int64_t count_general(const GenParams& params);

int64_t count_simple(const GenParams& params, bool lex) {
  RSGraph rs = rs_for(params);
  int64_t nb = static_cast<int64_t>(rs.n_rs) * params.b;
  int64_t wrap = lex ? 0 : 4 * static_cast<int64_t>(params.m);
  if (params.p == 1) return 6 * params.k * nb + 2 * params.m + wrap;
  GenParams in = inner_params(params);
  GenParams gam = params;
  gam.p = params.p - 1;
  gam.rs.reset();
  return 2 * params.k * (nb + count_general(in)) + count_general(gam) + wrap;
}

int64_t count_general(const GenParams& params) {
  int64_t n = 0;
  for (const auto& P : decomposition_partitions(params.m, params.b)) n += count_simple(params, P.is_lex());
  return n;
}

void check_budget(const GenParams& params, bool general, bool lex) {
  int64_t n = vertex_count(params, general, lex);
  if (n > params.max_vertices)
    throw Error("recursion budget exceeded: " + std::to_string(n) + " vertices > max_vertices " +
                std::to_string(params.max_vertices));
}

}  // namespace

int64_t vertex_count(const GenParams& params, bool general, bool lex_partition) {
  validate(params);
  return general ? count_general(params) : count_simple(params, lex_partition);
}

LayeredGraph p_block_sample(const RSGraph& rs, const PermMatrix& sigma, const EdgeTuple& e, int player,
                            const GenParams& params, Rng& rng) {
  if (params.p < 1) throw Error("p-pass block: p must be at least 1");
  if (params.p == 1) return block(rs, sigma, e, player);
  int b = perm_matrix_b(sigma);
  auto [sl, sr] = edge_pick(rs, e);
  GenParams in = params;
  in.m = rs.n_rs * b;
  in.b = params.inner_b ? params.inner_b : b;
  in.rs.reset();
  Rng rl = rng.split("left"), rr = rng.split("right");
  LayeredGraph gl = referee_gadget(extend(sl, b), params.p - 1, in, rl);
  LayeredGraph gr = referee_gadget(extend(sr, b), params.p - 1, in, rr);
  return concat_chain({gr, expand(encoded_rs(rs, sigma, {Party::Player, player, 0})), gl});
}

LayeredGraph p_multi_block_sample(const RSGraph& rs, const std::vector<PermMatrix>& sigmas, const std::vector<int>& L,
                                  const Hypermatching& M, const GenParams& params, Rng& rng) {
  int k = static_cast<int>(sigmas.size());
  if (k < 1 || static_cast<int>(L.size()) != k) throw Error("multi-block: need k matrices and k indices");
  check_hypermatching(M, k, rs.r);
  std::vector<LayeredGraph> blocks;
  for (int i = 0; i < k; ++i) {
    Rng sub = rng.split(static_cast<uint64_t>(i));
    blocks.push_back(p_block_sample(rs, sigmas[i], {L[i], M[i]}, i + 1, params, sub));
  }
  return concat_chain(blocks, rs.r / 2 * perm_matrix_b(sigmas[0]));
}

LayeredGraph gen_from_instance(const MultiHPHInstance& inst, const GenParams& params, Rng& rng) {
  RSGraph rs = rs_for(params);
  if (inst.r != rs.r || inst.t != rs.t || inst.b != params.b) throw Error("instance does not fit the parameters");
  Rng rm = rng.split("multi-block"), rg = rng.split("gamma");
  LayeredGraph multi = p_multi_block_sample(rs, inst.sigmas, inst.L, inst.M, params, rm);
  GenParams gp = params;
  gp.rs.reset();
  LayeredGraph gadget = referee_gadget(join(inst.gamma), params.p - 1, gp, rg);
  return concat(multi, gadget);
}

SimpleSample gen_simple_detailed(const Permutation& rho, const Equipartition& P, const GenParams& params, Rng& rng) {
  validate(params);
  if (rho.size() != params.m || P.m != params.m || P.b != params.b)
    throw Error("gen_simple: permutation and partition must match m and b");
  if (!is_simple(rho, P)) throw Error("gen_simple: permutation is not simple on the partition");
  SimpleSample out;
  if (!P.is_lex()) {
    out.swap = swap_perm(P);
    Permutation inner = compose(out.swap, compose(rho, inverse(out.swap)));
    SimpleSample core = gen_simple_detailed(inner, Equipartition::lex(params.m, params.b), params, rng);
    out.instance = std::move(core.instance);
    out.graph = concat_chain({basic(inverse(out.swap), kFixed), core.graph, basic(out.swap, kFixed)});
    return out;
  }
  out.swap = Permutation::identity(params.m);
  RSGraph rs = rs_for(params);
  PermVector target = vec(rho, params.b);
  Rng ri = rng.split("instance");
  std::vector<PermMatrix> sigmas;
  for (int i = 0; i < params.k; ++i) sigmas.push_back(random_perm_matrix(rs.t, rs.r, params.b, ri));
  std::vector<int> L(params.k);
  for (int& l : L) l = static_cast<int>(ri.below(rs.t));
  Hypermatching M = sample_hypermatching(params.k, rs.r, ri);
  out.instance = make_instance(std::move(sigmas), std::move(L), std::move(M), target, target, Answer::Yes);
  out.instance.seed = rng.seed();
  Rng rg = rng.split("graph");
  out.graph = gen_from_instance(out.instance, params, rg);
  return out;
}

LayeredGraph gen_simple(const Permutation& rho, const Equipartition& P, const GenParams& params, Rng& rng) {
  check_budget(params, false, P.is_lex());
  return gen_simple_detailed(rho, P, params, rng).graph;
}

LayeredGraph gen_general(const Permutation& sigma, const GenParams& params, Rng& rng) {
  validate(params);
  if (sigma.size() != params.m) throw Error("gen_general: permutation size differs from m");
  check_budget(params, true, true);
  Decomposition d = decompose(sigma, params.b);
  std::vector<LayeredGraph> parts;
  for (size_t i = 0; i < d.gammas.size(); ++i) {
    Rng sub = rng.split(static_cast<uint64_t>(i));
    LayeredGraph g = gen_simple_detailed(d.gammas[i], d.partitions[i], params, sub).graph;
    set_section(g, static_cast<int>(i) + 1);
    parts.push_back(std::move(g));
  }
  return concat_chain(parts);
}

}  // namespace phlab
