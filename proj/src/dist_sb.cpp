#include "phlab/dist_sb.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "phlab/error.hpp"

namespace phlab {

namespace {

constexpr int kMaxB = 8;

void check_b(int b) {
  if (b < 1 || b > kMaxB) throw Error("S_b distributions support 1 <= b <= 8");
}

void same_b(const DistSb& a, const DistSb& c) {
  if (a.b != c.b || a.p.size() != c.p.size()) throw Error("distributions over different S_b");
}

bool is_even(const Permutation& s) {
  int inv = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (s(j) < s(i)) ++inv;
  return inv % 2 == 0;
}

// All permutations of [b] by rank, computed once per call site.
std::vector<Permutation> all_perms(int b) {
  std::vector<Permutation> out;
  uint64_t n = factorial(b);
  out.reserve(n);
  for (uint64_t r = 0; r < n; ++r) out.push_back(lehmer_unrank(r, b));
  return out;
}

}  // namespace

DistSb DistSb::uniform(int b) {
  check_b(b);
  size_t n = factorial(b);
  return {b, std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

DistSb DistSb::point(const Permutation& sigma) {
  check_b(sigma.size());
  DistSb d{sigma.size(), std::vector<double>(factorial(sigma.size()), 0.0)};
  d.p[lehmer_rank(sigma)] = 1.0;
  return d;
}

DistSb DistSb::from(int b, std::vector<double> probs) {
  check_b(b);
  if (probs.size() != factorial(b)) throw Error("distribution must have b! entries");
  double s = 0;
  for (double x : probs) {
    if (!(x >= 0)) throw Error("distribution has a negative entry");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-12) throw Error("distribution does not sum to 1");
  return {b, std::move(probs)};
}

DistSb DistSb::random(int b, Rng& rng) {
  check_b(b);
  std::vector<double> w(factorial(b));
  double s = 0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    s += x;
  }
  for (double& x : w) x /= s;
  return {b, std::move(w)};
}

DistSb DistSb::parity(int b, double eps) {
  check_b(b);
  if (b < 2 || eps < 0 || eps > 1) throw Error("parity family needs b >= 2 and 0 <= eps <= 1");
  double n = static_cast<double>(factorial(b)), s = std::sqrt(eps);
  DistSb d{b, std::vector<double>(factorial(b))};
  for (size_t r = 0; r < d.p.size(); ++r) d.p[r] = (is_even(lehmer_unrank(r, b)) ? 1 + s : 1 - s) / n;
  return d;
}

double tvd(const DistSb& mu, const DistSb& nu) {
  same_b(mu, nu);
  double s = 0;
  for (size_t i = 0; i < mu.p.size(); ++i) s += std::abs(mu.p[i] - nu.p[i]);
  return s / 2;
}

double kl(const DistSb& mu, const DistSb& nu) {
  same_b(mu, nu);
  double s = 0;
  for (size_t i = 0; i < mu.p.size(); ++i) {
    if (mu.p[i] == 0) continue;
    if (nu.p[i] == 0) return std::numeric_limits<double>::infinity();
    s += mu.p[i] * std::log(mu.p[i] / nu.p[i]);
  }
  return s;
}

double l2_sq(const DistSb& mu, const DistSb& nu) {
  same_b(mu, nu);
  double s = 0;
  for (size_t i = 0; i < mu.p.size(); ++i) s += (mu.p[i] - nu.p[i]) * (mu.p[i] - nu.p[i]);
  return s;
}

PinskerReport strengthened_pinsker_check(const DistSb& mu, const DistSb& nu) {
  PinskerReport rep;
  rep.kl = kl(mu, nu);
  if (std::isinf(rep.kl)) throw Error("strengthened Pinsker: supp(mu) not inside supp(nu)");
  const double c = 1 - std::log(2.0);
  double a_sum = 0, b_nu = 0, b_mu = 0;
  bool b_mu_inf = false;
  for (size_t i = 0; i < mu.p.size(); ++i) {
    double d = mu.p[i] - nu.p[i];
    if (mu.p[i] > 2 * nu.p[i]) {
      rep.A.push_back(static_cast<int>(i));
      a_sum += std::abs(d);
    } else {
      rep.B.push_back(static_cast<int>(i));
      if (nu.p[i] > 0) b_nu += d * d / nu.p[i];
      if (mu.p[i] > 0)
        b_mu += d * d / mu.p[i];
      else if (d != 0)
        b_mu_inf = true;
    }
  }
  rep.rhs = c * (a_sum + b_nu);
  rep.rhs_printed = b_mu_inf ? std::numeric_limits<double>::infinity() : c * (a_sum + b_mu);
  rep.holds = rep.kl >= rep.rhs - 1e-12;
  rep.holds_printed = rep.kl >= rep.rhs_printed - 1e-12;
  return rep;
}

DistSb convolve(const DistSb& nu1, const DistSb& nu2) {
  same_b(nu1, nu2);
  auto perms = all_perms(nu1.b);
  DistSb out{nu1.b, std::vector<double>(perms.size(), 0.0)};
  // Sum over (s1, s2) of nu1(s1) nu2(s2) into s1 o s2.
  for (size_t i = 0; i < perms.size(); ++i) {
    if (nu1.p[i] == 0) continue;
    for (size_t j = 0; j < perms.size(); ++j) {
      if (nu2.p[j] == 0) continue;
      out.p[lehmer_rank(compose(perms[i], perms[j]))] += nu1.p[i] * nu2.p[j];
    }
  }
  return out;
}

DecayReport concat_decay_check(const std::vector<DistSb>& nus) {
  if (nus.empty()) throw Error("decay check: empty tuple");
  DecayReport rep;
  DistSb u = DistSb::uniform(nus[0].b);
  double n = static_cast<double>(u.p.size());
  rep.bound = 1;
  DistSb acc = nus[0];
  for (size_t i = 0; i < nus.size(); ++i) {
    same_b(nus[i], u);
    rep.eps.push_back(n * l2_sq(nus[i], u));
    rep.bound *= rep.eps.back();
    if (i) acc = convolve(acc, nus[i]);
  }
  rep.lhs = n * l2_sq(acc, u);
  rep.holds = rep.lhs <= rep.bound + 1e-12;
  return rep;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_of(n - k, k, cur, out);
    cur.pop_back();
  }
}

// A standard tableau stored as (row, col) of each entry 0..b-1.
using Tableau = std::vector<std::pair<int, int>>;

void tableaux_of(const std::vector<int>& shape, std::vector<int>& fill, Tableau& cur, int next, int b,
                 std::vector<Tableau>& out) {
  if (next == b) {
    out.push_back(cur);
    return;
  }
  for (size_t row = 0; row < shape.size(); ++row) {
    bool room = fill[row] < shape[row];
    bool supported = row == 0 || fill[row - 1] > fill[row];
    if (!room || !supported) continue;
    cur[next] = {static_cast<int>(row), fill[row]};
    ++fill[row];
    tableaux_of(shape, fill, cur, next + 1, b, out);
    --fill[row];
  }
}

}  // namespace

IrrepSet build_irreps(int b, int cap) {
  if (b < 1 || b > cap || b > kMaxB) throw Error("irreps: b exceeds the configured cap");
  IrrepSet set;
  set.b = b;
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  partitions_of(b, b, cur, shapes);
  auto perms = all_perms(b);
  for (const auto& shape : shapes) {
    std::vector<Tableau> tabs;
    std::vector<int> fill(shape.size(), 0);
    Tableau t(b);
    tableaux_of(shape, fill, t, 0, b, tabs);
    std::map<Tableau, int> index;
    for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(tabs.size());
    // Adjacent transpositions (i, i+1).
    std::vector<Eigen::MatrixXd> gen(std::max(0, b - 1), Eigen::MatrixXd::Zero(dim, dim));
    for (int i = 0; i + 1 < b; ++i) {
      for (int ti = 0; ti < dim; ++ti) {
        const Tableau& tab = tabs[ti];
        int ci = tab[i].second - tab[i].first, cj = tab[i + 1].second - tab[i + 1].first;
        double d = cj - ci;
        gen[i](ti, ti) = 1.0 / d;
        if (std::abs(d) > 1) {
          Tableau sw = tab;
          std::swap(sw[i], sw[i + 1]);
          gen[i](index.at(sw), ti) = std::sqrt(1.0 - 1.0 / (d * d));
        }
      }
    }
    IrrepSet::Irrep ir;
    ir.shape = shape;
    ir.dim = dim;
    ir.mats.assign(perms.size(), Eigen::MatrixXd());
    // Breadth-first over words: rho(s_i o tau) = rho(s_i) rho(tau).
    std::vector<uint64_t> queue{lehmer_rank(Permutation::identity(b))};
    ir.mats[queue[0]] = Eigen::MatrixXd::Identity(dim, dim);
    for (size_t q = 0; q < queue.size(); ++q) {
      const Permutation& tau = perms[queue[q]];
      for (int i = 0; i + 1 < b; ++i) {
        std::vector<int> img(b);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[i], img[i + 1]);
        uint64_t r = lehmer_rank(compose(Permutation(img), tau));
        if (ir.mats[r].size() != 0) continue;
        ir.mats[r] = gen[i] * ir.mats[queue[q]];
        queue.push_back(r);
      }
    }
    set.irreps.push_back(std::move(ir));
  }
  return set;
}

FourierCoeffs fourier(const DistSb& f, const IrrepSet& irreps) {
  if (f.b != irreps.b) throw Error("fourier: b mismatch");
  FourierCoeffs out;
  for (const auto& ir : irreps.irreps) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(ir.dim, ir.dim);
    for (size_t r = 0; r < f.p.size(); ++r) c += f.p[r] * ir.mats[r];
    out.push_back(c);
  }
  return out;
}

DistSb inverse_fourier(const FourierCoeffs& coeffs, const IrrepSet& irreps) {
  if (coeffs.size() != irreps.irreps.size()) throw Error("inverse_fourier: coefficient count mismatch");
  size_t n = factorial(irreps.b);
  DistSb out{irreps.b, std::vector<double>(n, 0.0)};
  for (size_t r = 0; r < n; ++r) {
    double s = 0;
    for (size_t k = 0; k < coeffs.size(); ++k)
      s += irreps.irreps[k].dim * (coeffs[k].transpose() * irreps.irreps[k].mats[r]).trace();
    out.p[r] = s / static_cast<double>(n);
  }
  return out;
}

NumericCheck homomorphism_check(const IrrepSet& irreps, double tol) {
  auto perms = all_perms(irreps.b);
  NumericCheck c;
  for (const auto& ir : irreps.irreps)
    for (size_t i = 0; i < perms.size(); ++i)
      for (size_t j = 0; j < perms.size(); ++j) {
        uint64_t r = lehmer_rank(compose(perms[i], perms[j]));
        c.error = std::max(c.error, (ir.mats[r] - ir.mats[i] * ir.mats[j]).cwiseAbs().maxCoeff());
      }
  c.holds = c.error <= tol;
  return c;
}

NumericCheck roundtrip_check(const DistSb& nu, const IrrepSet& irreps, double tol) {
  DistSb back = inverse_fourier(fourier(nu, irreps), irreps);
  NumericCheck c;
  for (size_t r = 0; r < nu.p.size(); ++r) c.error = std::max(c.error, std::abs(back.p[r] - nu.p[r]));
  c.holds = c.error <= tol;
  return c;
}

NumericCheck convolution_theorem_check(const DistSb& nu1, const DistSb& nu2, const IrrepSet& irreps, double tol) {
  FourierCoeffs f1 = fourier(nu1, irreps), f2 = fourier(nu2, irreps), f12 = fourier(convolve(nu1, nu2), irreps);
  NumericCheck c;
  for (size_t k = 0; k < f1.size(); ++k) c.error = std::max(c.error, (f12[k] - f1[k] * f2[k]).cwiseAbs().maxCoeff());
  c.holds = c.error <= tol;
  return c;
}

NumericCheck plancherel_check(const DistSb& nu1, const DistSb& nu2, const IrrepSet& irreps, double tol) {
  same_b(nu1, nu2);
  FourierCoeffs f1 = fourier(nu1, irreps), f2 = fourier(nu2, irreps);
  double rhs = 0;
  for (size_t k = 0; k < f1.size(); ++k) rhs += irreps.irreps[k].dim * (f1[k] - f2[k]).squaredNorm();
  rhs /= static_cast<double>(nu1.p.size());
  NumericCheck c;
  c.error = std::abs(l2_sq(nu1, nu2) - rhs);
  c.holds = c.error <= tol;
  return c;
}

}  // namespace phlab
