#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phlab/perm.hpp"

namespace phlab {

// Dense distribution (or, after inverse_fourier, any real function) on S_b,
// indexed by Lehmer rank.
struct DistSb {
  int b = 0;
  std::vector<double> p;

  static DistSb uniform(int b);
  static DistSb point(const Permutation& sigma);
  // Validates nonnegativity and unit mass (1e-12).
  static DistSb from(int b, std::vector<double> probs);
  // Dirichlet(1, ..., 1) sample; full support almost surely.
  static DistSb random(int b, Rng& rng);
  // Even permutations get (1 + sqrt(eps))/b!, odd ones (1 - sqrt(eps))/b!.
  static DistSb parity(int b, double eps);

  double at(const Permutation& sigma) const { return p[lehmer_rank(sigma)]; }
  size_t size() const { return p.size(); }
};

double tvd(const DistSb& mu, const DistSb& nu);
// In nats; +infinity when supp(mu) is not inside supp(nu).
double kl(const DistSb& mu, const DistSb& nu);
double l2_sq(const DistSb& mu, const DistSb& nu);

struct PinskerReport {
  std::vector<int> A;  // ranks with mu > 2 nu
  std::vector<int> B;
  double kl = 0;
  double rhs = 0;          // (1 - ln 2)(sum_A |mu-nu| + sum_B (mu-nu)^2 / nu)
  double rhs_printed = 0;  // same with mu in the B denominator
  bool holds = false;
  bool holds_printed = false;
};

// Throws Error on a support violation.
PinskerReport strengthened_pinsker_check(const DistSb& mu, const DistSb& nu);

// (nu1 o nu2)(sigma) = sum_tau nu1(sigma o tau^-1) nu2(tau).
DistSb convolve(const DistSb& nu1, const DistSb& nu2);

struct DecayReport {
  std::vector<double> eps;  // b! * l2_sq(nu_i, U)
  double lhs = 0;           // b! * l2_sq(nu_1 o ... o nu_g, U)
  double bound = 0;         // prod eps
  bool holds = false;
};

DecayReport concat_decay_check(const std::vector<DistSb>& nus);

// Real orthogonal irreducible representations of S_b (Young's orthogonal
// form), one per partition of b.
struct IrrepSet {
  struct Irrep {
    std::vector<int> shape;
    int dim = 0;
    std::vector<Eigen::MatrixXd> mats;  // by Lehmer rank
  };
  int b = 0;
  std::vector<Irrep> irreps;
};

IrrepSet build_irreps(int b, int cap = 6);

using FourierCoeffs = std::vector<Eigen::MatrixXd>;

FourierCoeffs fourier(const DistSb& f, const IrrepSet& irreps);
DistSb inverse_fourier(const FourierCoeffs& coeffs, const IrrepSet& irreps);

struct NumericCheck {
  bool holds = false;
  double error = 0;  // largest absolute deviation observed
};

// max |rho(s o t) - rho(s) rho(t)| over all pairs and irreps.
NumericCheck homomorphism_check(const IrrepSet& irreps, double tol = 1e-9);
NumericCheck roundtrip_check(const DistSb& nu, const IrrepSet& irreps, double tol = 1e-9);
NumericCheck convolution_theorem_check(const DistSb& nu1, const DistSb& nu2, const IrrepSet& irreps,
                                       double tol = 1e-9);
NumericCheck plancherel_check(const DistSb& nu1, const DistSb& nu2, const IrrepSet& irreps, double tol = 1e-9);

}  // namespace phlab
