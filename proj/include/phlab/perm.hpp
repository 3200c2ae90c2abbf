#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phlab/rng.hpp"

namespace phlab {

// A bijection on {0, ..., m-1}. Text formats and documentation are one-indexed;
// the in-memory image is zero-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int m);
  static Permutation from_one_indexed(const std::vector<int>& image);
  static Permutation random(int m, Rng& rng);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& image() const { return img_; }
  std::vector<int> one_indexed() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// (f o g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);

// Whitespace or comma separated one-line image list, e.g. "2 3 4 1".
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);
std::ostream& operator<<(std::ostream& out, const Permutation& p);

uint64_t factorial(int n);
uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(uint64_t rank, int m);

// Partition of [m] into m/b groups of exactly b elements. Groups keep the
// given order; elements inside a group are stored ascending.
struct Equipartition {
  int m = 0;
  int b = 0;
  std::vector<std::vector<int>> groups;

  Equipartition() = default;
  Equipartition(int m, int b, std::vector<std::vector<int>> groups);
  static Equipartition lex(int m, int b);

  bool is_lex() const;
  // group_of()[x] is the index of the group containing x.
  std::vector<int> group_of() const;
};

bool is_simple(const Permutation& sigma, const Equipartition& P);

using PermVector = std::vector<Permutation>;

PermVector vec(const Permutation& rho, int b);
Permutation join(const PermVector& gamma);
PermVector compose(const PermVector& f, const PermVector& g);
PermVector inverse(const PermVector& f);

// Lexicographically first permutation with sigma(u) = v for every (u, v).
Permutation match_aligned(const std::vector<std::pair<int, int>>& pairs, int m);
// sigma'((x)b + j) = sigma(x) b + j.
Permutation extend(const Permutation& sigma, int b);
// Relabeling carrying partition P onto Lex.
Permutation swap_perm(const Equipartition& P);

}  // namespace phlab
