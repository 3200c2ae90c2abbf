#include "phlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "phlab/error.hpp"

namespace phlab {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) throw Error("not a permutation image");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::from_one_indexed(const std::vector<int>& image) {
  std::vector<int> img(image.size());
  for (size_t i = 0; i < image.size(); ++i) img[i] = image[i] - 1;
  return Permutation(std::move(img));
}

Permutation Permutation::random(int m, Rng& rng) {
  Permutation p = identity(m);
  rng.shuffle(p.img_);
  return p;
}

std::vector<int> Permutation::one_indexed() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw Error("compose: domain size mismatch");
  std::vector<int> h(f.size());
  for (int x = 0; x < f.size(); ++x) h[x] = f(g(x));
  return Permutation(std::move(h));
}

Permutation inverse(const Permutation& f) {
  std::vector<int> h(f.size());
  for (int x = 0; x < f.size(); ++x) h[f(x)] = x;
  return Permutation(std::move(h));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> img;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error("permutation: bad token '" + tok + "'");
    }
    if (pos != tok.size()) throw Error("permutation: bad token '" + tok + "'");
    img.push_back(v);
  }
  if (img.empty()) throw Error("permutation: empty image list");
  return Permutation::from_one_indexed(img);
}

std::ostream& operator<<(std::ostream& out, const Permutation& p) { return out << '(' << to_string(p) << ')'; }

uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error("factorial: out of range");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t lehmer_rank(const Permutation& p) {
  int m = p.size();
  uint64_t rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (p(j) < p(i)) ++smaller;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

Permutation lehmer_unrank(uint64_t rank, int m) {
  if (rank >= factorial(m)) throw Error("lehmer_unrank: rank out of range");
  std::vector<int> digits(m);
  for (int i = m - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(rank % (m - i));
    rank /= (m - i);
  }
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) {
    img[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(img));
}

Equipartition::Equipartition(int m_, int b_, std::vector<std::vector<int>> groups_)
    : m(m_), b(b_), groups(std::move(groups_)) {
  if (b <= 0 || m <= 0 || m % b != 0) throw Error("equipartition: b must divide m");
  if (static_cast<int>(groups.size()) != m / b) throw Error("equipartition: wrong group count");
  std::vector<char> seen(m, 0);
  for (auto& g : groups) {
    if (static_cast<int>(g.size()) != b) throw Error("equipartition: group size differs from b");
    std::sort(g.begin(), g.end());
    for (int x : g) {
      if (x < 0 || x >= m || seen[x]) throw Error("equipartition: groups do not cover [m] exactly");
      seen[x] = 1;
    }
  }
}

Equipartition Equipartition::lex(int m, int b) {
  if (b <= 0 || m % b != 0) throw Error("equipartition: b must divide m");
  std::vector<std::vector<int>> groups(m / b);
  for (int x = 0; x < m; ++x) groups[x / b].push_back(x);
  return Equipartition(m, b, std::move(groups));
}

bool Equipartition::is_lex() const {
  for (size_t g = 0; g < groups.size(); ++g)
    for (int j = 0; j < b; ++j)
      if (groups[g][j] != static_cast<int>(g) * b + j) return false;
  return true;
}

std::vector<int> Equipartition::group_of() const {
  std::vector<int> out(m, -1);
  for (size_t g = 0; g < groups.size(); ++g)
    for (int x : groups[g]) out[x] = static_cast<int>(g);
  return out;
}

bool is_simple(const Permutation& sigma, const Equipartition& P) {
  if (sigma.size() != P.m) throw Error("is_simple: size mismatch");
  auto g = P.group_of();
  for (int x = 0; x < sigma.size(); ++x)
    if (g[sigma(x)] != g[x]) return false;
  return true;
}

PermVector vec(const Permutation& rho, int b) {
  if (b <= 0 || rho.size() % b != 0) throw Error("vec: b must divide m");
  if (!is_simple(rho, Equipartition::lex(rho.size(), b))) throw Error("vec: permutation is not Lex-simple");
  PermVector out;
  for (int i = 0; i < rho.size() / b; ++i) {
    std::vector<int> img(b);
    for (int j = 0; j < b; ++j) img[j] = rho(i * b + j) - i * b;
    out.emplace_back(std::move(img));
  }
  return out;
}

Permutation join(const PermVector& gamma) {
  if (gamma.empty()) throw Error("join: empty vector");
  int b = gamma[0].size();
  std::vector<int> img;
  img.reserve(gamma.size() * b);
  for (size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i].size() != b) throw Error("join: entries differ in size");
    for (int j = 0; j < b; ++j) img.push_back(static_cast<int>(i) * b + gamma[i](j));
  }
  return Permutation(std::move(img));
}

PermVector compose(const PermVector& f, const PermVector& g) {
  if (f.size() != g.size()) throw Error("compose: vector length mismatch");
  PermVector out;
  for (size_t i = 0; i < f.size(); ++i) out.push_back(compose(f[i], g[i]));
  return out;
}

PermVector inverse(const PermVector& f) {
  PermVector out;
  for (const auto& p : f) out.push_back(inverse(p));
  return out;
}

Permutation match_aligned(const std::vector<std::pair<int, int>>& pairs, int m) {
  std::vector<int> img(m, -1);
  std::vector<char> used(m, 0);
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= m || v < 0 || v >= m) throw Error("match_aligned: index out of range");
    if (img[u] != -1 || used[v]) throw Error("match_aligned: pairs are not an injection");
    img[u] = v;
    used[v] = 1;
  }
  int next = 0;
  for (int u = 0; u < m; ++u) {
    if (img[u] != -1) continue;
    while (used[next]) ++next;
    img[u] = next;
    used[next] = 1;
  }
  return Permutation(std::move(img));
}

Permutation extend(const Permutation& sigma, int b) {
  std::vector<int> img(sigma.size() * b);
  for (int x = 0; x < sigma.size(); ++x)
    for (int j = 0; j < b; ++j) img[x * b + j] = sigma(x) * b + j;
  return Permutation(std::move(img));
}

Permutation swap_perm(const Equipartition& P) {
  std::vector<int> img(P.m);
  for (size_t g = 0; g < P.groups.size(); ++g)
    for (int j = 0; j < P.b; ++j) img[P.groups[g][j]] = static_cast<int>(g) * P.b + j;
  return Permutation(std::move(img));
}

}  // namespace phlab
