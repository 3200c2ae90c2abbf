#include "phlab/sorting_net.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "phlab/error.hpp"

namespace phlab {

namespace {

using Group = std::vector<int>;
using Layer = std::vector<Group>;
using Layers = std::vector<Layer>;

void zip_into(Layers& out, const Layers& part) {
  if (out.size() < part.size()) out.resize(part.size());
  for (size_t i = 0; i < part.size(); ++i) out[i].insert(out[i].end(), part[i].begin(), part[i].end());
}

// W holds c ascending runs of equal length; sorts it with c^2-sorters.
Layers merge_layers(const std::vector<int>& w, int c) {
  const int n = static_cast<int>(w.size());
  const int block = c * c;
  if (n <= block) return {{w}};
  Layers out;
  for (int j = 0; j < c; ++j) {
    std::vector<int> col;
    for (int i = j; i < n; i += c) col.push_back(w[i]);
    zip_into(out, merge_layers(col, c));
  }
  // Columns sorted leave at most c unsorted rows, i.e. one window of at most
  // c^2 consecutive positions. Three layers clean it up.
  Layer aligned, shifted;
  for (int k = 0; k < n; k += block) aligned.emplace_back(w.begin() + k, w.begin() + k + block);
  // Shifted blocks take the last ceil(c^2/2) cells of one aligned block and
  // the first floor(c^2/2) of the next.
  const int head = block / 2;
  for (int k = head; k + block <= n; k += block) shifted.emplace_back(w.begin() + k, w.begin() + k + block);
  out.push_back(aligned);
  out.push_back(shifted);
  out.push_back(aligned);
  return out;
}

Layers sort_layers(const std::vector<int>& w, int b, int c) {
  const int n = static_cast<int>(w.size());
  if (n <= b) return {{w}};
  Layers out;
  const int part = n / c;
  for (int k = 0; k < c; ++k) zip_into(out, sort_layers({w.begin() + k * part, w.begin() + (k + 1) * part}, b, c));
  Layers tail = merge_layers(w, c);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// Batcher's odd-even merge sort on n = 2^k wires. The stages that only sort
// aligned runs of length `run` are collapsed into one layer of run-sorters.
Layers batcher_layers(int n, int run) {
  Layers out;
  if (run > 1) {
    Layer first;
    for (int k = 0; k < n; k += run) {
      Group g(run);
      std::iota(g.begin(), g.end(), k);
      first.push_back(g);
    }
    out.push_back(first);
  }
  for (int p = run; p < n; p <<= 1) {
    for (int k = p; k >= 1; k >>= 1) {
      Layer layer;
      for (int j = k % p; j + k < n; j += 2 * k)
        for (int i = 0; i < k && i + j + k < n; ++i)
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) layer.push_back({i + j, i + j + k});
      out.push_back(layer);
    }
  }
  return out;
}

int power_at_least(int base, int m) {
  long long n = 1;
  while (n < m) n *= base;
  return static_cast<int>(n);
}

int isqrt(int b) {
  int c = 1;
  while ((c + 1) * (c + 1) <= b) ++c;
  return c;
}

}  // namespace

SorterNetwork build_merge_network(int m, int b) {
  if (b < 2) throw Error("merge network: b must be at least 2");
  if (power_at_least(b, m) != m || m < b) throw Error("merge network: m must be a power of b");
  SorterNetwork net;
  net.m = net.padded = m;
  net.width = b * b;
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 0);
  net.layers = merge_layers(w, b);
  return net;
}

SorterNetwork build_sort_network(int m, int b) {
  if (m < 1) throw Error("sort network: m must be positive");
  if (b < 2) throw Error("sort network: b must be at least 2");
  SorterNetwork net;
  net.m = m;
  net.width = b;
  if (m <= b) {
    net.padded = m;
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 0);
    if (m > 1) net.layers = {{w}};
    return net;
  }
  int c = isqrt(b);
  if (c < 3) {
    int run = 1;
    while (run * 2 <= b) run *= 2;
    net.padded = power_at_least(2, m);
    net.layers = batcher_layers(net.padded, std::min(run, net.padded));
    return net;
  }
  net.padded = power_at_least(c, m);
  std::vector<int> w(net.padded);
  std::iota(w.begin(), w.end(), 0);
  net.layers = sort_layers(w, b, c);
  return net;
}

std::vector<int> apply_network(const SorterNetwork& net, std::vector<int> values) {
  if (static_cast<int>(values.size()) != net.m) throw Error("apply_network: wrong input length");
  values.resize(net.padded, INT_MAX);
  std::vector<int> buf;
  for (const auto& layer : net.layers)
    for (const auto& g : layer) {
      buf.clear();
      for (int x : g) buf.push_back(values[x]);
      std::stable_sort(buf.begin(), buf.end());
      for (size_t i = 0; i < g.size(); ++i) values[g[i]] = buf[i];
    }
  values.resize(net.m);
  return values;
}

std::string dump_network(const SorterNetwork& net) {
  std::string out;
  for (const auto& layer : net.layers) {
    for (size_t g = 0; g < layer.size(); ++g) {
      if (g) out += ';';
      for (size_t i = 0; i < layer[g].size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(layer[g][i] + 1);
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

struct PackedLayer {
  Equipartition partition;
  std::vector<Group> items;  // sorters assigned to this equipartition
};

// Packs the sorters of one network layer (pruned to real wires) into exact
// equipartitions of [m]; spills into further equipartitions when one is not
// enough (only happens for b = 3).
std::vector<PackedLayer> pack_layer(const Layer& layer, int m, int b) {
  std::vector<Group> items;
  for (const auto& g : layer) {
    Group real;
    for (int x : g)
      if (x < m) real.push_back(x);
    if (real.size() > 1) items.push_back(real);
  }
  std::stable_sort(items.begin(), items.end(), [](const Group& a, const Group& b2) { return a.size() > b2.size(); });
  std::vector<PackedLayer> out;
  const int nbins = m / b;
  while (true) {
    std::vector<Group> bins;
    std::vector<int> room;
    std::vector<Group> assigned, spill;
    for (const auto& it : items) {
      int sz = static_cast<int>(it.size());
      int slot = -1;
      for (size_t k = 0; k < bins.size(); ++k)
        if (room[k] >= sz) {
          slot = static_cast<int>(k);
          break;
        }
      if (slot < 0 && static_cast<int>(bins.size()) < nbins) {
        bins.emplace_back();
        room.push_back(b);
        slot = static_cast<int>(bins.size()) - 1;
      }
      if (slot < 0) {
        spill.push_back(it);
        continue;
      }
      bins[slot].insert(bins[slot].end(), it.begin(), it.end());
      room[slot] -= sz;
      assigned.push_back(it);
    }
    std::vector<char> used(m, 0);
    for (const auto& bin : bins)
      for (int x : bin) used[x] = 1;
    int next = 0;
    auto take = [&]() {
      while (used[next]) ++next;
      used[next] = 1;
      return next;
    };
    for (size_t k = 0; k < bins.size(); ++k)
      while (room[k]-- > 0) bins[k].push_back(take());
    while (static_cast<int>(bins.size()) < nbins) {
      bins.emplace_back();
      for (int j = 0; j < b; ++j) bins.back().push_back(take());
    }
    out.push_back({Equipartition(m, b, bins), assigned});
    if (spill.empty()) break;
    items = spill;
  }
  return out;
}

Decomposition run_decompose(const Permutation& sigma, int b) {
  const int m = sigma.size();
  if (b < 2 || m % b != 0) throw Error("decompose: b must be at least 2 and divide m");
  SorterNetwork net = build_sort_network(m, b);
  std::vector<int> val(net.padded);
  for (int w = 0; w < net.padded; ++w) val[w] = w < m ? sigma(w) : w;
  std::vector<Equipartition> parts;
  std::vector<Permutation> pis;  // time order
  for (const auto& layer : net.layers) {
    std::vector<int> pi(net.padded);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> nval = val;
    for (const auto& g : layer) {
      std::vector<int> order(g.begin(), g.end());
      std::sort(order.begin(), order.end(), [&](int x, int y) { return val[x] < val[y]; });
      for (size_t i = 0; i < g.size(); ++i) {
        pi[order[i]] = g[i];
        nval[g[i]] = val[order[i]];
      }
    }
    for (int w = m; w < net.padded; ++w)
      if (pi[w] != w) throw Error("decompose: padding wire moved");
    val.swap(nval);
    for (auto& pl : pack_layer(layer, m, b)) {
      std::vector<int> img(m);
      std::iota(img.begin(), img.end(), 0);
      for (const auto& it : pl.items)
        for (int x : it) img[x] = pi[x];
      parts.push_back(std::move(pl.partition));
      pis.emplace_back(std::move(img));
    }
  }
  for (int w = 0; w < m; ++w)
    if (val[w] != w) throw Error("decompose: network failed to sort");
  Decomposition d;
  d.partitions.assign(parts.rbegin(), parts.rend());
  d.gammas.assign(pis.rbegin(), pis.rend());
  return d;
}

}  // namespace

Decomposition decompose(const Permutation& sigma, int b) { return run_decompose(sigma, b); }

Permutation recompose(const Decomposition& d) {
  if (d.gammas.empty()) throw Error("recompose: empty decomposition");
  Permutation acc = d.gammas.back();
  for (size_t i = d.gammas.size() - 1; i-- > 0;) acc = compose(d.gammas[i], acc);
  return acc;
}

std::vector<Equipartition> decomposition_partitions(int m, int b) {
  return run_decompose(Permutation::identity(m), b).partitions;
}

}  // namespace phlab
