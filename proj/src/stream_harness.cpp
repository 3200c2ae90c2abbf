#include "phlab/stream_harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "phlab/error.hpp"

namespace phlab {

namespace {

auto party_key(const Provenance& p) {
  return std::make_tuple(static_cast<int>(p.party), p.section, p.player);
}

}  // namespace

EdgeStream stream_of(const LayeredGraph& g) {
  g.validate();
  EdgeStream s;
  s.n = g.vertex_count();
  s.directed = true;
  s.tagged = true;
  auto off = g.offsets();
  std::vector<const Edge*> order;
  order.reserve(g.edges.size());
  for (const Edge& e : g.edges) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(), [](const Edge* a, const Edge* b) {
    return std::make_tuple(a->layer, party_key(a->tag), a->u, a->v) <
           std::make_tuple(b->layer, party_key(b->tag), b->u, b->v);
  });
  s.edges.reserve(order.size());
  for (const Edge* e : order)
    s.edges.push_back({static_cast<int>(off[e->layer] + e->u), static_cast<int>(off[e->layer + 1] + e->v), e->tag});
  return s;
}

EdgeStream stream_of(const BipartiteInstance& inst) {
  EdgeStream s;
  s.n = inst.n_left() + inst.n_right();
  s.directed = false;
  s.tagged = true;
  s.edges.reserve(inst.edges.size());
  for (const auto& e : inst.edges) s.edges.push_back({e.u, inst.n_left() + e.v, e.tag});
  return s;
}

void shuffle_stream(EdgeStream& s, uint64_t seed) {
  Rng rng(seed);
  rng.shuffle(s.edges);
}

void write_stream(std::ostream& out, const EdgeStream& s) {
  out << "PHSTREAM v1\n" << s.n << ' ' << s.edges.size() << ' ' << (s.directed ? 1 : 0) << '\n';
  for (const auto& e : s.edges) {
    out << e.u + 1 << ' ' << e.v + 1;
    if (s.tagged) out << ' ' << to_string(e.tag);
    out << '\n';
  }
}

EdgeStream read_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "PHSTREAM v1") throw Error("stream: missing 'PHSTREAM v1' header");
  EdgeStream s;
  int64_t count = 0;
  int directed = 0;
  if (!std::getline(in, line)) throw Error("stream: missing size line");
  {
    std::istringstream hs(line);
    if (!(hs >> s.n >> count >> directed) || s.n < 0 || count < 0 || (directed != 0 && directed != 1))
      throw Error("stream: size line must be '<n> <edges> <directed:0|1>'");
  }
  s.directed = directed == 1;
  int with_tag = 0;
  for (int64_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw Error("stream: expected " + std::to_string(count) + " edges");
    std::istringstream ls(line);
    int64_t u, v;
    std::string tag;
    if (!(ls >> u >> v) || u < 1 || v < 1 || u > s.n || v > s.n)
      throw Error("stream: bad edge on line " + std::to_string(i + 3));
    StreamEdge e{static_cast<int>(u - 1), static_cast<int>(v - 1), {}};
    if (ls >> tag) {
      e.tag = parse_provenance(tag);
      ++with_tag;
    }
    s.edges.push_back(e);
  }
  if (with_tag != 0 && with_tag != count) throw Error("stream: tags must be present on all edges or none");
  s.tagged = count > 0 && with_tag == count;
  return s;
}

namespace {

void put32(std::vector<uint8_t>& out, uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(x >> (8 * i)));
}

uint32_t get32(const std::vector<uint8_t>& in, size_t& pos) {
  if (pos + 4 > in.size()) throw Error("state: truncated");
  uint32_t x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<uint32_t>(in[pos++]) << (8 * i);
  return x;
}

class Counting : public StreamAlgorithm {
 public:
  std::string name() const override { return "count"; }
  void init(int64_t, bool) override { count_ = 0; }
  void begin_pass(int, const RandomTape&) override { count_ = 0; }
  void update(const StreamEdge&, const RandomTape&) override { ++count_; }
  std::vector<uint8_t> serialize() const override {
    std::vector<uint8_t> out;
    put32(out, static_cast<uint32_t>(count_));
    put32(out, static_cast<uint32_t>(count_ >> 32));
    return out;
  }
  void deserialize(const std::vector<uint8_t>& in) override {
    size_t pos = 0;
    uint64_t lo = get32(in, pos);
    count_ = static_cast<int64_t>(lo | static_cast<uint64_t>(get32(in, pos)) << 32);
  }
  size_t state_bits() const override { return 64; }
  int64_t output() const override { return count_; }

 private:
  int64_t count_ = 0;
};

// Greedy maximal matching; later passes look for length-3 augmenting paths
// x'-x=y-y' with x', y' free, one candidate per matched vertex.
class Augmenting : public StreamAlgorithm {
 public:
  explicit Augmenting(int passes) : passes_(passes) {}
  std::string name() const override { return passes_ == 1 ? "greedy" : "augmenting"; }
  void init(int64_t n, bool) override {
    mate_.assign(n, -1);
    cand_.assign(n, -1);
    size_ = 0;
    ncand_ = 0;
    pass_ = 0;
  }
  void begin_pass(int pass, const RandomTape&) override { pass_ = pass; }
  void update(const StreamEdge& e, const RandomTape&) override {
    int u = e.u, v = e.v;
    if (u == v) return;
    if (mate_[u] == -1 && mate_[v] == -1) {
      mate_[u] = v;
      mate_[v] = u;
      ++size_;
      return;
    }
    if (pass_ == 0 || pass_ >= passes_) return;
    offer(u, v);
    offer(v, u);
  }
  void end_pass(int pass, const RandomTape&) override {
    if (pass == 0 || pass >= passes_) return;
    for (int x = 0; x < static_cast<int>(mate_.size()); ++x) {
      int y = mate_[x];
      if (y < x) continue;
      int a = cand_[x], c = cand_[y];
      if (a == -1 || c == -1 || a == c || mate_[a] != -1 || mate_[c] != -1) continue;
      mate_[a] = x;
      mate_[x] = a;
      mate_[y] = c;
      mate_[c] = y;
      ++size_;
    }
    std::fill(cand_.begin(), cand_.end(), -1);
    ncand_ = 0;
  }
  std::vector<uint8_t> serialize() const override {
    std::vector<uint8_t> out;
    put32(out, static_cast<uint32_t>(size_));
    put32(out, static_cast<uint32_t>(ncand_));
    for (int x = 0; x < static_cast<int>(mate_.size()); ++x)
      if (mate_[x] > x) {
        put32(out, x);
        put32(out, mate_[x]);
      }
    for (int x = 0; x < static_cast<int>(cand_.size()); ++x)
      if (cand_[x] != -1) {
        put32(out, x);
        put32(out, cand_[x]);
      }
    return out;
  }
  void deserialize(const std::vector<uint8_t>& in) override {
    size_t pos = 0;
    std::fill(mate_.begin(), mate_.end(), -1);
    std::fill(cand_.begin(), cand_.end(), -1);
    size_ = static_cast<int>(get32(in, pos));
    ncand_ = static_cast<int>(get32(in, pos));
    for (int i = 0; i < size_; ++i) {
      int x = get32(in, pos), y = get32(in, pos);
      mate_[x] = y;
      mate_[y] = x;
    }
    for (int i = 0; i < ncand_; ++i) {
      int x = get32(in, pos);
      cand_[x] = get32(in, pos);
    }
  }
  size_t state_bits() const override { return 64 + 64 * static_cast<size_t>(size_ + ncand_); }
  int64_t output() const override { return size_; }

 private:
  void offer(int x, int a) {
    if (mate_[x] != -1 && mate_[a] == -1 && cand_[x] == -1) {
      cand_[x] = a;
      ++ncand_;
    }
  }
  int passes_;
  int pass_ = 0;
  std::vector<int> mate_, cand_;
  int size_ = 0;
  int ncand_ = 0;
};

class FullMemory : public StreamAlgorithm {
 public:
  std::string name() const override { return "full-memory"; }
  void init(int64_t n, bool) override {
    n_ = n;
    edges_.clear();
    result_ = 0;
  }
  void update(const StreamEdge& e, const RandomTape&) override { edges_.emplace_back(e.u, e.v); }
  void end_pass(int, const RandomTape&) override { result_ = solve(); }
  std::vector<uint8_t> serialize() const override {
    std::vector<uint8_t> out;
    for (auto [u, v] : edges_) {
      put32(out, u);
      put32(out, v);
    }
    return out;
  }
  void deserialize(const std::vector<uint8_t>& in) override {
    edges_.clear();
    size_t pos = 0;
    while (pos < in.size()) {
      int u = get32(in, pos);
      edges_.emplace_back(u, static_cast<int>(get32(in, pos)));
    }
  }
  size_t state_bits() const override { return 64 * edges_.size(); }
  int64_t output() const override { return result_; }

 private:
  // Two-colors the graph and runs an exact bipartite matching.
  int64_t solve() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<int> color(n_, -1), id(n_, -1);
    int nl = 0, nr = 0;
    for (int s = 0; s < n_; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::vector<int> queue{s};
      for (size_t q = 0; q < queue.size(); ++q)
        for (int w : adj[queue[q]]) {
          if (color[w] == -1) {
            color[w] = 1 - color[queue[q]];
            queue.push_back(w);
          } else if (color[w] == color[queue[q]]) {
            throw Error("full-memory matching: stream graph is not bipartite");
          }
        }
    }
    for (int x = 0; x < n_; ++x) id[x] = color[x] == 0 ? nl++ : nr++;
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges_) {
      if (color[u] == 0)
        e.emplace_back(id[u], id[v]);
      else
        e.emplace_back(id[v], id[u]);
    }
    return max_matching(nl, nr, e).size;
  }
  int64_t n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  int64_t result_ = 0;
};

}  // namespace

std::unique_ptr<StreamAlgorithm> counting_algorithm() { return std::make_unique<Counting>(); }
std::unique_ptr<StreamAlgorithm> greedy_matching_baseline() { return std::make_unique<Augmenting>(1); }
std::unique_ptr<StreamAlgorithm> augmenting_baseline(int p) {
  if (p < 1) throw Error("augmenting baseline: p must be at least 1");
  return std::make_unique<Augmenting>(p);
}
std::unique_ptr<StreamAlgorithm> full_memory_matching() { return std::make_unique<FullMemory>(); }

namespace {

class Clock {
 public:
  explicit Clock(double cap) : cap_(cap), start_(std::chrono::steady_clock::now()) {}
  void check() const {
    if (cap_ <= 0) return;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > cap_) throw Error("wall-clock cap exceeded");
  }

 private:
  double cap_;
  std::chrono::steady_clock::time_point start_;
};

void charge(const StreamAlgorithm& alg, const RunOptions& opt, RunResult& res, int pass, size_t i) {
  if (opt.budget_bits == UINT64_MAX) return;
  size_t bits = alg.state_bits();
  res.max_state_bits = std::max(res.max_state_bits, bits);
  if (bits > opt.budget_bits)
    throw Error("state budget exceeded: " + std::to_string(bits) + " bits after element " + std::to_string(i + 1) +
                " of pass " + std::to_string(pass + 1));
}

}  // namespace

RunResult run_passes(StreamAlgorithm& alg, const EdgeStream& s, int p, const RunOptions& opt) {
  if (p < 1) throw Error("run_passes: p must be at least 1");
  RandomTape tape(opt.tape_seed);
  Clock clock(opt.wall_clock_cap_s);
  RunResult res;
  alg.init(s.n, s.directed);
  for (int pass = 0; pass < p; ++pass) {
    alg.begin_pass(pass, tape);
    for (size_t i = 0; i < s.edges.size(); ++i) {
      alg.update(s.edges[i], tape);
      charge(alg, opt, res, pass, i);
    }
    alg.end_pass(pass, tape);
    clock.check();
    res.snapshots.push_back(alg.serialize());
    res.max_state_bits = std::max(res.max_state_bits, alg.state_bits());
  }
  res.output = alg.output();
  return res;
}

AdvantageReport advantage_estimate(const StreamSampler& d1, const StreamSampler& d2, const AlgorithmFactory& make,
                                   const Distinguisher& guess, int trials, int p, Rng& rng, const RunOptions& opt) {
  if (trials < 30) throw Error("advantage_estimate: need at least 30 trials");
  AdvantageReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    for (int side = 1; side <= 2; ++side) {
      Rng sub = rng.split(static_cast<uint64_t>(2 * t + side - 1));
      EdgeStream s = side == 1 ? d1(sub) : d2(sub);
      auto alg = make();
      RunOptions o = opt;
      o.tape_seed = sub.split("tape").seed();
      run_passes(*alg, s, p, o);
      if (guess(*alg) == side) ++rep.correct;
    }
  }
  double n = 2.0 * trials, z = 1.96;
  rep.accuracy = rep.correct / n;
  double centre = (rep.accuracy + z * z / (2 * n)) / (1 + z * z / n);
  double half = z * std::sqrt(rep.accuracy * (1 - rep.accuracy) / n + z * z / (4 * n * n)) / (1 + z * z / n);
  rep.ci_low = centre - half;
  rep.ci_high = centre + half;
  rep.sigma = std::sqrt(0.25 / n);
  return rep;
}

ReplayReport partitioned_replay(const EdgeStream& fake, const EdgeStream& real, StreamAlgorithm& alg, int p,
                                const RunOptions& opt) {
  if (p < 1) throw Error("replay: p must be at least 1");
  if (!real.tagged || (p > 1 && !fake.tagged)) throw Error("replay: stream has no provenance tags");
  if (fake.n != real.n) throw Error("replay: fake and real streams differ in size");
  std::vector<Provenance> players;
  for (const auto* s : {&fake, &real})
    for (const auto& e : s->edges)
      if (e.tag.party == Party::Player) players.push_back({Party::Player, e.tag.player, e.tag.section});
  std::sort(players.begin(), players.end(),
            [](const Provenance& a, const Provenance& b) { return party_key(a) < party_key(b); });
  players.erase(std::unique(players.begin(), players.end()), players.end());
  RandomTape tape(opt.tape_seed);
  ReplayReport rep;
  alg.init(real.n, real.directed);
  std::vector<uint8_t> board;
  auto run_party = [&](const EdgeStream& s, auto&& mine, const std::string& who, bool write) {
    alg.deserialize(board);
    for (const auto& e : s.edges)
      if (mine(e.tag)) alg.update(e, tape);
    if (write) {
      board = alg.serialize();
      rep.bytes_by_party[who] += static_cast<int64_t>(board.size());
      rep.total_bytes += static_cast<int64_t>(board.size());
    }
  };
  for (int pass = 0; pass < p; ++pass) {
    const EdgeStream& s = pass + 1 < p ? fake : real;
    if (pass > 0) alg.deserialize(board);
    alg.begin_pass(pass, tape);
    board = alg.serialize();
    int handoffs = 0;
    for (const auto& pl : players) {
      run_party(s, [&](const Provenance& t) { return t.party == Party::Player && t.player == pl.player &&
                                                     t.section == pl.section; },
                to_string(pl), true);
      ++handoffs;
    }
    bool last = pass + 1 == p;
    run_party(s, [](const Provenance& t) { return t.party != Party::Player; }, "R", false);
    alg.end_pass(pass, tape);
    if (!last) {
      board = alg.serialize();
      rep.bytes_by_party["R"] += static_cast<int64_t>(board.size());
      rep.total_bytes += static_cast<int64_t>(board.size());
    }
    rep.player_handoffs.push_back(handoffs);
  }
  rep.output = alg.output();
  return rep;
}

ReplayReport partitioned_replay(const EdgeStream& s, StreamAlgorithm& alg, int p, const RunOptions& opt) {
  return partitioned_replay(s, s, alg, p, opt);
}

PiAStreams pi_a_streams(const MultiHPHInstance& inst, const GenParams& params, Rng& rng) {
  Rng rr = rng.split("real"), rf = rng.split("fake");
  PiAStreams out;
  out.real = stream_of(gen_from_instance(inst, params, rr));
  out.fake = stream_of(gen_from_instance(lexicographic_referee(inst), params, rf));
  return out;
}

}  // namespace phlab
