#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "phlab/hiding_gen.hpp"
#include "phlab/layered_graph.hpp"
#include "phlab/matching.hpp"

namespace phlab {

struct StreamEdge {
  int u;  // zero-indexed in memory, one-indexed on disk
  int v;
  Provenance tag;
};

struct EdgeStream {
  int64_t n = 0;
  bool directed = false;
  bool tagged = false;
  std::vector<StreamEdge> edges;
};

// Layer-major then provenance-major canonical order (global vertex ids).
EdgeStream stream_of(const LayeredGraph& g);
// Left ids first, then right ids; undirected.
EdgeStream stream_of(const BipartiteInstance& inst);
// Uniform shuffle of the edge order.
void shuffle_stream(EdgeStream& s, uint64_t seed);

void write_stream(std::ostream& out, const EdgeStream& s);
EdgeStream read_stream(std::istream& in);

// Read-only tape of uniform random words fixed before the stream starts.
class RandomTape {
 public:
  explicit RandomTape(uint64_t seed) : seed_(seed) {}
  uint64_t word(uint64_t i) const { return splitmix64(seed_ ^ splitmix64(i)); }
  bool bit(uint64_t i) const { return (word(i / 64) >> (i % 64)) & 1; }

 private:
  uint64_t seed_;
};

class StreamAlgorithm {
 public:
  virtual ~StreamAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual void init(int64_t n, bool directed) = 0;
  virtual void begin_pass(int /*pass*/, const RandomTape& /*tape*/) {}
  virtual void update(const StreamEdge& e, const RandomTape& tape) = 0;
  virtual void end_pass(int /*pass*/, const RandomTape& /*tape*/) {}
  virtual std::vector<uint8_t> serialize() const = 0;
  virtual void deserialize(const std::vector<uint8_t>& bytes) = 0;
  virtual size_t state_bits() const { return serialize().size() * 8; }
  virtual int64_t output() const = 0;
};

using AlgorithmFactory = std::function<std::unique_ptr<StreamAlgorithm>()>;

std::unique_ptr<StreamAlgorithm> counting_algorithm();
std::unique_ptr<StreamAlgorithm> greedy_matching_baseline();
// Pass 1 is greedy; each later pass augments along length-3 paths.
std::unique_ptr<StreamAlgorithm> augmenting_baseline(int p);
// Stores the whole stream and outputs the exact maximum matching size.
std::unique_ptr<StreamAlgorithm> full_memory_matching();

struct RunOptions {
  uint64_t budget_bits = UINT64_MAX;  // UINT64_MAX disables per-update checks
  uint64_t tape_seed = 0;
  double wall_clock_cap_s = 0;        // 0 disables the cap
};

struct RunResult {
  int64_t output = 0;
  std::vector<std::vector<uint8_t>> snapshots;  // state after each pass
  size_t max_state_bits = 0;
};

// Throws Error naming the pass and element index when the budget is exceeded.
RunResult run_passes(StreamAlgorithm& alg, const EdgeStream& s, int p, const RunOptions& opt = {});

using StreamSampler = std::function<EdgeStream(Rng&)>;
using Distinguisher = std::function<int(const StreamAlgorithm&)>;  // returns 1 or 2

struct AdvantageReport {
  int trials = 0;      // per distribution
  int correct = 0;     // over both distributions
  double accuracy = 0;
  double ci_low = 0;   // Wilson 95%
  double ci_high = 0;
  double sigma = 0;    // binomial sd of the accuracy under p = 1/2
};

AdvantageReport advantage_estimate(const StreamSampler& d1, const StreamSampler& d2, const AlgorithmFactory& make,
                                   const Distinguisher& guess, int trials, int p, Rng& rng,
                                   const RunOptions& opt = {});

struct ReplayReport {
  std::map<std::string, int64_t> bytes_by_party;
  std::vector<int> player_handoffs;  // per pass
  int64_t total_bytes = 0;
  int64_t output = 0;
};

// Players (ordered by section, then index) process their own edges and hand
// the serialized state on; the referee processes referee and fixed edges.
ReplayReport partitioned_replay(const EdgeStream& s, StreamAlgorithm& alg, int p, const RunOptions& opt = {});
// Passes 1..p-1 run on `fake`, pass p on `real`.
ReplayReport partitioned_replay(const EdgeStream& fake, const EdgeStream& real, StreamAlgorithm& alg, int p,
                                const RunOptions& opt = {});

// Streams for the fake-pass protocol: the real Lex instance graph, and the
// same player matrices with the lexicographically first referee input.
struct PiAStreams {
  EdgeStream fake;
  EdgeStream real;
};
PiAStreams pi_a_streams(const MultiHPHInstance& inst, const GenParams& params, Rng& rng);

}  // namespace phlab
