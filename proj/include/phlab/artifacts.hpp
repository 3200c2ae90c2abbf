#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "phlab/hiding_gen.hpp"

namespace phlab {

inline constexpr const char* kManifestSchema = "phlab.manifest/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct GenRequest {
  std::string sigma = "random";  // "id", "eq", "cross", "random" or a one-line image
  bool simple = false;           // gen_simple on Lex instead of gen_general
  bool bipartite = false;        // also emit the matching instance stream
  GenParams params;
  uint64_t seed = 0;
};

// Resolves a permutation spec; "random" draws from `rng`.
Permutation resolve_sigma(const std::string& spec, int m, Rng& rng);

// File name -> contents. Always graph.json, graph.stream and manifest.json;
// instance.json in simple mode and bipartite.stream on request. Output is a
// pure function of the request.
std::map<std::string, std::string> generate_artifacts(const GenRequest& req);

}  // namespace phlab
