#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "phlab/hph.hpp"
#include "phlab/layered_graph.hpp"

namespace phlab {

inline constexpr const char* kInstanceSchema = "phlab.hph/1";

// {"kind":"layered_graph","layers":[...],"edges":[[i,u,v],...],"provenance":[...]}
// with one-indexed layers and vertices.
nlohmann::json graph_to_json(const LayeredGraph& g);
LayeredGraph graph_from_json(const nlohmann::json& j);

// Permutations are stored as Lehmer ranks in [0, b!); L and M are one-indexed.
nlohmann::json instance_to_json(const MultiHPHInstance& inst);
MultiHPHInstance instance_from_json(const nlohmann::json& j);

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace phlab
