#include "phlab/artifacts.hpp"

#include <algorithm>
#include <sstream>

#include "phlab/error.hpp"
#include "phlab/io.hpp"
#include "phlab/matching.hpp"
#include "phlab/stream_harness.hpp"

namespace phlab {

using nlohmann::json;

Permutation resolve_sigma(const std::string& spec, int m, Rng& rng) {
  if (spec == "id" || spec == "eq") return Permutation::identity(m);
  if (spec == "cross") {
    if (m % 2) throw Error("sigma 'cross' needs an even m");
    return sigma_cross(m);
  }
  if (spec == "random") return Permutation::random(m, rng);
  Permutation p = parse_permutation(spec);
  if (p.size() != m) throw Error("sigma has " + std::to_string(p.size()) + " entries but m = " + std::to_string(m));
  return p;
}

namespace {

std::string stream_text(const EdgeStream& s) {
  std::ostringstream out;
  write_stream(out, s);
  return out.str();
}

json layer_map(const LayeredGraph& g) {
  std::map<int, std::pair<int, int>> span;
  for (const Edge& e : g.edges) {
    auto [it, fresh] = span.try_emplace(e.tag.section, e.layer, e.layer + 1);
    if (!fresh) {
      it->second.first = std::min(it->second.first, e.layer);
      it->second.second = std::max(it->second.second, e.layer + 1);
    }
  }
  // Section 0 only holds the joins between sections once sections exist.
  if (span.size() > 1) span.erase(0);
  json out = json::array();
  for (const auto& [sec, s] : span)
    out.push_back({{"section", sec}, {"first_layer", s.first + 1}, {"last_layer", s.second + 1}});
  return out;
}

}  // namespace

std::map<std::string, std::string> generate_artifacts(const GenRequest& req) {
  const GenParams& q = req.params;
  validate(q);
  Rng master(req.seed);
  Rng rs = master.split("sigma"), rg = master.split("gen");
  Permutation sigma = resolve_sigma(req.sigma, q.m, rs);

  std::map<std::string, std::string> files;
  LayeredGraph g;
  if (req.simple) {
    if (!is_simple(sigma, Equipartition::lex(q.m, q.b)))
      throw Error("simple mode needs a permutation that keeps every block of " + std::to_string(q.b) +
                  " consecutive elements");
    SimpleSample s = gen_simple_detailed(sigma, Equipartition::lex(q.m, q.b), q, rg);
    s.instance.seed = req.seed;
    g = std::move(s.graph);
    files["instance.json"] = instance_to_json(s.instance).dump(1) + "\n";
  } else {
    g = gen_general(sigma, q, rg);
  }
  files["graph.json"] = graph_to_json(g).dump() + "\n";
  files["graph.stream"] = stream_text(stream_of(g));
  if (req.bipartite) files["bipartite.stream"] = stream_text(stream_of(bipartite_of(g, q.m)));

  json digests = json::array();
  for (const auto& [name, body] : files)
    digests.push_back({{"name", name}, {"sha256", sha256_hex(body)}, {"bytes", body.size()}});
  json manifest = {{"kind", "manifest"},
                   {"schema", kManifestSchema},
                   {"tool", std::string("phlab ") + kToolVersion},
                   {"mode", req.simple ? "simple" : "general"},
                   {"params",
                    {{"m", q.m}, {"b", q.b}, {"k", q.k}, {"p", q.p}, {"rs_chunks", q.rs_chunks}, {"inner_b", q.inner_b}}},
                   {"seed", req.seed},
                   {"sigma_spec", req.sigma},
                   {"sigma", to_string(sigma)},
                   {"vertex_count", g.vertex_count()},
                   {"layers", g.depth()},
                   {"edges", g.edges.size()},
                   {"layer_map", layer_map(g)},
                   {"files", digests}};
  files["manifest.json"] = manifest.dump(1) + "\n";
  return files;
}

}  // namespace phlab
