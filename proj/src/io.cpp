#include "phlab/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "phlab/error.hpp"

namespace phlab {

using nlohmann::json;

json graph_to_json(const LayeredGraph& g) {
  json edges = json::array(), prov = json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({e.layer + 1, e.u + 1, e.v + 1});
    prov.push_back(to_string(e.tag));
  }
  return {{"kind", "layered_graph"}, {"layers", g.layers}, {"edges", edges}, {"provenance", prov}};
}

LayeredGraph graph_from_json(const json& j) {
  LayeredGraph g;
  try {
    g.layers = j.at("layers").get<std::vector<int>>();
    const json& edges = j.at("edges");
    const json* prov = j.contains("provenance") ? &j.at("provenance") : nullptr;
    if (prov && prov->size() != edges.size()) throw Error("graph: provenance table length differs from edge count");
    for (size_t i = 0; i < edges.size(); ++i) {
      const json& e = edges[i];
      if (!e.is_array() || e.size() != 3) throw Error("graph: edge " + std::to_string(i + 1) + " is not [i,u,v]");
      Provenance tag = prov ? parse_provenance((*prov)[i].get<std::string>()) : Provenance{};
      g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<int>() - 1, tag);
    }
  } catch (const json::exception& ex) {
    throw Error(std::string("graph: malformed JSON: ") + ex.what());
  }
  return g;
}

namespace {

json ranks(const PermVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(lehmer_rank(p));
  return out;
}

PermVector unranks(const json& j, int b) {
  PermVector out;
  for (const auto& r : j) out.push_back(lehmer_unrank(r.get<uint64_t>(), b));
  return out;
}

}  // namespace

json instance_to_json(const MultiHPHInstance& inst) {
  json sig = json::array();
  for (const auto& mat : inst.sigmas) {
    json rows = json::array();
    for (const auto& row : mat) rows.push_back(ranks(row));
    sig.push_back(rows);
  }
  json L = json::array(), M = json::array();
  for (int l : inst.L) L.push_back(l + 1);
  for (const auto& row : inst.M) {
    json r = json::array();
    for (int x : row) r.push_back(x + 1);
    M.push_back(r);
  }
  return {{"kind", "hph_instance"},
          {"schema", kInstanceSchema},
          {"r", inst.r},
          {"t", inst.t},
          {"b", inst.b},
          {"k", inst.k},
          {"sigmas", sig},
          {"L", L},
          {"M", M},
          {"gamma", ranks(inst.gamma)},
          {"target_yes", ranks(inst.target_yes)},
          {"target_no", ranks(inst.target_no)},
          {"answer", inst.answer == Answer::Yes ? "yes" : "no"},
          {"seed", inst.seed}};
}

MultiHPHInstance instance_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kInstanceSchema) throw Error("instance: unsupported schema");
    MultiHPHInstance inst;
    inst.r = j.at("r").get<int>();
    inst.t = j.at("t").get<int>();
    inst.b = j.at("b").get<int>();
    inst.k = j.at("k").get<int>();
    for (const auto& mat : j.at("sigmas")) {
      PermMatrix pm;
      for (const auto& row : mat) pm.push_back(unranks(row, inst.b));
      inst.sigmas.push_back(pm);
    }
    for (const auto& l : j.at("L")) inst.L.push_back(l.get<int>() - 1);
    for (const auto& row : j.at("M")) {
      std::vector<int> r;
      for (const auto& x : row) r.push_back(x.get<int>() - 1);
      inst.M.push_back(r);
    }
    inst.gamma = unranks(j.at("gamma"), inst.b);
    inst.target_yes = unranks(j.at("target_yes"), inst.b);
    inst.target_no = unranks(j.at("target_no"), inst.b);
    std::string a = j.at("answer").get<std::string>();
    if (a != "yes" && a != "no") throw Error("instance: answer must be 'yes' or 'no'");
    inst.answer = a == "yes" ? Answer::Yes : Answer::No;
    inst.seed = j.at("seed").get<uint64_t>();
    if (static_cast<int>(inst.sigmas.size()) != inst.k || static_cast<int>(inst.L.size()) != inst.k)
      throw Error("instance: k does not match the stored matrices");
    return inst;
  } catch (const json::exception& ex) {
    throw Error(std::string("instance: malformed JSON: ") + ex.what());
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace phlab
