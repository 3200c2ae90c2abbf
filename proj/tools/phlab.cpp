// phlab: generate, verify and analyze permutation hiding graphs.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 usage or I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "phlab/artifacts.hpp"
#include "phlab/dist_sb.hpp"
#include "phlab/error.hpp"
#include "phlab/hph.hpp"
#include "phlab/io.hpp"
#include "phlab/matching.hpp"
#include "phlab/sorting_net.hpp"
#include "phlab/stream_harness.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace phlab;

namespace {

// gamma* o gamma must hit the stated target; when the two targets differ the
// full-information referee must also recover the answer.
bool instance_consistent(const MultiHPHInstance& inst) {
  if (compose(recompute_gamma_star(inst.sigmas, inst.L, inst.M), inst.gamma) != inst.target()) return false;
  if (inst.target_yes == inst.target_no) return true;
  Verdict v = referee_answer(inst);
  return v == (inst.answer == Answer::Yes ? Verdict::Yes : Verdict::No);
}

// Rows of named columns, rendered as CSV or a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  bool failed = false;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "csv") {
      for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
          out << (i ? "," : "");
          if (r[i].is_string()) {
            std::string s = r[i].get<std::string>();
            bool quote = s.find_first_of(",\"\n") != std::string::npos;
            if (quote) {
              std::string q;
              for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
              out << '"' << q << '"';
            } else {
              out << s;
            }
          } else if (!r[i].is_null()) {
            out << r[i].dump();
          }
        }
        out << '\n';
      }
    } else {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj;
        for (size_t i = 0; i < r.size(); ++i) obj[columns[i]] = r[i];
        arr.push_back(obj);
      }
      out << arr.dump(1) << '\n';
    }
    return out.str();
  }
};

std::string default_out_dir() {
  const char* env = std::getenv("PHLAB_OUT_DIR");
  return env && *env ? env : ".";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  write_file(path, text);
}

int ceil_log(int m, int b) {
  int k = 0;
  for (long long p = 1; p < m; p *= b) ++k;
  return k;
}

// ---------------------------------------------------------------- gen

int run_gen(const GenRequest& req, const std::string& out_dir) {
  auto files = generate_artifacts(req);
  fs::create_directories(out_dir);
  json summary = {{"out", out_dir}, {"files", json::array()}};
  for (const auto& [name, body] : files) {
    write_file((fs::path(out_dir) / name).string(), body);
    summary["files"].push_back(name);
  }
  json manifest = json::parse(files.at("manifest.json"));
  summary["vertex_count"] = manifest["vertex_count"];
  summary["sigma"] = manifest["sigma"];
  std::cout << summary.dump() << '\n';
  return 0;
}

// ---------------------------------------------------------------- verify

struct FileReport {
  std::string file, kind;
  std::vector<std::tuple<std::string, bool, std::string>> checks;
  void check(const std::string& name, bool ok, const std::string& detail = "") { checks.emplace_back(name, ok, detail); }
  bool ok() const {
    for (const auto& c : checks)
      if (!std::get<1>(c)) return false;
    return !checks.empty();
  }
};

void verify_graph(const LayeredGraph& g, int m, const std::optional<Permutation>& want, FileReport& rep) {
  try {
    g.validate();
    rep.check("edges_in_range", true);
  } catch (const Error& e) {
    rep.check("edges_in_range", false, e.what());
    return;
  }
  ExtractResult r = extract_permutation(g, m);
  if (!r.ok) {
    rep.check("permutation_graph", false, r.error);
    return;
  }
  rep.check("permutation_graph", true, to_string(r.perm));
  if (want) rep.check("extracts_sigma", r.perm == *want, "got " + to_string(r.perm) + ", expected " + to_string(*want));
}

void verify_manifest(const json& man, const fs::path& dir, FileReport& rep) {
  const json& pj = man.at("params");
  GenParams q;
  q.m = pj.at("m");
  q.b = pj.at("b");
  q.k = pj.at("k");
  q.p = pj.at("p");
  q.rs_chunks = pj.value("rs_chunks", 2);
  q.inner_b = pj.value("inner_b", 0);
  bool simple = man.at("mode") == "simple";
  Permutation sigma = parse_permutation(man.at("sigma").get<std::string>());

  std::map<std::string, std::string> body;
  for (const auto& f : man.at("files")) {
    std::string name = f.at("name");
    fs::path path = dir / name;
    if (!fs::exists(path)) {
      rep.check("digest:" + name, false, "missing file " + path.string());
      continue;
    }
    body[name] = read_file(path.string());
    std::string got = sha256_hex(body[name]);
    rep.check("digest:" + name, got == f.at("sha256"), got == f.at("sha256") ? "" : "sha256 " + got);
  }
  if (!body.count("graph.json")) return;
  LayeredGraph g;
  try {
    g = graph_from_json(json::parse(body["graph.json"]));
  } catch (const std::exception& e) {
    rep.check("graph_parse", false, e.what());
    return;
  }
  int64_t expect_n = vertex_count(q, !simple);
  rep.check("vertex_count", g.vertex_count() == expect_n && man.at("vertex_count") == expect_n,
            std::to_string(g.vertex_count()) + " (formula " + std::to_string(expect_n) + ")");
  verify_graph(g, q.m, sigma, rep);

  if (body.count("instance.json")) {
    try {
      MultiHPHInstance inst = instance_from_json(json::parse(body["instance.json"]));
      rep.check("instance_answer", instance_consistent(inst));
      rep.check("instance_target", join(inst.target()) == sigma);
    } catch (const std::exception& e) {
      rep.check("instance_answer", false, e.what());
    }
  }
  if (body.count("bipartite.stream")) {
    try {
      std::istringstream in(body["bipartite.stream"]);
      EdgeStream s = read_stream(in);
      int64_t want_edges = static_cast<int64_t>(g.edges.size()) + g.vertex_count() + q.m;
      rep.check("bipartite_edges", static_cast<int64_t>(s.edges.size()) == want_edges,
                std::to_string(s.edges.size()) + " edges");
      bool eq = sigma.is_identity(), cross = q.m % 2 == 0 && sigma == sigma_cross(q.m);
      if (eq || cross) {
        BipartiteInstance inst = bipartite_of(g, q.m);
        int size = max_matching(inst).size;
        int want = eq ? inst.n + inst.half : inst.n;
        rep.check("matching_dichotomy", size == want, std::to_string(size) + " (expected " + std::to_string(want) + ")");
      }
    } catch (const std::exception& e) {
      rep.check("bipartite_parse", false, e.what());
    }
  }
}

FileReport verify_file(const std::string& file, int m_flag) {
  FileReport rep;
  rep.file = file;
  std::string text = read_file(file);
  size_t first = text.find_first_not_of(" \t\r\n");
  try {
    if (text.rfind("PHSTREAM", 0) == 0) {
      rep.kind = "stream";
      std::istringstream in(text);
      EdgeStream s = read_stream(in);
      rep.check("stream_parse", true, std::to_string(s.edges.size()) + " edges");
    } else if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        rep.kind = "json";
        rep.check("json_parse", false, e.what());
        return rep;
      }
      rep.kind = j.value("kind", "unknown");
      if (rep.kind == "manifest") {
        verify_manifest(j, fs::path(file).parent_path(), rep);
      } else if (rep.kind == "layered_graph") {
        LayeredGraph g = graph_from_json(j);
        int m = m_flag > 0 ? m_flag : std::min(g.layers.front(), g.layers.back());
        verify_graph(g, m, std::nullopt, rep);
      } else if (rep.kind == "hph_instance") {
        MultiHPHInstance inst = instance_from_json(j);
        rep.check("instance_answer", instance_consistent(inst));
      } else {
        rep.check("known_kind", false, "unrecognized JSON kind '" + rep.kind + "'");
      }
    } else {
      rep.kind = "rs_graph";
      std::istringstream in(text);
      RSGraph g = read_rs(in);
      RSReport r = validate_rs(g);
      rep.check("rs_induced", r.ok, r.message);
    }
  } catch (const std::exception& e) {
    rep.check("parse", false, e.what());
  }
  return rep;
}

int run_verify(const std::vector<std::string>& files, int m_flag, const std::string& format, const std::string& out) {
  Table t;
  t.columns = {"file", "kind", "check", "ok", "detail"};
  bool all = true;
  json doc = {{"files", json::array()}};
  for (const auto& f : files) {
    FileReport r = verify_file(f, m_flag);
    all = all && r.ok();
    json fj = {{"file", r.file}, {"kind", r.kind}, {"ok", r.ok()}, {"checks", json::array()}};
    for (const auto& [name, ok, detail] : r.checks) {
      t.add({r.file, r.kind, name, ok, detail});
      fj["checks"].push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    }
    doc["files"].push_back(fj);
  }
  doc["ok"] = all;
  emit(format == "csv" ? t.render("csv") : doc.dump(1) + "\n", out);
  if (!all)
    for (const auto& row : t.rows)
      if (!row[3].get<bool>())
        std::cerr << "violation: " << row[0].get<std::string>() << ": " << row[2].get<std::string>() << ": "
                  << row[4].get<std::string>() << '\n';
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  int b = 0, g = 3, m = 0, k = 2, p = 1, trials = 0;
  uint64_t seed = 1;
};

Table analyze_decay(const AnalyzeOptions& o) {
  int b = o.b ? o.b : 3, trials = o.trials ? o.trials : 1000;
  Rng rng(o.seed);
  Table t;
  t.columns = {"family", "b", "g", "eps", "lhs", "bound", "slack", "holds"};
  for (int i = 0; i < trials; ++i) {
    std::vector<DistSb> nus;
    for (int j = 0; j < o.g; ++j) nus.push_back(DistSb::random(b, rng));
    DecayReport r = concat_decay_check(nus);
    t.add({"random", b, o.g, r.eps, r.lhs, r.bound, r.bound - r.lhs, r.holds});
    t.failed |= !r.holds;
  }
  if (b >= 2) {
    const double grid[] = {0.25, 1.0 / 9, 1.0 / 16};
    int combos = 1;
    for (int j = 0; j < o.g; ++j) combos *= 3;
    for (int c = 0; c < combos; ++c) {
      std::vector<DistSb> nus;
      for (int j = 0, x = c; j < o.g; ++j, x /= 3) nus.push_back(DistSb::parity(b, grid[x % 3]));
      DecayReport r = concat_decay_check(nus);
      bool tight = std::abs(r.lhs - r.bound) <= 1e-12;
      t.add({"parity", b, o.g, r.eps, r.lhs, r.bound, r.bound - r.lhs, tight});
      t.failed |= !tight;
    }
  }
  return t;
}

Table analyze_fourier(const AnalyzeOptions& o) {
  int b = o.b ? o.b : 4, trials = o.trials ? o.trials : 100;
  Rng rng(o.seed);
  IrrepSet irr = build_irreps(b);
  Table t;
  t.columns = {"check", "b", "trial", "error", "holds"};
  uint64_t dsum = 0;
  for (const auto& r : irr.irreps) dsum += static_cast<uint64_t>(r.dim) * r.dim;
  t.add({"dimension_sum", b, 0, static_cast<double>(dsum) - static_cast<double>(factorial(b)), dsum == factorial(b)});
  NumericCheck h = homomorphism_check(irr);
  t.add({"homomorphism", b, 0, h.error, h.holds});
  t.failed |= dsum != factorial(b) || !h.holds;
  for (int i = 0; i < trials; ++i) {
    DistSb a = DistSb::random(b, rng), c = DistSb::random(b, rng);
    for (auto [name, chk] : {std::pair{"roundtrip", roundtrip_check(a, irr)},
                             std::pair{"convolution", convolution_theorem_check(a, c, irr)},
                             std::pair{"plancherel", plancherel_check(a, c, irr)}}) {
      t.add({name, b, i + 1, chk.error, chk.holds});
      t.failed |= !chk.holds;
    }
  }
  return t;
}

Table analyze_pinsker(const AnalyzeOptions& o) {
  int b = o.b ? o.b : 3, trials = o.trials ? o.trials : 1000;
  Rng rng(o.seed);
  Table t;
  t.columns = {"trial", "tvd", "kl", "pinsker_rhs", "pinsker_holds", "strengthened_rhs", "strengthened_holds",
               "printed_rhs", "printed_holds"};
  for (int i = 0; i < trials; ++i) {
    DistSb mu = DistSb::random(b, rng), nu = DistSb::random(b, rng);
    double tv = tvd(mu, nu);
    PinskerReport r = strengthened_pinsker_check(mu, nu);
    double prhs = std::sqrt(r.kl / 2);
    bool p_ok = tv <= prhs + 1e-12;
    t.add({i + 1, tv, r.kl, prhs, p_ok, r.rhs, r.holds, r.rhs_printed, r.holds_printed});
    t.failed |= !p_ok || !r.holds;
  }
  return t;
}

Table analyze_advantage(const AnalyzeOptions& o) {
  GenParams q;
  q.m = o.m ? o.m : 4;
  q.b = o.b ? o.b : 2;
  q.k = o.k;
  q.p = o.p;
  validate(q);
  int trials = o.trials ? o.trials : 30;
  int64_t n = vertex_count(q, true);
  auto sampler = [q](Permutation s) {
    return [q, s](Rng& r) {
      Rng g = r.split("graph");
      EdgeStream st = stream_of(bipartite_of(gen_general(s, q, g), q.m));
      shuffle_stream(st, r.split("order").next());
      return st;
    };
  };
  StreamSampler eq = sampler(sigma_eq(q.m)), cross = sampler(sigma_cross(q.m));
  Distinguisher by_size = [n](const StreamAlgorithm& a) { return a.output() > n ? 1 : 2; };
  Rng rng(o.seed);
  Table t;
  t.columns = {"distinguisher", "pair", "trials", "accuracy", "ci_low", "ci_high", "sigma", "holds"};
  AdvantageReport full = advantage_estimate(eq, cross, full_memory_matching, by_size, trials, 1, rng);
  t.add({"full_memory", "eq_vs_cross", trials, full.accuracy, full.ci_low, full.ci_high, full.sigma,
         full.accuracy == 1.0});
  AdvantageReport null = advantage_estimate(eq, eq, full_memory_matching, by_size, trials, 1, rng);
  bool null_ok = std::abs(null.accuracy - 0.5) <= 3 * null.sigma;
  t.add({"full_memory", "eq_vs_eq", trials, null.accuracy, null.ci_low, null.ci_high, null.sigma, null_ok});
  AdvantageReport greedy = advantage_estimate(
      eq, cross, [&] { return augmenting_baseline(q.p); }, by_size, trials, q.p, rng);
  t.add({"augmenting_p" + std::to_string(q.p), "eq_vs_cross", trials, greedy.accuracy, greedy.ci_low, greedy.ci_high,
         greedy.sigma, nullptr});
  t.failed |= full.accuracy != 1.0 || !null_ok;
  return t;
}

Table analyze_depth(const AnalyzeOptions& o) {
  std::vector<int> ms = o.m ? std::vector<int>{o.m} : std::vector<int>{16, 64, 256, 1024, 4096};
  std::vector<int> bs = o.b ? std::vector<int>{o.b} : std::vector<int>{2, 3, 4, 8, 9, 16};
  Table t;
  t.columns = {"m", "b", "padded", "depth", "ceil_log_b_m", "bound", "ratio", "holds"};
  for (int b : bs)
    for (int m : ms) {
      SorterNetwork net = build_sort_network(m, b);
      int L = ceil_log(m, b);
      bool ok = net.depth() <= 4 * L * L;
      t.add({m, b, net.padded, net.depth(), L, 4 * L * L, L ? double(net.depth()) / (L * L) : 0.0, ok});
      t.failed |= !ok;
    }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation hiding graphs: generate, verify, analyze"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("phlab ") + kToolVersion);

  GenRequest req;
  std::string out_dir = default_out_dir();
  auto* gen = app.add_subcommand("gen", "Sample a hiding graph and write it with a manifest");
  gen->add_option("sigma", req.sigma, "id | eq | cross | random | one-line image such as \"2 3 1 4\"")
      ->capture_default_str();
  gen->add_option("--m", req.params.m, "permutation size")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--b", req.params.b, "group size")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  gen->add_option("--k", req.params.k, "players")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--p", req.params.p, "passes")->capture_default_str()->check(CLI::PositiveNumber);
  gen->add_option("--rs-chunks", req.params.rs_chunks, "chunks of the trivial RS family")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-vertices", req.params.max_vertices, "recursion budget")->capture_default_str();
  gen->add_option("--seed", req.seed, "master seed")->capture_default_str();
  gen->add_flag("--simple", req.simple, "hide a Lex-simple permutation with the one-section generator");
  gen->add_flag("--bipartite", req.bipartite, "also write the matching instance stream");
  gen->add_option("--out", out_dir, "output directory (default $PHLAB_OUT_DIR or .)");

  std::vector<std::string> files;
  int verify_m = 0;
  std::string format = "json", report_out;
  auto* ver = app.add_subcommand("verify", "Check manifests, graphs, streams, instances or RS files");
  ver->add_option("files", files, "files to check")->required()->check(CLI::ExistingFile);
  ver->add_option("--m", verify_m, "permutation size for bare graph files");
  ver->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  ver->add_option("--out", report_out, "report file (default stdout)");

  std::string kind;
  AnalyzeOptions ao;
  std::string an_format = "csv", an_out;
  auto* an = app.add_subcommand("analyze", "Numeric checks as tables");
  an->add_option("kind", kind, "decay | fourier | pinsker | advantage | depth")
      ->required()
      ->check(CLI::IsMember({"decay", "fourier", "pinsker", "advantage", "depth"}));
  an->add_option("--b", ao.b, "b (kind-specific default)")->check(CLI::Range(2, 1 << 20));
  an->add_option("--g", ao.g, "distributions per tuple (decay)")->check(CLI::Range(1, 8));
  an->add_option("--m", ao.m, "m (advantage, depth)");
  an->add_option("--k", ao.k, "players (advantage)");
  an->add_option("--p", ao.p, "passes (advantage)");
  an->add_option("--trials", ao.trials, "trials (kind-specific default)");
  an->add_option("--seed", ao.seed, "seed");
  an->add_option("--format", an_format, "output format")->check(CLI::IsMember({"json", "csv"}));
  an->add_option("--out", an_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_gen(req, out_dir);
    if (*ver) return run_verify(files, verify_m, format, report_out);
    Table t;
    if (kind == "decay") t = analyze_decay(ao);
    if (kind == "fourier") t = analyze_fourier(ao);
    if (kind == "pinsker") t = analyze_pinsker(ao);
    if (kind == "advantage") t = analyze_advantage(ao);
    if (kind == "depth") t = analyze_depth(ao);
    emit(t.render(an_format), an_out);
    return t.failed ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
