#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phlab/artifacts.hpp"
#include "phlab/dist_sb.hpp"
#include "phlab/error.hpp"
#include "phlab/hiding_gen.hpp"
#include "phlab/io.hpp"
#include "phlab/matching.hpp"
#include "phlab/sorting_net.hpp"
#include "phlab/stream_harness.hpp"

namespace py = pybind11;
using namespace phlab;

namespace {

Permutation perm_of(const std::vector<int>& image) { return Permutation(image); }

PermVector perms_of(const std::vector<std::vector<int>>& images) {
  PermVector out;
  for (const auto& im : images) out.push_back(Permutation(im));
  return out;
}

GenParams make_params(int m, int b, int k, int p, int rs_chunks, int inner_b, int64_t max_vertices) {
  GenParams q;
  q.m = m;
  q.b = b;
  q.k = k;
  q.p = p;
  q.rs_chunks = rs_chunks;
  q.inner_b = inner_b;
  q.max_vertices = max_vertices;
  return q;
}

#define PARAM_ARGS                                                                                             \
  py::arg("m"), py::arg("b") = 2, py::arg("k") = 2, py::arg("p") = 1, py::arg("rs_chunks") = 2,              \
      py::arg("inner_b") = 0, py::arg("max_vertices") = int64_t{200'000'000}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation hiding graphs: generators, checks and numeric tools";
  py::register_exception<Error>(m, "PhlabError", PyExc_ValueError);

  py::class_<Edge>(m, "Edge")
      .def_readonly("layer", &Edge::layer)
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def_property_readonly("tag", [](const Edge& e) { return to_string(e.tag); })
      .def("__repr__", [](const Edge& e) {
        return "Edge(" + std::to_string(e.layer) + ", " + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
               to_string(e.tag) + ")";
      });

  py::class_<LayeredGraph>(m, "LayeredGraph")
      .def_readonly("layers", &LayeredGraph::layers)
      .def_readonly("edges", &LayeredGraph::edges)
      .def_property_readonly("depth", &LayeredGraph::depth)
      .def_property_readonly("vertex_count", &LayeredGraph::vertex_count)
      .def("to_json", [](const LayeredGraph& g) { return graph_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); })
      .def("__repr__", [](const LayeredGraph& g) {
        return "LayeredGraph(depth=" + std::to_string(g.depth()) + ", vertices=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edges.size()) + ")";
      });

  // Permutations cross the boundary as zero-indexed image lists.
  m.def("compose", [](const std::vector<int>& f, const std::vector<int>& g) {
    return compose(perm_of(f), perm_of(g)).image();
  });
  m.def("inverse", [](const std::vector<int>& f) { return inverse(perm_of(f)).image(); });
  m.def("random_permutation", [](int n, uint64_t seed) {
    Rng rng(seed);
    return Permutation::random(n, rng).image();
  }, py::arg("n"), py::arg("seed"));
  m.def("sigma_eq", [](int n) { return sigma_eq(n).image(); });
  m.def("sigma_cross", [](int n) { return sigma_cross(n).image(); });

  m.def("basic", [](const std::vector<int>& s) { return basic(perm_of(s)); });
  m.def("extract_permutation", [](const LayeredGraph& g, int n) -> py::object {
    ExtractResult r = extract_permutation(g, n);
    if (!r.ok) return py::none();
    return py::cast(r.perm.image());
  }, "Image read off the graph, or None when it is not a permutation graph");

  m.def("gen_simple", [](const std::vector<int>& rho, uint64_t seed, int m_, int b, int k, int p, int rs_chunks,
                         int inner_b, int64_t max_vertices) {
    GenParams q = make_params(m_, b, k, p, rs_chunks, inner_b, max_vertices);
    Rng rng(seed);
    return gen_simple(perm_of(rho), Equipartition::lex(m_, b), q, rng);
  }, py::arg("rho"), py::arg("seed"), PARAM_ARGS);
  m.def("gen_general", [](const std::vector<int>& sigma, uint64_t seed, int m_, int b, int k, int p, int rs_chunks,
                          int inner_b, int64_t max_vertices) {
    GenParams q = make_params(m_, b, k, p, rs_chunks, inner_b, max_vertices);
    Rng rng(seed);
    return gen_general(perm_of(sigma), q, rng);
  }, py::arg("sigma"), py::arg("seed"), PARAM_ARGS);
  m.def("vertex_count", [](bool general, int m_, int b, int k, int p, int rs_chunks, int inner_b,
                           int64_t max_vertices) {
    return vertex_count(make_params(m_, b, k, p, rs_chunks, inner_b, max_vertices), general);
  }, py::arg("general"), PARAM_ARGS);

  m.def("sort_network_depth", [](int n, int b) { return build_sort_network(n, b).depth(); });
  m.def("decompose", [](const std::vector<int>& sigma, int b) {
    Decomposition d = decompose(perm_of(sigma), b);
    std::vector<std::vector<int>> gammas;
    for (const auto& g : d.gammas) gammas.push_back(g.image());
    return gammas;
  }, "Layers gamma_1..gamma_d with sigma = gamma_1 o ... o gamma_d");

  m.def("max_matching_size", [](const LayeredGraph& g, int n) {
    return max_matching(bipartite_of(g, n)).size;
  }, "Exact maximum matching of the bipartite instance built from g");
  m.def("dichotomy_check", [](int trials, uint64_t seed, int m_, int b, int k, int p, int rs_chunks, int inner_b,
                              int64_t max_vertices) {
    Rng rng(seed);
    DichotomyReport r = dichotomy_check(make_params(m_, b, k, p, rs_chunks, inner_b, max_vertices), trials, rng);
    py::dict d;
    d["trials"] = r.trials;
    d["n"] = r.n;
    d["eq_ok"] = r.eq_ok;
    d["cross_ok"] = r.cross_ok;
    d["eps_gap"] = r.eps_gap;
    d["holds"] = r.holds;
    return d;
  }, py::arg("trials"), py::arg("seed"), PARAM_ARGS);

  // Distributions on S_b as lists indexed by Lehmer rank.
  auto dist = [](int b, const std::vector<double>& p) { return DistSb::from(b, p); };
  m.def("parity_distribution", [](int b, double eps) { return DistSb::parity(b, eps).p; });
  m.def("random_distribution", [](int b, uint64_t seed) {
    Rng rng(seed);
    return DistSb::random(b, rng).p;
  });
  m.def("convolve", [dist](int b, const std::vector<double>& a, const std::vector<double>& c) {
    return convolve(dist(b, a), dist(b, c)).p;
  });
  m.def("tvd", [dist](int b, const std::vector<double>& a, const std::vector<double>& c) {
    return tvd(dist(b, a), dist(b, c));
  });
  m.def("kl", [dist](int b, const std::vector<double>& a, const std::vector<double>& c) {
    return kl(dist(b, a), dist(b, c));
  });
  m.def("l2_sq", [dist](int b, const std::vector<double>& a, const std::vector<double>& c) {
    return l2_sq(dist(b, a), dist(b, c));
  });
  m.def("irrep_dims", [](int b) {
    std::vector<int> dims;
    for (const auto& r : build_irreps(b).irreps) dims.push_back(r.dim);
    return dims;
  });

  m.def("hph_roundtrip", [](int r, int t, int b, int k, const std::vector<std::vector<int>>& yes,
                            const std::vector<std::vector<int>>& no, uint64_t seed) {
    Rng rng(seed);
    MultiHPHInstance inst = sample_instance(r, t, b, k, perms_of(yes), perms_of(no), rng);
    Verdict v = referee_answer(inst);
    py::dict d;
    d["answer"] = inst.answer == Answer::Yes ? "yes" : "no";
    d["verdict"] = v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "ambiguous";
    d["json"] = instance_to_json(inst).dump();
    return d;
  }, "Samples an instance and returns its answer with the full-information referee's verdict");

  m.def("generate_artifacts", [](const std::string& sigma, uint64_t seed, bool simple, bool bipartite, int m_, int b,
                                 int k, int p, int rs_chunks, int inner_b, int64_t max_vertices) {
    GenRequest req;
    req.sigma = sigma;
    req.seed = seed;
    req.simple = simple;
    req.bipartite = bipartite;
    req.params = make_params(m_, b, k, p, rs_chunks, inner_b, max_vertices);
    py::dict out;
    for (const auto& [name, body] : generate_artifacts(req)) out[py::str(name)] = py::bytes(body);
    return out;
  }, py::arg("sigma"), py::arg("seed"), py::arg("simple") = false, py::arg("bipartite") = false, PARAM_ARGS);
}
