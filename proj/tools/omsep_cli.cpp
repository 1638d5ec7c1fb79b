// Command-line front end: builds or loads matroids and graphs, runs the
// analyses, and prints a JSON report. Exit codes: 0 ok, 2 resource limit,
// 3 validation failure, 1 other errors.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "omsep/construct.hpp"
#include "omsep/graphsep.hpp"
#include "omsep/io.hpp"
#include "omsep/separation.hpp"
#include "omsep/tilings.hpp"

using namespace omsep;

namespace {

constexpr int kExitLimit = 2;
constexpr int kExitInvalid = 3;

struct Options {
  // Inputs.
  std::string matroid_file, vectors_file, graph_file, triangulation_file, tree_file;
  std::vector<int> alternating;
  int free = -1;
  std::string composition, named, named_tree;
  int tree_size = 5;
  // Limits and plumbing.
  std::uint64_t max_colocalizations = 100000, max_cliques = 1000000;
  double seconds = 300.0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string output;
  // Command specific.
  std::uint64_t limit = 0;
  int print = 10;
  std::string svg_dir, domain_file, circuit, sets, collection_file;
  int domain_component = -1;
  int a = 0, b = 0;
};

Budget budget_of(const Options& o) {
  Budget b;
  b.max_colocalizations = o.max_colocalizations;
  b.max_cliques = o.max_cliques;
  b.seconds = o.seconds;
  return b;
}

Json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return ss.str();
}

// Every file read and every builder flag feeds the content hash.
struct Context {
  Options opt;
  std::string command;
  std::string hashed;
  Json inputs = Json::object();

  Json load_file(const std::string& key, const std::string& path) {
    const auto text = read_text_file(path);
    hashed += key + '\0' + text + '\0';
    inputs[key] = path;
    return Json::parse(text);
  }
  void note(const std::string& key, const Json& value) {
    hashed += key + '\0' + value.dump() + '\0';
    inputs[key] = value;
  }
};

struct Loaded {
  OrientedMatroid m;
  std::optional<UndirectedGraph> graph;
  bool rank2_alternating = false;
  std::string name;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::optional<Loaded> load_input(Context& c) {
  const auto& o = c.opt;
  Loaded l;
  int given = 0;
  if (!o.matroid_file.empty()) {
    ++given;
    l.m = matroid_from_json(c.load_file("matroid", o.matroid_file));
    l.name = o.matroid_file;
  }
  if (!o.vectors_file.empty()) {
    ++given;
    l.m = from_vectors(vectors_from_json(c.load_file("vectors", o.vectors_file)));
    l.name = o.vectors_file;
  }
  if (!o.graph_file.empty()) {
    ++given;
    l.graph = undirected_from_json(c.load_file("graph", o.graph_file));
    l.name = o.graph_file;
  }
  if (!o.triangulation_file.empty()) {
    ++given;
    l.graph = triangulation_graph(triangulation_from_json(c.load_file("triangulation", o.triangulation_file)));
    l.name = o.triangulation_file;
  }
  if (!o.alternating.empty()) {
    ++given;
    if (o.alternating.size() != 2) throw ValidationError("--alternating takes n and d");
    c.note("alternating", o.alternating);
    const int n = o.alternating[0], d = o.alternating[1];
    if (n < 1 || n > kMaxElements || d < 0 || d > n) throw ValidationError("need 0 <= d <= n <= 63");
    l.m = alternating(n, d);
    l.rank2_alternating = d == 2;
    l.name = "C^{" + std::to_string(n) + "," + std::to_string(d) + "}";
  }
  if (o.free >= 0) {
    ++given;
    c.note("free", o.free);
    l.m = free_matroid(o.free);
    l.name = "free " + std::to_string(o.free);
  }
  if (!o.composition.empty()) {
    ++given;
    c.note("corank2", o.composition);
    l.m = corank2_family(parse_int_list(o.composition));
    l.name = "corank-2 family (" + o.composition + ")";
  }
  if (!o.named.empty()) {
    ++given;
    c.note("named", o.named);
    if (o.named == "pentagon-with-centre") l.m = from_vectors(pentagon_with_centre());
    else if (o.named == "triangle-with-centroid") l.m = from_vectors(triangle_with_centroid());
    else if (o.named == "three-lines") l.m = from_vectors(three_lines_configuration());
    else if (o.named == "k4") l.graph = complete_graph(4);
    else if (o.named == "k23") l.graph = complete_bipartite(2, 3);
    else throw ValidationError("unknown named input '" + o.named + "'");
    l.name = o.named;
  }
  if (given > 1) throw ValidationError("give exactly one input");
  if (given == 0) return std::nullopt;
  if (l.graph) l.m = graphic_matroid(*l.graph);
  return l;
}

Loaded require_input(Context& c) {
  auto l = load_input(c);
  if (!l) throw ValidationError("an input is required");
  return std::move(*l);
}

Json set_json(Bits s, const OrientedMatroid& m) { return subset_to_json(s, m.labels()); }

// ---------------------------------------------------------------------------

Json cmd_validate(Context& c) {
  if (c.opt.matroid_file.empty()) throw ValidationError("validate needs a matroid file");
  const auto f = matroid_file_from_json(c.load_file("matroid", c.opt.matroid_file));
  // The reader closes under negation, so the axioms are judged on the closure.
  std::vector<SignedSet> closed = f.circuits;
  for (const auto& x : f.circuits) closed.push_back(-x);
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  const auto r = validate_axioms(closed);
  Json j = validation_to_json(r, f.labels);
  j["elements"] = f.labels.size();
  j["circuits_listed"] = f.circuits.size();
  return j;
}

Json cmd_analyze(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  Json j;
  j["name"] = l.name;
  j["elements"] = m.size();
  j["rank"] = m.rank();
  j["circuits"] = m.num_circuits();
  j["independent_sets"] = independent_sets(m).size();
  j["bases"] = bases(m).size();
  j["loops"] = set_json(m.loops(), m);
  j["coloops"] = set_json(m.coloops(), m);
  j["simple"] = is_simple(m);
  j["tutte_2_1"] = big(tutte_eval(m, 2, 1));
  j["tutte_1_1"] = big(tutte_eval(m, 1, 1));
  if (m.rank() == 3 && m.size() <= 9) j["positively_orientable"] = is_positively_orientable(m);
  if (l.graph) {
    const auto& g = *l.graph;
    j["forests"] = big(tutte_eval(m, 2, 1));
    j["spanning_trees"] = big(tutte_eval(m, 1, 1));
    j["acyclic_orientations"] = count_acyclic_orientations(g);
    if (g.size() <= 20) j["cycle_reversal_classes"] = cycle_reversal_components(g).members.size();
    if (g.vertices <= 10 && g.size() <= 16) j["outerplanar"] = outerplanar(g).outerplanar;
  }
  return j;
}

// Rhombus picture of a rank-2 alternating tiling with v_i on the upper
// unit semicircle.
std::string tiling_svg(const OrientedMatroid& m, const Collection& s, const std::vector<Tile>& tiles) {
  const int n = m.size();
  const double pi = std::acos(-1.0);
  std::vector<double> vx(n), vy(n);
  double xmin = 0, xmax = 0, ymax = 0;
  for (int i = 0; i < n; ++i) {
    const double t = pi * (n - i - 0.5) / n;
    vx[i] = std::cos(t);
    vy[i] = std::sin(t);
    (vx[i] < 0 ? xmin : xmax) += vx[i];
    ymax += vy[i];
  }
  const double scale = 700.0 / std::max(xmax - xmin, ymax);
  const double ox = 400.0 - scale * (xmin + xmax) / 2, oy = 400.0 + scale * ymax / 2;
  auto pt = [&](Bits x) {
    double px = 0, py = 0;
    for (int e : elements(x)) {
      px += vx[e];
      py += vy[e];
    }
    return std::pair<long, long>{std::lround(ox + scale * px), std::lround(oy - scale * py)};
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (const auto& t : tiles) {
    const auto span = elements(tile_span(t, m.ground()));
    if (span.size() != 2) continue;
    const Bits b = t.plus, a1 = bit(span[0]), a2 = bit(span[1]);
    out << "<polygon fill=\"#dde6f5\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (Bits x : {b, b | a1, b | a1 | a2, b | a2}) {
      const auto [px, py] = pt(x);
      out << px << ',' << py << ' ';
    }
    out << "\"/>\n";
  }
  for (Bits x : s) {
    const auto [px, py] = pt(x);
    out << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Json cmd_tilings(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  const auto budget = budget_of(c.opt);
  const auto sigmas = enumerate_colocalizations(m, c.opt.limit, budget);
  const auto ind = tutte_eval(m, 2, 1);
  Json j;
  j["count"] = sigmas.size();
  j["independent"] = big(ind);
  std::size_t max_size = 0, verified = 0;
  bool all_max = true;
  Json shown = Json::array();
  std::vector<std::pair<Collection, std::vector<Tile>>> pictures;
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    const auto s = collection_of(m, sigmas[k]);
    max_size = std::max(max_size, s.size());
    if (mpz_class(static_cast<unsigned long>(s.size())) != ind) all_max = false;
    const auto rep = verify_tiling(m, s);
    if (rep.ok) ++verified;
    const auto tiles = tiling_of(m, s);
    if (static_cast<int>(k) < c.opt.print)
      shown.push_back({{"size", s.size()},
                       {"sets", collection_to_json(s, m.labels())},
                       {"tiles", tiling_to_json(m, tiles)},
                       {"tiling_ok", rep.ok},
                       {"failures", rep.failures}});
    if (!c.opt.svg_dir.empty() && l.rank2_alternating) pictures.emplace_back(s, tiles);
  }
  j["max_size"] = max_size;
  j["all_of_size_independent"] = all_max;
  j["tilings_verified"] = verified;
  j["collections"] = shown;
  if (!c.opt.svg_dir.empty()) {
    if (!l.rank2_alternating) {
      j["svg"] = "svg skipped: pictures need a rank-2 alternating input";
    } else {
      std::filesystem::create_directories(c.opt.svg_dir);
      Json files = Json::array();
      for (std::size_t k = 0; k < pictures.size(); ++k) {
        const auto path = (std::filesystem::path(c.opt.svg_dir) / ("tiling_" + std::to_string(k + 1) + ".svg")).string();
        write_text_file(path, tiling_svg(m, pictures[k].first, pictures[k].second));
        files.push_back(path);
      }
      j["svg"] = files;
    }
  }
  return j;
}

Json purity_json(const PurityResult& r, const OrientedMatroid& m) {
  Json j = {{"verdict", r.pure ? "pure" : "not-pure"},
            {"independent", r.independent},
            {"max_size", r.max_size},
            {"min_size", r.min_size},
            {"cliques_visited", r.cliques}};
  if (r.witness) j["witness"] = collection_to_json(*r.witness, m.labels());
  return j;
}

Json cmd_purity(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  const auto budget = budget_of(c.opt);
  if (!c.opt.domain_file.empty()) {
    const auto domain = collection_from_json(c.load_file("domain", c.opt.domain_file), m.labels());
    auto j = purity_json(domain_purity_check(m, domain, budget), m);
    j["domain_size"] = domain.size();
    return j;
  }
  if (c.opt.domain_component >= 0) {
    c.note("domain_component", c.opt.domain_component);
    const auto comps = mutation_components(m);
    if (c.opt.domain_component >= static_cast<int>(comps.members.size()))
      throw ValidationError("no such mutation component");
    const auto& domain = comps.members[c.opt.domain_component];
    auto j = purity_json(domain_purity_check(m, domain, budget), m);
    j["domain_size"] = domain.size();
    return j;
  }
  return purity_json(purity_check(m, budget), m);
}

Json cmd_mutation_graph(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  const auto comps = mutation_components(m);
  Json j;
  std::size_t isolated = 0;
  Json list = Json::array();
  for (std::size_t k = 0; k < comps.members.size(); ++k) {
    const auto& d = comps.members[k];
    if (d.size() == 1) {
      ++isolated;
      continue;
    }
    Json cj = {{"index", k}, {"size", d.size()}, {"members", collection_to_json(d, m.labels())}};
    if (d.size() <= 256) cj["purity"] = purity_json(domain_purity_check(m, d, budget_of(c.opt)), m);
    list.push_back(cj);
  }
  j["vertices"] = std::size_t{1} << m.size();
  j["components"] = comps.members.size();
  j["isolated"] = isolated;
  j["nontrivial"] = list;
  return j;
}

Json cmd_flips(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  const auto fg = flip_graph(m, budget_of(c.opt));
  std::size_t checks = 0, failures = 0;
  for (const auto& [u, v] : fg.edges) {
    const auto& a = fg.vertices[u];
    const auto& b = fg.vertices[v];
    for (int w = 0; w < m.num_circuits(); ++w)
      if (a[w] != b[w]) {
        ++checks;
        if (!mutation_relation_holds(m, a, w)) ++failures;
      }
  }
  return {{"colocalizations", fg.vertices.size()},
          {"flips", fg.edges.size()},
          {"connected", fg.connected},
          {"mutation_relation_checks", checks},
          {"mutation_relation_failures", failures}};
}

Bits parse_label_set(const std::string& s, const OrientedMatroid& m) {
  Bits out = 0;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto it = std::find(m.labels().begin(), m.labels().end(), tok);
    if (it == m.labels().end()) throw ValidationError("unknown label '" + tok + "'");
    out |= bit(static_cast<int>(it - m.labels().begin()));
  }
  return out;
}

Json certificate_json(const OrientedMatroid& m, const CertificateResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json bl = Json::array();
    for (Bits b : row.blockers) bl.push_back(set_json(b, m));
    rows.push_back({{"set", set_json(row.set, m)}, {"orientation", std::string(1, sign_char(row.orientation))},
                    {"blockers", bl}});
  }
  return {{"valid", r.valid}, {"collection_separated", r.collection_separated}, {"is_circuit", r.is_circuit},
          {"rows", rows}};
}

Json cmd_certificate(Context& c) {
  const auto l = require_input(c);
  const auto& m = l.m;
  if (c.opt.circuit.empty()) throw ValidationError("--circuit PLUS|MINUS is required");
  const auto bar = c.opt.circuit.find('|');
  if (bar == std::string::npos) throw ValidationError("--circuit needs a '|' between the two sides");
  c.note("circuit", c.opt.circuit);
  const SignedSet x{parse_label_set(c.opt.circuit.substr(0, bar), m), parse_label_set(c.opt.circuit.substr(bar + 1), m)};
  Collection s0;
  if (!c.opt.collection_file.empty()) {
    s0 = collection_from_json(c.load_file("collection", c.opt.collection_file), m.labels());
  } else {
    c.note("sets", c.opt.sets);
    std::vector<Bits> sets;
    std::stringstream ss(c.opt.sets);
    std::string tok;
    while (std::getline(ss, tok, ';')) sets.push_back(parse_label_set(tok, m));
    s0 = make_collection(sets);
  }
  return certificate_json(m, bad_collection_certificate(m, x, s0));
}

Json cmd_census6(Context& c) {
  const auto budget = budget_of(c.opt);
  CensusStats stats;
  const auto classes = census_rank3_simple(6, &stats);
  const auto special = from_vectors(triangle_with_centroid());
  Json list = Json::array();
  std::size_t positive = 0, pure = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& m = classes[k];
    const bool pos = is_positively_orientable(m);
    const auto pr = purity_check(m, budget);
    positive += pos;
    pure += pr.pure;
    Json cj = {{"index", k},
               {"circuits", m.num_circuits()},
               {"positively_orientable", pos},
               {"purity", purity_json(pr, m)},
               {"matroid", matroid_to_json(m)}};
    if (is_isomorphic(m, special)) cj["matches"] = "triangle-with-centroid";
    list.push_back(cj);
  }
  const SignedSet bad{from_elements({5}), from_elements({0, 1, 3})};
  const auto s0 = make_collection({from_elements({3, 4, 5}), from_elements({0, 2, 4, 5}), from_elements({1, 2, 3, 4}),
                                   from_elements({0, 1, 2, 3, 5})});
  return {{"normalized_chirotopes", stats.chirotopes},
          {"classes", classes.size()},
          {"positively_orientable", positive},
          {"pure", pure},
          {"not_pure", classes.size() - pure},
          {"per_class", list},
          {"triangle_with_centroid_certificate", certificate_json(special, bad_collection_certificate(special, bad, s0))}};
}

Json cmd_corank2_table(Context& c) {
  const std::vector<std::vector<int>> comps = {{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2},
                                               {3, 1, 1, 1},       {2, 1, 2, 1},    {3, 2, 1},    {3, 3}};
  Json rows = Json::array();
  for (const auto& comp : comps) {
    const auto m = corank2_family(comp);
    const auto r = purity_check(m, budget_of(c.opt));
    rows.push_back({{"composition", comp}, {"elements", m.size()}, {"rank", m.rank()}, {"purity", purity_json(r, m)}});
  }
  return {{"rows", rows}};
}

Json cmd_outerplanar(Context& c) {
  const auto l = require_input(c);
  if (!l.graph) throw ValidationError("outerplanar needs a graph input");
  const auto op = outerplanar(*l.graph);
  const auto pr = purity_check(l.m, budget_of(c.opt));
  Json j = {{"outerplanar", op.outerplanar}, {"pure", pr.pure}, {"agree", op.outerplanar == pr.pure}};
  if (!op.outerplanar) j["minor"] = op.minor;
  return j;
}

Tree tree_from_json(const Json& j) {
  Tree t;
  t.n = j.at("nodes").get<int>();
  for (const auto& e : j.at("edges")) t.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  if (static_cast<int>(t.edges.size()) != t.n - 1) throw ValidationError("a tree on k nodes has k-1 edges");
  return t;
}

Json cmd_coherent(Context& c) {
  const auto& o = c.opt;
  const auto budget = budget_of(o);
  std::optional<Tree> tree;
  std::vector<mpq_class> node_labels;
  if (!o.tree_file.empty()) {
    tree = tree_from_json(c.load_file("tree", o.tree_file));
  } else if (o.named_tree == "ehat6") {
    c.note("named_tree", o.named_tree);
    tree = ehat6_tree();
    node_labels = ehat6_labels();
  } else if (o.named_tree == "dhat") {
    c.note("named_tree", o.named_tree);
    c.note("tree_size", o.tree_size);
    tree = dhat_tree(o.tree_size);
    node_labels = dhat_labels(o.tree_size);
  } else if (!o.named_tree.empty()) {
    throw ValidationError("unknown tree '" + o.named_tree + "'");
  }
  if (tree) {
    const auto r = triangulation_from_tree(*tree);
    const auto rep = all_coherent_check(r.tt, budget);
    Json j = {{"triangles", r.tt.triangles.size()},
              {"subtrees", r.tt.subtrees.size()},
              {"colocalizations", rep.colocalizations},
              {"coherent", rep.coherent},
              {"all_coherent", rep.all_coherent()},
              {"triangulation", triangulation_to_json(r.tt.triangulation)}};
    if (!node_labels.empty()) {
      const auto labels = labels_on_triangles(r, node_labels);
      j["zero_subtrees"] = zero_subtrees(r.tt, labels).size();
      const auto g = noncoherent_perturbation(r.tt, labels);
      j["noncoherent_example"] = g ? gamma_to_json(r.tt, *g) : Json(nullptr);
    }
    return j;
  }
  c.note("a", o.a);
  c.note("b", o.b);
  if (o.a < 0 || o.b < 0) throw ValidationError("a and b must be nonnegative");
  const auto r = t_ab(o.a, o.b);
  const auto rep = all_coherent_check(r.tt, budget);
  return {{"a", o.a},
          {"b", o.b},
          {"formula", big(coherent_count(o.a, o.b))},
          {"colocalizations", rep.colocalizations},
          {"coherent", rep.coherent},
          {"all_coherent", rep.all_coherent()},
          {"arrangement_regions", big(count_regions(arrangement_Aab(o.a, o.b)))},
          {"literal_arrangement_regions", big(count_regions(arrangement_Aab_literal(o.a, o.b)))},
          {"triangulation", triangulation_to_json(r.tt.triangulation)}};
}

void add_input_options(CLI::App* sub, Options& o) {
  sub->add_option("file", o.matroid_file, "matroid JSON file");
  sub->add_option("--vectors", o.vectors_file, "vector configuration JSON file");
  sub->add_option("--graph", o.graph_file, "graph JSON file");
  sub->add_option("--triangulation", o.triangulation_file, "triangulated polygon JSON file");
  sub->add_option("--alternating", o.alternating, "alternating matroid C^{n,d}")->expected(2);
  sub->add_option("--free", o.free, "free matroid on n elements");
  sub->add_option("--corank2", o.composition, "corank-2 family from a composition such as 3,1,1,1");
  sub->add_option("--named", o.named,
                  "pentagon-with-centre, triangle-with-centroid, three-lines, k4 or k23");
}

}  // namespace

int main(int argc, char** argv) {
  Context c;
  auto& o = c.opt;
  if (const char* env = std::getenv("OMSEP_THREADS")) o.threads = std::max(1, std::atoi(env));

  CLI::App app{"Separated collections of oriented matroids"};
  app.require_subcommand(1);
  app.add_option("--max-colocalizations", o.max_colocalizations)->check(CLI::PositiveNumber);
  app.add_option("--max-cliques", o.max_cliques)->check(CLI::PositiveNumber);
  app.add_option("--time-budget", o.seconds, "seconds")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "recorded in the report; no command is randomized");
  app.add_option("--threads", o.threads, "recorded in the report; the library runs on one thread")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "also write the report here");
  app.fallthrough();

  std::map<std::string, std::function<Json(Context&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<Json(Context&)> f) {
    auto* sub = app.add_subcommand(name, help);
    handlers[name] = std::move(f);
    return sub;
  };

  add("validate", "check the circuit axioms of a matroid file", cmd_validate)->add_option("file", o.matroid_file);
  add_input_options(add("analyze", "basic invariants", cmd_analyze), o);
  auto* tl = add("tilings", "colocalizations, maximal collections and tilings", cmd_tilings);
  add_input_options(tl, o);
  tl->add_option("--limit", o.limit, "stop after this many colocalizations");
  tl->add_option("--print", o.print, "collections shown in the report");
  tl->add_option("--svg", o.svg_dir, "directory for rhombus tiling pictures");
  auto* pu = add("purity", "purity verdict", cmd_purity);
  add_input_options(pu, o);
  pu->add_option("--domain", o.domain_file, "collection JSON file used as the domain");
  pu->add_option("--domain-component", o.domain_component, "mutation component index (by size)");
  add_input_options(add("mutation-graph", "components of the mutation graph", cmd_mutation_graph), o);
  add_input_options(add("flips", "flip graph of colocalizations", cmd_flips), o);
  add("census6", "simple rank-3 oriented matroids on six elements", cmd_census6);
  add("corank2-table", "purity of the rank-4 corank-2 families", cmd_corank2_table);
  add_input_options(add("outerplanar", "outerplanarity against graph purity", cmd_outerplanar), o);
  auto* co = add("coherent", "coherent colocalizations of triangulations", cmd_coherent);
  co->add_option("--a", o.a);
  co->add_option("--b", o.b);
  co->add_option("--tree", o.tree_file, "tree JSON file {\"nodes\": k, \"edges\": [[i, j], ...]}");
  co->add_option("--named-tree", o.named_tree, "ehat6 or dhat");
  co->add_option("--tree-size", o.tree_size, "largest node index for dhat");
  auto* ce = add("certificate", "check a bad circuit and bad collection", cmd_certificate);
  add_input_options(ce, o);
  ce->add_option("--circuit", o.circuit, "PLUS|MINUS with comma separated labels");
  ce->add_option("--sets", o.sets, "collection as label lists joined by ';'");
  ce->add_option("--collection", o.collection_file, "collection JSON file");

  CLI11_PARSE(app, argc, argv);
  c.command = app.get_subcommands().front()->get_name();

  Json report;
  report["command"] = c.command;
  int code = 0;
  try {
    report["result"] = handlers.at(c.command)(c);
    if (c.command == "validate" && !report["result"].at("ok").get<bool>()) code = kExitInvalid;
  } catch (const ResourceLimit& e) {
    report["error"] = {{"kind", "resource-limit"}, {"message", e.what()}};
    code = kExitLimit;
  } catch (const ValidationError& e) {
    report["error"] = {{"kind", "validation"}, {"message", e.what()}};
    code = kExitInvalid;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "error"}, {"message", e.what()}};
    code = 1;
  }
  report["config"] = {{"inputs", c.inputs},
                      {"limits",
                       {{"max_colocalizations", o.max_colocalizations},
                        {"max_cliques", o.max_cliques},
                        {"time_budget_seconds", o.seconds}}},
                      {"seed", o.seed},
                      {"threads", o.threads},
                      {"threads_used", 1}};
  report["input_sha256"] = sha256_hex(c.command + '\0' + c.hashed);
  report["exit_code"] = code;
  const auto text = report.dump(2) + "\n";
  std::cout << text;
  if (!o.output.empty()) write_text_file(o.output, text);
  return code;
}
