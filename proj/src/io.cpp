#include "omsep/io.hpp"

#include <fstream>
#include <sstream>

namespace omsep {

namespace {

std::string sign_string(Sign s) { return std::string(1, sign_char(s)); }

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-" || s == "−") return Sign::Minus;
  if (s == "0") return Sign::Zero;
  throw ValidationError("bad sign '" + s + "'");
}

int label_index(const std::vector<std::string>& labels, const std::string& l) {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == l) return i;
  throw ValidationError("unknown element label '" + l + "'");
}

std::string label_of(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string join_indices(Bits s) {
  std::string out;
  for (int e : elements(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

MatroidFile matroid_file_from_json(const Json& j) {
  MatroidFile f;
  if (!j.is_object() || !j.contains("elements") || !j.contains("circuits"))
    throw ValidationError("matroid file needs \"elements\" and \"circuits\"");
  for (const auto& l : j.at("elements")) f.labels.push_back(label_of(l));
  if (f.labels.size() > static_cast<std::size_t>(kMaxElements)) throw ValidationError("more than 63 elements");
  for (const auto& c : j.at("circuits")) {
    SignedSet x;
    for (const auto& l : c.value("plus", Json::array())) x.plus |= bit(label_index(f.labels, label_of(l)));
    for (const auto& l : c.value("minus", Json::array())) x.minus |= bit(label_index(f.labels, label_of(l)));
    if (x.plus & x.minus) throw ValidationError("element on both sides of a circuit");
    f.circuits.push_back(x);
  }
  return f;
}

OrientedMatroid matroid_from_json(const Json& j, bool validate) {
  auto f = matroid_file_from_json(j);
  return OrientedMatroid(static_cast<int>(f.labels.size()), f.circuits, validate, f.labels);
}

Json signed_set_to_json(const SignedSet& x, const std::vector<std::string>& labels) {
  return {{"plus", subset_to_json(x.plus, labels)}, {"minus", subset_to_json(x.minus, labels)}};
}

Json matroid_to_json(const OrientedMatroid& m) {
  Json cs = Json::array();
  for (const auto& c : m.circuits()) cs.push_back(signed_set_to_json(c, m.labels()));
  return {{"elements", m.labels()}, {"circuits", cs}};
}

Json validation_to_json(const ValidationReport& r, const std::vector<std::string>& labels) {
  Json j = {{"ok", r.ok()}, {"c0", r.c0}, {"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"detail", r.detail}};
  if (r.x) j["witness_x"] = signed_set_to_json(*r.x, labels);
  if (r.y) j["witness_y"] = signed_set_to_json(*r.y, labels);
  if (r.e >= 0) j["witness_element"] = r.e < static_cast<int>(labels.size()) ? labels[r.e] : std::to_string(r.e + 1);
  return j;
}

// ---------------------------------------------------------------------------

VectorConfiguration vectors_from_json(const Json& j) {
  VectorConfiguration v;
  v.dimension = j.at("dimension").get<int>();
  for (const auto& col : j.at("columns")) {
    std::vector<mpq_class> c;
    for (const auto& x : col) c.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
    if (static_cast<int>(c.size()) != v.dimension) throw ValidationError("column length differs from dimension");
    v.columns.push_back(std::move(c));
  }
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) v.labels.push_back(label_of(l));
  if (!v.labels.empty() && v.labels.size() != v.columns.size()) throw ValidationError("label count mismatch");
  return v;
}

Json vectors_to_json(const VectorConfiguration& v) {
  Json cols = Json::array();
  for (const auto& c : v.columns) {
    Json col = Json::array();
    for (const auto& x : c) col.push_back(format_rational(x));
    cols.push_back(col);
  }
  Json j = {{"dimension", v.dimension}, {"columns", cols}};
  j["labels"] = v.labels.empty() ? default_labels(v.size()) : v.labels;
  return j;
}

DirectedGraph digraph_from_json(const Json& j) {
  DirectedGraph g;
  g.vertices = j.at("vertices").get<int>();
  int k = 0;
  for (const auto& e : j.at("edges")) {
    ++k;
    DirectedGraph::Edge edge{e.at("tail").get<int>(), e.at("head").get<int>(),
                             e.contains("label") ? label_of(e.at("label")) : std::to_string(k)};
    if (edge.tail < 0 || edge.head < 0 || edge.tail >= g.vertices || edge.head >= g.vertices)
      throw ValidationError("edge endpoint out of range");
    g.edges.push_back(edge);
  }
  if (g.edges.size() > static_cast<std::size_t>(kMaxElements)) throw ValidationError("more than 63 edges");
  return g;
}

Json digraph_to_json(const DirectedGraph& g) {
  Json es = Json::array();
  for (const auto& e : g.edges) es.push_back({{"label", e.label}, {"tail", e.tail}, {"head", e.head}});
  return {{"vertices", g.vertices}, {"edges", es}};
}

UndirectedGraph undirected_from_json(const Json& j) {
  const auto d = digraph_from_json(j);
  UndirectedGraph g;
  g.vertices = d.vertices;
  for (const auto& e : d.edges) {
    if (e.tail == e.head) throw ValidationError("self-loops are not supported for undirected graphs");
    g.edges.emplace_back(e.tail, e.head);
    g.labels.push_back(e.label);
  }
  return g;
}

// ---------------------------------------------------------------------------

Json subset_to_json(Bits s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (int e : elements(s)) out.push_back(e < static_cast<int>(labels.size()) ? labels[e] : std::to_string(e + 1));
  return out;
}

Bits subset_from_json(const Json& j, const std::vector<std::string>& labels) {
  Bits s = 0;
  for (const auto& l : j) s |= bit(label_index(labels, label_of(l)));
  return s;
}

Json collection_to_json(const Collection& s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (Bits x : s) out.push_back(subset_to_json(x, labels));
  return out;
}

Collection collection_from_json(const Json& j, const std::vector<std::string>& labels) {
  std::vector<Bits> sets;
  for (const auto& x : j) sets.push_back(subset_from_json(x, labels));
  return make_collection(std::move(sets));
}

Json signmap_to_json(const OrientedMatroid& m, const SignMap& sigma) {
  Json out = Json::object();
  for (int i = 0; i < m.num_circuits(); ++i) out[to_string(m.circuits()[i], m.labels())] = sign_string(sigma.at(i));
  return out;
}

SignMap signmap_from_json(const OrientedMatroid& m, const Json& j) {
  SignMap sigma(m.num_circuits(), Sign::Zero);
  std::vector<char> seen(m.num_circuits(), 0);
  for (int i = 0; i < m.num_circuits(); ++i) {
    const auto key = to_string(m.circuits()[i], m.labels());
    const auto neg = to_string(-m.circuits()[i], m.labels());
    if (j.contains(key)) {
      sigma[i] = parse_sign(j.at(key).get<std::string>());
      seen[i] = 1;
    } else if (j.contains(neg)) {
      sigma[i] = -parse_sign(j.at(neg).get<std::string>());
      seen[i] = 1;
    }
  }
  for (int i = 0; i < m.num_circuits(); ++i)
    if (!seen[i]) throw ValidationError("sign map misses circuit " + to_string(m.circuits()[i], m.labels()));
  if (j.size() != static_cast<std::size_t>(m.num_circuits())) throw ValidationError("sign map has unknown keys");
  return sigma;
}

// ---------------------------------------------------------------------------

Triangulation triangulation_from_json(const Json& j) {
  Triangulation t;
  t.polygon = j.at("polygon").get<int>();
  if (t.polygon < 3) throw ValidationError("polygon needs at least 3 vertices");
  for (const auto& d : j.at("diagonals")) t.diagonals.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
  if (static_cast<int>(t.diagonals.size()) != t.polygon - 3) throw ValidationError("a triangulation has k-3 diagonals");
  return t;
}

Json triangulation_to_json(const Triangulation& t) {
  Json ds = Json::array();
  for (auto [u, v] : t.diagonals) ds.push_back({u, v});
  return {{"polygon", t.polygon}, {"diagonals", ds}};
}

Json gamma_to_json(const TriangulationTree& tt, const Gamma& gamma) {
  Json out = Json::object();
  for (std::size_t i = 0; i < tt.subtrees.size(); ++i) out[join_indices(tt.subtrees[i])] = sign_string(gamma.at(i));
  return out;
}

Gamma gamma_from_json(const TriangulationTree& tt, const Json& j) {
  Gamma g(tt.subtrees.size(), Sign::Zero);
  for (std::size_t i = 0; i < tt.subtrees.size(); ++i) {
    const auto key = join_indices(tt.subtrees[i]);
    if (!j.contains(key)) throw ValidationError("gamma misses subtree " + key);
    g[i] = parse_sign(j.at(key).get<std::string>());
  }
  if (j.size() != tt.subtrees.size()) throw ValidationError("gamma has unknown keys");
  return g;
}

Json tiling_to_json(const OrientedMatroid& m, const std::vector<Tile>& tiles) {
  Json out = Json::array();
  for (const auto& t : tiles) {
    Json tj = signed_set_to_json(t, m.labels());
    tj["span"] = subset_to_json(tile_span(t, m.ground()), m.labels());
    out.push_back(tj);
  }
  return out;
}

}  // namespace omsep
