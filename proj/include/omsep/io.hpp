#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "omsep/construct.hpp"
#include "omsep/graphsep.hpp"
#include "omsep/oriented_matroid.hpp"
#include "omsep/separation.hpp"
#include "omsep/tilings.hpp"

namespace omsep {

// Object keys are kept sorted, so dumps are byte-stable.
using Json = nlohmann::json;

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Matroid file: {"elements": [labels], "circuits": [{"plus": [...], "minus": [...]}]}.
struct MatroidFile {
  std::vector<std::string> labels;
  std::vector<SignedSet> circuits;  // as listed
};
MatroidFile matroid_file_from_json(const Json& j);
// Validates unless told otherwise; throws ValidationError on axiom failure.
OrientedMatroid matroid_from_json(const Json& j, bool validate = true);
Json matroid_to_json(const OrientedMatroid& m);
Json validation_to_json(const ValidationReport& r, const std::vector<std::string>& labels);

// Vector file: {"dimension": d, "columns": [["p/q", ...], ...], "labels": [...]}.
VectorConfiguration vectors_from_json(const Json& j);
Json vectors_to_json(const VectorConfiguration& v);

// Graph file: {"vertices": k, "edges": [{"label": s, "tail": i, "head": j}]}.
DirectedGraph digraph_from_json(const Json& j);
Json digraph_to_json(const DirectedGraph& g);
// Same file read as an undirected graph; tail and head only name endpoints.
UndirectedGraph undirected_from_json(const Json& j);

// Subsets as label arrays.
Json subset_to_json(Bits s, const std::vector<std::string>& labels);
Bits subset_from_json(const Json& j, const std::vector<std::string>& labels);
Json collection_to_json(const Collection& s, const std::vector<std::string>& labels);
Collection collection_from_json(const Json& j, const std::vector<std::string>& labels);

// SignMap file: {"<plus labels>|<minus labels>": "+" | "-" | "0"} keyed by
// canonical circuits.
Json signmap_to_json(const OrientedMatroid& m, const SignMap& sigma);
SignMap signmap_from_json(const OrientedMatroid& m, const Json& j);

// Triangulation file: {"polygon": k, "diagonals": [[i, j], ...]}.
Triangulation triangulation_from_json(const Json& j);
Json triangulation_to_json(const Triangulation& t);

// Gamma file: {"<comma separated triangle indices>": "+" | "-"}.
Json gamma_to_json(const TriangulationTree& tt, const Gamma& gamma);
Gamma gamma_from_json(const TriangulationTree& tt, const Json& j);

Json signed_set_to_json(const SignedSet& x, const std::vector<std::string>& labels);
Json tiling_to_json(const OrientedMatroid& m, const std::vector<Tile>& tiles);

}  // namespace omsep
