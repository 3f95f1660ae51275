#pragma once

// JSON and DOT encodings of the toolkit's values, plus the run manifest that
// accompanies every emitted result.

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cubmon/artin_graph.hpp"
#include "cubmon/curve_pattern.hpp"
#include "cubmon/integer_matrix.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "cubmon/realizability.hpp"
#include "cubmon/ribbon.hpp"
#include "cubmon/symplectic_rep.hpp"

namespace cubmon {

using nlohmann::json;

std::string_view version();

/// {"k":4,"vertices":["0000",...],"edges":[[i,j],...]}
json graph_to_json(const ArtinGraph& g);
/// Rebuilds the graph and checks the edge list against it.
ArtinGraph graph_from_json(const json& j);
std::string graph_to_dot(const ArtinGraph& g);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json lattice_to_json(const SkewLattice& l);
json quotient_to_json(const QuotientLattice& q);

json relation_report_to_json(const RelationReport& r, const ArtinGraph& g);
json witnesses_to_json(const std::vector<ConjugacyWitness>& w, const ArtinGraph& g);
json refinement_to_json(const QuadraticRefinement& qr, const ArtinGraph& g);
/// Transvection matrices per vertex, keyed by bit-string.
json representation_to_json(const TransvectionRep& rep, const ArtinGraph& g);

/// {"curves":[...],"intersections":[["a","b"],...]} with an optional
/// "vertices":{"a":"0001",...}.
json pattern_to_json(const CurvePattern& p);
CurvePattern pattern_from_json(const json& j);

/// {"orders":{"a":["b","h"],...},"bits":[{"pair":["a","b"],"bit":0},...]}
json structure_to_json(const CurvePattern& p, const RibbonStructure& r);
RibbonStructure structure_from_json(const CurvePattern& p, const json& j);

json surface_to_json(const RibbonSurface& s);
json result_to_json(const CurvePattern& p, const MinGenusResult& r);

struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::string toolkit_version{version()};
  std::map<std::string, std::string> input_hashes;
  double wall_seconds = 0.0;
  json verdicts = json::object();
};

json manifest_to_json(const RunManifest& m);
/// FNV-1a of the compact dump of `j` (object keys are sorted by the encoder).
std::string content_hash(const json& j);

}  // namespace cubmon
