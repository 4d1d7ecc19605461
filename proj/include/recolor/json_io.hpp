#pragma once

#include "recolor/coloring.hpp"
#include "recolor/frozen_graph.hpp"
#include "recolor/graph.hpp"
#include "recolor/rst_reduction.hpp"
#include "recolor/sliding_tokens.hpp"
#include "recolor/split_reduction.hpp"

#include <json.hpp>

#include <string>

namespace recolor {

// All emission uses ordered JSON so files are byte-stable; vertex-keyed maps
// are written in ascending id order using the vertex labels.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json coloring_to_json(const Graph& g, const Coloring& col);
Coloring coloring_from_json(const Graph& g, const Json& j);

Json lists_to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, const Json& j);

Json sequence_to_json(const Graph& g, const ReconfigSequence& seq);
ReconfigSequence sequence_from_json(const Graph& g, const Json& j);

Json instance_to_json(const ReconfigInstance& inst);
ReconfigInstance instance_from_json(const Json& j);

Json st_to_json(const STInstance& inst);
STInstance st_from_json(const Json& j);

Json moves_to_json(const TSMoveSequence& moves);
TSMoveSequence moves_from_json(const Json& j);

// Reduction bundles: {"instance": ..., "maps": ..., "meta": {...}} with
// meta.construction naming the producing operation.
Json restrict_bundle_to_json(const STInstance& source, const RestrictResult& result);
STInstance restrict_bundle_instance(const Json& j);

Json rst_bundle_to_json(const RstToListArtifact& art);
RstToListArtifact rst_bundle_from_json(const Json& j);

Json plain_bundle_to_json(const ListToPlainArtifact& art, const std::string& construction);
ListToPlainArtifact plain_bundle_from_json(const Json& j);

Json split_bundle_to_json(const SplitArtifact& art);
SplitArtifact split_bundle_from_json(const Json& j);

// File helpers shared by the command-line tool and tests.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace recolor
