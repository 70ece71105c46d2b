#pragma once

#include <json.hpp>
#include <string>

#include "raag/blocks.hpp"
#include "raag/graph.hpp"
#include "raag/jsj.hpp"
#include "raag/splitting.hpp"

namespace raag::cli {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSubset& s);
Json to_json(const SimplicialGraph& g);
Json to_json(const Witness& w);
Json to_json(const SplitReport& report);
Json to_json(const GraphOfGroups& gog);

/// Defining graph with cut vertices filled black.
std::string to_dot(const SimplicialGraph& g);
/// Base graph of a decomposition; edges labeled by edge-group generator,
/// loops by stable letter.
std::string to_dot(const GraphOfGroups& gog);

}  // namespace raag::cli
