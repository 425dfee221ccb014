#pragma once

#include <optional>
#include <string>

#include "tmaps/comb_map.hpp"

namespace tmaps {

// A map plus optional tree marking and root, as carried by the JSON format.
struct MapRecord {
  CombinatorialMap map;
  std::vector<Dart> tree_darts;  // empty when absent
  std::optional<Dart> root_dart;

  bool operator==(const MapRecord&) const = default;
};

MapRecord to_record(const TreeRootedCubicMap& t);
TreeRootedCubicMap to_tree_rooted(const MapRecord& record);  // validates

// JSON with fields "n_darts", "sigma_cycles", "alpha_pairs", "tree_darts",
// "root_dart". Round-trips losslessly; from_json rejects malformed
// permutations with the validate() diagnostics.
std::string to_json(const MapRecord& record);
MapRecord map_from_json(const std::string& text);

// Graphviz text; tree edges bold, the root as a directed styled edge,
// parallel edges and loops preserved.
std::string to_dot(const MapRecord& record);

}  // namespace tmaps
