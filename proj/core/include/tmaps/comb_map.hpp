#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmaps/counting.hpp"

namespace tmaps {

using Dart = int;

// An embedded graph on a closed oriented surface, encoded as a pair of
// permutations on darts (half-edges): sigma is the counterclockwise
// successor around each vertex, alpha the fixed-point-free involution
// pairing the two darts of each edge. Vertices are the cycles of sigma,
// edges the cycles of alpha, faces the cycles of sigma∘alpha.
struct CombinatorialMap {
  std::vector<Dart> sigma;
  std::vector<Dart> alpha;

  int dart_count() const { return static_cast<int>(sigma.size()); }

  bool operator==(const CombinatorialMap&) const = default;
};

struct MapDiagnostics {
  bool ok = false;
  std::vector<std::string> issues;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;

  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const MapDiagnostics& diag)
      : std::runtime_error(diag.summary()), diagnostics(diag) {}
  MapDiagnostics diagnostics;
};

// Checks every CombinatorialMap invariant; lists each violated one.
MapDiagnostics validate(const CombinatorialMap& map);
void require_valid(const CombinatorialMap& map);  // throws ValidationError

// Orbit labelings. Each returns a vector indexed by dart; labels are dense
// and assigned in order of the smallest dart in each orbit.
std::vector<int> vertex_of_darts(const CombinatorialMap& map);
std::vector<int> face_of_darts(const CombinatorialMap& map);

int vertex_count(const CombinatorialMap& map);
int edge_count(const CombinatorialMap& map);
int face_count(const CombinatorialMap& map);

// (2 - V + E - F) / 2 for a valid map.
int genus(const CombinatorialMap& map);

// True iff every sigma-cycle has length exactly 3.
bool is_cubic(const CombinatorialMap& map);

// True iff the dual triangulation is simple: no edge has the same face on
// both sides, and no two edges separate the same pair of faces. This is the
// condition under which the dual triangulation is counted by tutte_T.
bool is_dual_simple(const CombinatorialMap& map);

// A genus-0 cubic map with a marked spanning tree (as an alpha-closed dart
// set) and a marked root dart outside the tree.
struct TreeRootedCubicMap {
  CombinatorialMap map;
  std::vector<Dart> tree_darts;  // sorted
  Dart root_dart = 0;

  int n() const { return map.dart_count() / 6; }  // vertex count is 2n

  bool operator==(const TreeRootedCubicMap&) const = default;
};

MapDiagnostics validate(const TreeRootedCubicMap& t);
void require_valid(const TreeRootedCubicMap& t);

// Complete invariant of a rooted structure: relabels darts in first-visit
// order of a traversal from the root alternating sigma and alpha moves, then
// serializes the relabeled permutations and the tree-membership bitmap.
// Equal codes <=> there is a dart bijection commuting with sigma and alpha,
// fixing the root and preserving tree membership.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code_rooted(const CombinatorialMap& map,
                                    const std::vector<Dart>& tree_darts,
                                    Dart root_dart);

// Root-independent invariant: minimum of the rooted codes over all darts.
CanonicalCode canonical_code_unrooted(const CombinatorialMap& map,
                                      const std::vector<Dart>& tree_darts = {});

// Order of the group of dart permutations commuting with sigma and alpha
// (orientation-preserving map automorphisms). Computed by testing, for each
// candidate image of dart 0, whether the induced dart bijection is
// consistent.
int automorphism_count(const CombinatorialMap& map);

// Order of the subgroup preserving tree_darts setwise.
int automorphism_count_tmap(const CombinatorialMap& map,
                            const std::vector<Dart>& tree_darts);

// Every spanning tree of the underlying multigraph, each as a sorted
// alpha-closed dart set. Loop edges never participate. A one-vertex map
// yields the empty tree once.
std::vector<std::vector<Dart>> spanning_trees(const CombinatorialMap& map);

// Matrix-tree count of spanning trees (independent of spanning_trees).
BigInt kirchhoff_spanning_tree_count(const CombinatorialMap& map);

// Helpers shared by the enumeration and bijection code.
std::vector<bool> dart_set(const CombinatorialMap& map,
                           const std::vector<Dart>& darts);

}  // namespace tmaps
