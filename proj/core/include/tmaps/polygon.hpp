#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tmaps {

// A convex polygon with corners 0..k-1 counterclockwise, side s joining
// corners s and s+1 (mod k), side 0 marked, triangulated by k-3 pairwise
// noncrossing diagonals into k-2 triangles.
struct MarkedTriangulation {
  int k = 0;
  std::vector<std::pair<int, int>> diagonals;  // normalized i<j, sorted

  bool operator==(const MarkedTriangulation&) const = default;
};

// Fixed-point-free involution on side indices 0..k-1. Gluing side s to
// pair_of[s] with the orientation-reversing identification yields a closed
// oriented surface.
struct SidePairing {
  int k = 0;
  std::vector<int> pair_of;

  bool operator==(const SidePairing&) const = default;
};

std::vector<std::string> triangulation_issues(const MarkedTriangulation& t);
std::vector<std::string> pairing_issues(const SidePairing& p);
void require_valid(const MarkedTriangulation& t);  // throws std::invalid_argument
void require_valid(const SidePairing& p);

// Each triangulation exactly once; |result| = catalan(k-2).
std::vector<MarkedTriangulation> enumerate_triangulations(int k);

// All (k-1)!! fixed-point-free involutions on sides.
std::vector<SidePairing> enumerate_all_pairings(int k);

// The pairings whose chords are pairwise noncrossing; |result| = catalan(k/2).
std::vector<SidePairing> enumerate_noncrossing_pairings(int k);

// Genus of the closed oriented surface obtained by gluing paired sides,
// via corner-class identification: V corner classes, E = k/2 edges, F = 1.
int pairing_genus(const SidePairing& p);

// True iff no two chords (s, pair_of[s]) interleave cyclically.
// Equivalent to pairing_genus(p) == 0.
bool is_noncrossing(const SidePairing& p);

// The k-2 triangles as sorted corner triples, in lexicographic order.
std::vector<std::array<int, 3>> triangles(const MarkedTriangulation& t);

// Pairs of triangle indices (into triangles(t)) adjacent across a diagonal;
// forms a tree on the k-2 triangles.
std::vector<std::pair<int, int>> dual_tree_edges(const MarkedTriangulation& t);

// Three-line text form:
//   k=<k>
//   <i>-<j> ...   (diagonals)
//   <s>:<t> ...   (pairing)
std::string polygon_to_text(const MarkedTriangulation& t, const SidePairing& p);
std::pair<MarkedTriangulation, SidePairing> polygon_from_text(const std::string& text);

}  // namespace tmaps
