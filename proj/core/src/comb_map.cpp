#include "tmaps/comb_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tmaps {
namespace {

// Labels the orbits of a permutation; returns the label vector and the orbit
// count. Labels follow the smallest dart of each orbit.
std::pair<std::vector<int>, int> orbit_labels(const std::vector<Dart>& perm) {
  std::vector<int> label(perm.size(), -1);
  int next = 0;
  for (Dart d = 0; d < static_cast<int>(perm.size()); ++d) {
    if (label[d] != -1) continue;
    for (Dart e = d; label[e] == -1; e = perm[e]) label[e] = next;
    ++next;
  }
  return {std::move(label), next};
}

bool is_permutation(const std::vector<Dart>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (Dart v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void append_u16(std::string& bytes, int value) {
  bytes.push_back(static_cast<char>(value & 0xff));
  bytes.push_back(static_cast<char>((value >> 8) & 0xff));
}

// Darts in first-visit order of the BFS from root using sigma then alpha.
std::vector<Dart> traversal_order(const CombinatorialMap& map, Dart root) {
  std::vector<Dart> order;
  order.reserve(map.sigma.size());
  std::vector<int> label(map.sigma.size(), -1);
  label[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Dart d = order[head];
    for (Dart moved : {map.sigma[d], map.alpha[d]}) {
      if (label[moved] == -1) {
        label[moved] = static_cast<int>(order.size());
        order.push_back(moved);
      }
    }
  }
  return order;
}

}  // namespace

std::string MapDiagnostics::summary() const {
  if (ok) {
    std::ostringstream out;
    out << "valid map: V=" << vertices << " E=" << edges << " F=" << faces
        << " genus=" << genus;
    return out.str();
  }
  std::string text = "invalid map:";
  for (const auto& issue : issues) {
    text += " ";
    text += issue;
    text += ";";
  }
  return text;
}

MapDiagnostics validate(const CombinatorialMap& map) {
  MapDiagnostics diag;
  const int d = map.dart_count();
  if (d == 0) diag.issues.push_back("empty dart set");
  if (map.alpha.size() != map.sigma.size())
    diag.issues.push_back("sigma and alpha act on different index sets");
  if (!diag.issues.empty()) return diag;

  if (!is_permutation(map.sigma)) diag.issues.push_back("sigma is not a permutation");
  if (!is_permutation(map.alpha)) diag.issues.push_back("alpha is not a permutation");
  if (!diag.issues.empty()) return diag;

  if (d % 2 != 0) diag.issues.push_back("odd number of darts");
  bool involution = true, fixed_point = false;
  for (Dart x = 0; x < d; ++x) {
    if (map.alpha[map.alpha[x]] != x) involution = false;
    if (map.alpha[x] == x) fixed_point = true;
  }
  if (!involution) diag.issues.push_back("alpha is not an involution");
  if (fixed_point) diag.issues.push_back("alpha has a fixed point");
  if (!diag.issues.empty()) return diag;

  if (static_cast<int>(traversal_order(map, 0).size()) != d)
    diag.issues.push_back("sigma and alpha do not act transitively (disconnected)");
  if (!diag.issues.empty()) return diag;

  diag.vertices = vertex_count(map);
  diag.edges = d / 2;
  diag.faces = face_count(map);
  diag.genus = (2 - diag.vertices + diag.edges - diag.faces) / 2;
  diag.ok = true;
  return diag;
}

void require_valid(const CombinatorialMap& map) {
  MapDiagnostics diag = validate(map);
  if (!diag.ok) throw ValidationError(diag);
}

std::vector<int> vertex_of_darts(const CombinatorialMap& map) {
  return orbit_labels(map.sigma).first;
}

std::vector<int> face_of_darts(const CombinatorialMap& map) {
  std::vector<Dart> phi(map.sigma.size());
  for (Dart x = 0; x < map.dart_count(); ++x) phi[x] = map.sigma[map.alpha[x]];
  return orbit_labels(phi).first;
}

int vertex_count(const CombinatorialMap& map) {
  return orbit_labels(map.sigma).second;
}

int edge_count(const CombinatorialMap& map) { return map.dart_count() / 2; }

int face_count(const CombinatorialMap& map) {
  std::vector<Dart> phi(map.sigma.size());
  for (Dart x = 0; x < map.dart_count(); ++x) phi[x] = map.sigma[map.alpha[x]];
  return orbit_labels(phi).second;
}

int genus(const CombinatorialMap& map) {
  return (2 - vertex_count(map) + edge_count(map) - face_count(map)) / 2;
}

bool is_cubic(const CombinatorialMap& map) {
  for (Dart x = 0; x < map.dart_count(); ++x) {
    if (map.sigma[map.sigma[map.sigma[x]]] != x || map.sigma[x] == x ||
        map.sigma[map.sigma[x]] == x) {
      return false;
    }
  }
  return map.dart_count() > 0;
}

bool is_dual_simple(const CombinatorialMap& map) {
  const std::vector<int> face = face_of_darts(map);
  std::vector<std::pair<int, int>> flanks;
  for (Dart x = 0; x < map.dart_count(); ++x) {
    if (x > map.alpha[x]) continue;
    int a = face[x], b = face[map.alpha[x]];
    if (a == b) return false;  // dual loop
    flanks.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(flanks.begin(), flanks.end());
  return std::adjacent_find(flanks.begin(), flanks.end()) == flanks.end();
}

std::vector<bool> dart_set(const CombinatorialMap& map,
                           const std::vector<Dart>& darts) {
  std::vector<bool> set(map.sigma.size(), false);
  for (Dart x : darts) set[x] = true;
  return set;
}

MapDiagnostics validate(const TreeRootedCubicMap& t) {
  MapDiagnostics diag = validate(t.map);
  if (!diag.ok) return diag;

  auto fail = [&diag](std::string msg) {
    diag.ok = false;
    diag.issues.push_back(std::move(msg));
  };

  if (!is_cubic(t.map)) fail("not cubic (a sigma-cycle has length != 3)");
  if (diag.genus != 0) fail("genus is not 0");
  if (t.root_dart < 0 || t.root_dart >= t.map.dart_count())
    fail("root dart out of range");

  const int d = t.map.dart_count();
  std::vector<bool> in_tree(d, false);
  for (Dart x : t.tree_darts) {
    if (x < 0 || x >= d) {
      fail("tree dart out of range");
      return diag;
    }
    in_tree[x] = true;
  }
  for (Dart x = 0; x < d; ++x) {
    if (in_tree[x] && !in_tree[t.map.alpha[x]]) {
      fail("tree dart set not closed under alpha");
      break;
    }
  }
  if (diag.ok && in_tree[t.root_dart]) fail("root dart lies in the tree");

  if (diag.ok) {
    const std::vector<int> vertex = vertex_of_darts(t.map);
    const int v = diag.vertices;
    UnionFind uf(v);
    int tree_edges = 0;
    bool cycle = false, loop = false;
    for (Dart x = 0; x < d; ++x) {
      if (!in_tree[x] || x > t.map.alpha[x]) continue;
      ++tree_edges;
      if (vertex[x] == vertex[t.map.alpha[x]]) loop = true;
      else if (!uf.unite(vertex[x], vertex[t.map.alpha[x]])) cycle = true;
    }
    if (loop) fail("tree contains a loop edge");
    if (cycle) fail("tree contains a cycle");
    if (tree_edges != v - 1) fail("tree does not have V-1 edges");
  }
  return diag;
}

void require_valid(const TreeRootedCubicMap& t) {
  MapDiagnostics diag = validate(t);
  if (!diag.ok) throw ValidationError(diag);
}

CanonicalCode canonical_code_rooted(const CombinatorialMap& map,
                                    const std::vector<Dart>& tree_darts,
                                    Dart root_dart) {
  const int d = map.dart_count();
  if (d > 0xffff) throw std::invalid_argument("canonical code limited to 65535 darts");
  const std::vector<Dart> order = traversal_order(map, root_dart);
  std::vector<int> label(d, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) label[order[i]] = i;

  CanonicalCode code;
  code.bytes.reserve(6 * d + 8);
  append_u16(code.bytes, d);
  for (Dart x : order) {
    append_u16(code.bytes, label[map.sigma[x]]);
    append_u16(code.bytes, label[map.alpha[x]]);
  }
  const std::vector<bool> in_tree = dart_set(map, tree_darts);
  code.bytes.push_back(tree_darts.empty() ? 'm' : 't');
  if (!tree_darts.empty()) {
    for (Dart x : order) code.bytes.push_back(in_tree[x] ? '1' : '0');
  }
  return code;
}

CanonicalCode canonical_code_unrooted(const CombinatorialMap& map,
                                      const std::vector<Dart>& tree_darts) {
  CanonicalCode best = canonical_code_rooted(map, tree_darts, 0);
  for (Dart x = 1; x < map.dart_count(); ++x) {
    best = std::min(best, canonical_code_rooted(map, tree_darts, x));
  }
  return best;
}

namespace {

// Attempts to extend dart0 -> target to a full automorphism; the image of
// every dart is forced by commutation with sigma and alpha.
bool extends_to_automorphism(const CombinatorialMap& map, Dart target,
                             const std::vector<bool>* tree,
                             std::vector<Dart>& image) {
  const int d = map.dart_count();
  std::fill(image.begin(), image.end(), -1);
  std::vector<bool> used(d, false);
  std::vector<Dart> stack{0};
  image[0] = target;
  used[target] = true;
  while (!stack.empty()) {
    const Dart x = stack.back();
    stack.pop_back();
    const Dart gx = image[x];
    if (tree && (*tree)[x] != (*tree)[gx]) return false;
    const Dart pairs[2][2] = {{map.sigma[x], map.sigma[gx]},
                              {map.alpha[x], map.alpha[gx]}};
    for (const auto& p : pairs) {
      const Dart from = p[0], to = p[1];
      if (image[from] == -1) {
        if (used[to]) return false;
        image[from] = to;
        used[to] = true;
        stack.push_back(from);
      } else if (image[from] != to) {
        return false;
      }
    }
  }
  return true;
}

int count_automorphisms(const CombinatorialMap& map,
                        const std::vector<bool>* tree) {
  const int d = map.dart_count();
  std::vector<Dart> image(d);
  int count = 0;
  for (Dart target = 0; target < d; ++target) {
    if (extends_to_automorphism(map, target, tree, image)) ++count;
  }
  return count;
}

}  // namespace

int automorphism_count(const CombinatorialMap& map) {
  return count_automorphisms(map, nullptr);
}

int automorphism_count_tmap(const CombinatorialMap& map,
                            const std::vector<Dart>& tree_darts) {
  const std::vector<bool> tree = dart_set(map, tree_darts);
  return count_automorphisms(map, &tree);
}

std::vector<std::vector<Dart>> spanning_trees(const CombinatorialMap& map) {
  const std::vector<int> vertex = vertex_of_darts(map);
  const int v = vertex_count(map);

  // Non-loop edges as (dart, partner), ordered by smaller dart.
  std::vector<std::pair<Dart, Dart>> edges;
  for (Dart x = 0; x < map.dart_count(); ++x) {
    if (x < map.alpha[x] && vertex[x] != vertex[map.alpha[x]]) {
      edges.emplace_back(x, map.alpha[x]);
    }
  }

  std::vector<std::vector<Dart>> trees;
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == v - 1) {
      UnionFind uf(v);
      for (int idx : chosen) uf.unite(vertex[edges[idx].first], vertex[edges[idx].second]);
      int components = 0;
      for (int i = 0; i < v; ++i) components += uf.find(i) == i;
      if (components == 1) {
        std::vector<Dart> darts;
        darts.reserve(chosen.size() * 2);
        for (int idx : chosen) {
          darts.push_back(edges[idx].first);
          darts.push_back(edges[idx].second);
        }
        std::sort(darts.begin(), darts.end());
        trees.push_back(std::move(darts));
      }
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return trees;
}

BigInt kirchhoff_spanning_tree_count(const CombinatorialMap& map) {
  const std::vector<int> vertex = vertex_of_darts(map);
  const int v = vertex_count(map);
  if (v == 1) return 1;

  // Laplacian with loops discarded, reduced by deleting row/column 0.
  const int m = v - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (Dart x = 0; x < map.dart_count(); ++x) {
    if (x > map.alpha[x]) continue;
    const int p = vertex[x], q = vertex[map.alpha[x]];
    if (p == q) continue;
    if (p > 0) a[p - 1][p - 1] += 1;
    if (q > 0) a[q - 1][q - 1] += 1;
    if (p > 0 && q > 0) {
      a[p - 1][q - 1] -= 1;
      a[q - 1][p - 1] -= 1;
    }
  }

  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int row = col; row < m; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < m; ++row) {
      for (int j = col + 1; j < m; ++j) {
        a[row][j] = (a[col][col] * a[row][j] - a[row][col] * a[col][j]) / prev;
      }
      a[row][col] = 0;
    }
    prev = a[col][col];
  }
  return sign * a[m - 1][m - 1];
}

}  // namespace tmaps
