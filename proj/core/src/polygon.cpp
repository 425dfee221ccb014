#include "tmaps/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tmaps {
namespace {

std::pair<int, int> normalized(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

// Chords {a,b}, {c,d} on a cycle of k points cross iff exactly one of c, d
// lies strictly between a and b.
bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto strictly_between = [](int lo, int hi, int v) { return lo < v && v < hi; };
  return strictly_between(x.first, x.second, y.first) !=
         strictly_between(x.first, x.second, y.second);
}

void throw_if_issues(const std::vector<std::string>& issues, const char* what) {
  if (issues.empty()) return;
  std::string msg = what;
  for (const auto& issue : issues) {
    msg += ": ";
    msg += issue;
  }
  throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> triangulation_issues(const MarkedTriangulation& t) {
  std::vector<std::string> issues;
  if (t.k < 3) {
    issues.push_back("k must be at least 3");
    return issues;
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : t.diagonals) {
    if (a < 0 || b < 0 || a >= t.k || b >= t.k) {
      issues.push_back("diagonal endpoint out of range");
      return issues;
    }
    auto d = normalized(a, b);
    if (d.first == d.second) issues.push_back("degenerate diagonal");
    if ((d.second - d.first) == 1 || (d.first == 0 && d.second == t.k - 1))
      issues.push_back("diagonal coincides with a side");
    if (!seen.insert(d).second) issues.push_back("duplicate diagonal");
  }
  if (!issues.empty()) return issues;
  std::vector<std::pair<int, int>> diags(seen.begin(), seen.end());
  for (std::size_t i = 0; i < diags.size(); ++i) {
    for (std::size_t j = i + 1; j < diags.size(); ++j) {
      if (chords_cross(diags[i], diags[j])) {
        issues.push_back("diagonals cross");
        return issues;
      }
    }
  }
  if (static_cast<int>(diags.size()) != t.k - 3)
    issues.push_back("expected k-3 diagonals");
  return issues;
}

std::vector<std::string> pairing_issues(const SidePairing& p) {
  std::vector<std::string> issues;
  if (p.k < 2 || p.k % 2 != 0) issues.push_back("k must be even and at least 2");
  if (static_cast<int>(p.pair_of.size()) != p.k) {
    issues.push_back("pair_of size mismatch");
    return issues;
  }
  for (int s = 0; s < p.k; ++s) {
    if (p.pair_of[s] < 0 || p.pair_of[s] >= p.k) {
      issues.push_back("pair index out of range");
      return issues;
    }
    if (p.pair_of[s] == s) issues.push_back("pairing has a fixed point");
    if (p.pair_of[p.pair_of[s]] != s) issues.push_back("pairing is not an involution");
  }
  return issues;
}

void require_valid(const MarkedTriangulation& t) {
  throw_if_issues(triangulation_issues(t), "invalid triangulation");
}

void require_valid(const SidePairing& p) {
  throw_if_issues(pairing_issues(p), "invalid pairing");
}

std::vector<MarkedTriangulation> enumerate_triangulations(int k) {
  if (k < 3) throw std::invalid_argument("enumerate_triangulations requires k >= 3");

  // Depth-first over apex choices: each pending chord (lo, hi) bounds the
  // sub-polygon on corners lo..hi, split by the apex of its triangle.
  std::vector<MarkedTriangulation> result;
  std::vector<std::pair<int, int>> acc;
  auto gen = [&](auto&& self, std::vector<std::pair<int, int>> pending) -> void {
    while (!pending.empty() && pending.back().second - pending.back().first < 2) {
      pending.pop_back();
    }
    if (pending.empty()) {
      MarkedTriangulation t{k, acc};
      std::sort(t.diagonals.begin(), t.diagonals.end());
      result.push_back(std::move(t));
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    for (int apex = lo + 1; apex < hi; ++apex) {
      std::size_t added = 0;
      if (apex - lo >= 2) {
        acc.emplace_back(lo, apex);
        ++added;
      }
      if (hi - apex >= 2) {
        acc.emplace_back(apex, hi);
        ++added;
      }
      auto next = pending;
      next.emplace_back(lo, apex);
      next.emplace_back(apex, hi);
      self(self, std::move(next));
      acc.resize(acc.size() - added);
    }
  };
  gen(gen, {{0, k - 1}});
  return result;
}

std::vector<SidePairing> enumerate_all_pairings(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("pairings need even k >= 2");
  std::vector<SidePairing> out;
  std::vector<int> pair_of(k, -1);
  auto gen = [&](auto&& self) -> void {
    int s = 0;
    while (s < k && pair_of[s] != -1) ++s;
    if (s == k) {
      out.push_back(SidePairing{k, pair_of});
      return;
    }
    for (int t = s + 1; t < k; ++t) {
      if (pair_of[t] != -1) continue;
      pair_of[s] = t;
      pair_of[t] = s;
      self(self);
      pair_of[s] = pair_of[t] = -1;
    }
  };
  gen(gen);
  return out;
}

std::vector<SidePairing> enumerate_noncrossing_pairings(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("pairings need even k >= 2");
  std::vector<SidePairing> out;
  std::vector<int> pair_of(k, -1);

  // Matching the first free side s with t leaves the strict interior (s, t)
  // and the remainder; noncrossing forces the interior to be matched within
  // itself, so t - s must be odd.
  auto gen = [&](auto&& self) -> void {
    int s = 0;
    while (s < k && pair_of[s] != -1) ++s;
    if (s == k) {
      out.push_back(SidePairing{k, pair_of});
      return;
    }
    for (int t = s + 1; t < k; t += 2) {
      if (pair_of[t] != -1) continue;
      bool interior_free = true;
      for (int u = s + 1; u < t; ++u) {
        if (pair_of[u] != -1) {
          interior_free = false;
          break;
        }
      }
      if (!interior_free) continue;
      pair_of[s] = t;
      pair_of[t] = s;
      self(self);
      pair_of[s] = pair_of[t] = -1;
    }
  };
  gen(gen);
  return out;
}

int pairing_genus(const SidePairing& p) {
  require_valid(p);
  // Orientation-reversing identification of side s with s' merges corner s
  // with corner s'+1 and corner s+1 with corner s'.
  std::vector<int> parent(p.k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < p.k; ++s) {
    const int t = p.pair_of[s];
    parent[find(s)] = find((t + 1) % p.k);
    parent[find((s + 1) % p.k)] = find(t);
  }
  int v = 0;
  for (int c = 0; c < p.k; ++c) v += find(c) == c;
  return (2 - v + p.k / 2 - 1) / 2;
}

bool is_noncrossing(const SidePairing& p) {
  require_valid(p);
  std::vector<std::pair<int, int>> chords;
  for (int s = 0; s < p.k; ++s) {
    if (s < p.pair_of[s]) chords.emplace_back(s, p.pair_of[s]);
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_cross(chords[i], chords[j])) return false;
    }
  }
  return true;
}

std::vector<std::array<int, 3>> triangles(const MarkedTriangulation& t) {
  require_valid(t);
  std::set<std::pair<int, int>> segments;
  for (int s = 0; s < t.k; ++s) segments.insert(normalized(s, (s + 1) % t.k));
  for (auto d : t.diagonals) segments.insert(d);

  // With corners in convex position a triple is a face iff all three of its
  // chords are present.
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < t.k; ++a) {
    for (int b = a + 1; b < t.k; ++b) {
      if (!segments.count({a, b})) continue;
      for (int c = b + 1; c < t.k; ++c) {
        if (segments.count({b, c}) && segments.count({a, c})) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> dual_tree_edges(const MarkedTriangulation& t) {
  const auto tris = triangles(t);
  std::vector<std::pair<int, int>> out;
  for (auto d : t.diagonals) {
    int first = -1;
    for (std::size_t i = 0; i < tris.size(); ++i) {
      const auto& tri = tris[i];
      bool has_d = false;
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          if (normalized(tri[a], tri[b]) == d) has_d = true;
        }
      }
      if (!has_d) continue;
      if (first == -1) {
        first = static_cast<int>(i);
      } else {
        out.emplace_back(first, static_cast<int>(i));
      }
    }
  }
  return out;
}

std::string polygon_to_text(const MarkedTriangulation& t, const SidePairing& p) {
  std::ostringstream out;
  out << "k=" << t.k << "\n";
  auto diags = t.diagonals;
  std::sort(diags.begin(), diags.end());
  for (std::size_t i = 0; i < diags.size(); ++i) {
    if (i) out << " ";
    out << diags[i].first << "-" << diags[i].second;
  }
  out << "\n";
  bool first = true;
  for (int s = 0; s < p.k; ++s) {
    if (s > p.pair_of[s]) continue;
    if (!first) out << " ";
    out << s << ":" << p.pair_of[s];
    first = false;
  }
  out << "\n";
  return out.str();
}

std::pair<MarkedTriangulation, SidePairing> polygon_from_text(
    const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("k=", 0) != 0) {
    throw std::invalid_argument("polygon text: first line must be k=<k>");
  }
  int k = 0;
  try {
    k = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::invalid_argument("polygon text: cannot parse k");
  }

  MarkedTriangulation t{k, {}};
  if (!std::getline(in, line)) {
    throw std::invalid_argument("polygon text: missing diagonals line");
  }
  {
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos) {
        throw std::invalid_argument("polygon text: diagonal must be i-j");
      }
      t.diagonals.emplace_back(std::stoi(tok.substr(0, dash)),
                               std::stoi(tok.substr(dash + 1)));
    }
  }
  for (auto& d : t.diagonals) d = normalized(d.first, d.second);
  std::sort(t.diagonals.begin(), t.diagonals.end());

  SidePairing p{k, std::vector<int>(std::max(k, 0), -1)};
  if (!std::getline(in, line)) {
    throw std::invalid_argument("polygon text: missing pairing line");
  }
  {
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("polygon text: pair must be s:t");
      }
      const int s = std::stoi(tok.substr(0, colon));
      const int u = std::stoi(tok.substr(colon + 1));
      if (s < 0 || u < 0 || s >= k || u >= k) {
        throw std::invalid_argument("polygon text: side index out of range");
      }
      p.pair_of[s] = u;
      p.pair_of[u] = s;
    }
  }
  require_valid(t);
  require_valid(p);
  return {std::move(t), std::move(p)};
}

}  // namespace tmaps
