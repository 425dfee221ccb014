#include "tmaps/map_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tmaps {
namespace {

using nlohmann::json;

MapDiagnostics format_error(std::string msg) {
  MapDiagnostics diag;
  diag.issues.push_back(std::move(msg));
  return diag;
}

}  // namespace

MapRecord to_record(const TreeRootedCubicMap& t) {
  return MapRecord{t.map, t.tree_darts, t.root_dart};
}

TreeRootedCubicMap to_tree_rooted(const MapRecord& record) {
  if (!record.root_dart) {
    throw ValidationError(format_error("record has no root dart"));
  }
  TreeRootedCubicMap t{record.map, record.tree_darts, *record.root_dart};
  require_valid(t);
  return t;
}

std::string to_json(const MapRecord& record) {
  json out;
  out["n_darts"] = record.map.dart_count();

  json cycles = json::array();
  std::vector<bool> seen(record.map.sigma.size(), false);
  for (Dart d = 0; d < record.map.dart_count(); ++d) {
    if (seen[d]) continue;
    json cycle = json::array();
    for (Dart e = d; !seen[e]; e = record.map.sigma[e]) {
      seen[e] = true;
      cycle.push_back(e);
    }
    cycles.push_back(std::move(cycle));
  }
  out["sigma_cycles"] = std::move(cycles);

  json pairs = json::array();
  for (Dart d = 0; d < record.map.dart_count(); ++d) {
    if (d < record.map.alpha[d]) pairs.push_back({d, record.map.alpha[d]});
  }
  out["alpha_pairs"] = std::move(pairs);

  out["tree_darts"] = record.tree_darts;
  if (record.root_dart) out["root_dart"] = *record.root_dart;
  return out.dump();
}

MapRecord map_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(format_error(std::string("not valid JSON: ") + e.what()));
  }
  if (!in.is_object() || !in.contains("n_darts") || !in.contains("sigma_cycles") ||
      !in.contains("alpha_pairs")) {
    throw ValidationError(
        format_error("expected object with n_darts, sigma_cycles, alpha_pairs"));
  }

  MapRecord record;
  const int d = in["n_darts"].get<int>();
  if (d < 0) throw ValidationError(format_error("negative n_darts"));
  record.map.sigma.assign(d, -1);
  record.map.alpha.assign(d, -1);

  auto in_range = [d](int x) { return x >= 0 && x < d; };

  for (const auto& cycle : in["sigma_cycles"]) {
    if (cycle.empty()) throw ValidationError(format_error("empty sigma cycle"));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i].get<int>();
      const int to = cycle[(i + 1) % cycle.size()].get<int>();
      if (!in_range(from) || !in_range(to) || record.map.sigma[from] != -1) {
        throw ValidationError(format_error("sigma cycles are not a permutation"));
      }
      record.map.sigma[from] = to;
    }
  }
  for (Dart x = 0; x < d; ++x) {
    if (record.map.sigma[x] == -1) {
      throw ValidationError(format_error("sigma cycles do not cover every dart"));
    }
  }

  for (const auto& pair : in["alpha_pairs"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError(format_error("alpha pair is not a 2-element array"));
    }
    const int a = pair[0].get<int>(), b = pair[1].get<int>();
    if (!in_range(a) || !in_range(b) || record.map.alpha[a] != -1 ||
        record.map.alpha[b] != -1 || a == b) {
      throw ValidationError(format_error("alpha has a fixed point"));
    }
    record.map.alpha[a] = b;
    record.map.alpha[b] = a;
  }
  for (Dart x = 0; x < d; ++x) {
    if (record.map.alpha[x] == -1) {
      throw ValidationError(format_error("alpha pairs do not cover every dart"));
    }
  }

  if (in.contains("tree_darts")) {
    record.tree_darts = in["tree_darts"].get<std::vector<Dart>>();
    std::sort(record.tree_darts.begin(), record.tree_darts.end());
    for (Dart x : record.tree_darts) {
      if (!in_range(x)) throw ValidationError(format_error("tree dart out of range"));
    }
  }
  if (in.contains("root_dart") && !in["root_dart"].is_null()) {
    const int root = in["root_dart"].get<int>();
    if (!in_range(root)) throw ValidationError(format_error("root dart out of range"));
    record.root_dart = root;
  }

  require_valid(record.map);
  return record;
}

std::string to_dot(const MapRecord& record) {
  const std::vector<int> vertex = vertex_of_darts(record.map);
  const std::vector<bool> in_tree = dart_set(record.map, record.tree_darts);

  std::ostringstream out;
  out << "graph tmap {\n";
  const int vertices =
      record.map.dart_count() == 0
          ? 0
          : 1 + *std::max_element(vertex.begin(), vertex.end());
  for (int v = 0; v < vertices; ++v) {
    out << "  v" << v << ";\n";
  }
  for (Dart d = 0; d < record.map.dart_count(); ++d) {
    const Dart e = record.map.alpha[d];
    if (d > e) continue;  // one line per edge
    const bool is_root_edge =
        record.root_dart && (*record.root_dart == d || *record.root_dart == e);
    Dart tail = d, head = e;
    if (is_root_edge && *record.root_dart == e) std::swap(tail, head);

    out << "  v" << vertex[tail] << " -- v" << vertex[head];
    std::vector<std::string> attrs;
    attrs.push_back("label=\"" + std::to_string(std::min(d, e)) + "-" +
                    std::to_string(std::max(d, e)) + "\"");
    if (in_tree[d]) attrs.push_back("style=bold, color=black, penwidth=2");
    if (is_root_edge) attrs.push_back("dir=forward, arrowhead=normal, color=red");
    out << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      if (i) out << ", ";
      out << attrs[i];
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tmaps
