#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "obcast/graph.hpp"
#include "obcast/lists.hpp"

namespace obcast {

// One self-contained experiment artifact: graph, optional labels and lists,
// and construction metadata. Serialization is canonical: object keys
// sorted, edges sorted with u < v, two-space indent, trailing newline — two
// runs of the same construction produce identical bytes.
struct InstanceFile {
  int version = 1;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  std::optional<ListAssignment> lists;
  std::string family;
  nlohmann::json params = nlohmann::json::object();

  bool operator==(const InstanceFile& other) const {
    return version == other.version && n == other.n && edges == other.edges &&
           labels == other.labels && lists == other.lists && family == other.family &&
           params == other.params;
  }
};

inline InstanceFile make_instance(const Graph& g, std::optional<ListAssignment> lists = {},
                                  std::string family = {},
                                  nlohmann::json params = nlohmann::json::object()) {
  g.validate();
  if (lists) lists->validate(g);
  InstanceFile inst;
  inst.n = g.n;
  inst.edges = g.edges();
  inst.labels = g.labels;
  inst.lists = std::move(lists);
  inst.family = std::move(family);
  inst.params = std::move(params);
  return inst;
}

// Rebuilds the graph and rechecks every invariant (including the lists).
inline Graph instance_graph(const InstanceFile& inst) {
  Graph g(inst.n);
  for (const auto& [u, v] : inst.edges) g.add_edge(u, v);
  g.finalize();
  g.labels = inst.labels;
  g.validate();
  if (inst.lists) inst.lists->validate(g);
  return g;
}

inline nlohmann::json instance_to_json(const InstanceFile& inst) {
  nlohmann::json j;
  j["version"] = inst.version;
  j["n"] = inst.n;
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : inst.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!inst.labels.empty()) {
    auto labels = nlohmann::json::object();
    for (int v = 0; v < inst.n; ++v) labels[std::to_string(v)] = inst.labels[v];
    j["labels"] = std::move(labels);
  }
  if (inst.lists) {
    auto lists = nlohmann::json::object();
    for (int v = 0; v < inst.n; ++v) lists[std::to_string(v)] = inst.lists->lists[v];
    j["lists"] = std::move(lists);
  }
  if (!inst.family.empty() || !inst.params.empty()) {
    j["metadata"] = {{"family", inst.family}, {"params", inst.params}};
  }
  return j;
}

inline std::string serialize_instance(const InstanceFile& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline InstanceFile parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("instance: missing version/n/edges");
  InstanceFile inst;
  inst.version = j.at("version").get<int>();
  if (inst.version != 1) throw std::invalid_argument("instance: unsupported version");
  inst.n = j.at("n").get<int>();
  if (inst.n < 0) throw std::invalid_argument("instance: negative n");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("instance: malformed edge");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u > v) std::swap(u, v);
    inst.edges.emplace_back(u, v);
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  if (j.contains("labels")) {
    inst.labels.assign(static_cast<std::size_t>(inst.n), {});
    std::size_t seen = 0;
    for (const auto& [key, value] : j.at("labels").items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= inst.n) throw std::invalid_argument("instance: label key out of range");
      inst.labels[v] = value.get<std::string>();
      ++seen;
    }
    if (seen != static_cast<std::size_t>(inst.n))
      throw std::invalid_argument("instance: labels must cover every node");
  }
  if (j.contains("lists")) {
    ListAssignment lists;
    lists.lists.assign(static_cast<std::size_t>(inst.n), {});
    std::size_t seen = 0;
    for (const auto& [key, value] : j.at("lists").items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= inst.n) throw std::invalid_argument("instance: list key out of range");
      lists.lists[v] = value.get<std::vector<int>>();
      ++seen;
    }
    if (seen != static_cast<std::size_t>(inst.n))
      throw std::invalid_argument("instance: lists must cover every node");
    inst.lists = std::move(lists);
  }
  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    if (meta.contains("family")) inst.family = meta.at("family").get<std::string>();
    if (meta.contains("params")) inst.params = meta.at("params");
  }
  instance_graph(inst);  // full consistency check
  return inst;
}

inline void save_instance(const InstanceFile& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_instance(inst);
}

inline InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

// Deterministic DOT rendering: nodes in id order (bit-string labels as node
// attributes when present), then edges in sorted order.
inline std::string instance_to_dot(const InstanceFile& inst) {
  std::ostringstream out;
  out << "graph obcast {\n";
  for (int v = 0; v < inst.n; ++v) {
    out << "  " << v;
    if (!inst.labels.empty()) out << " [label=\"" << inst.labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : inst.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace obcast
