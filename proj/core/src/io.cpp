#include "ldlat/io.hpp"

#include <algorithm>
#include <sstream>

namespace ldlat::io {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> sorted(std::span<const std::string> labels) {
  std::vector<std::string> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

nlohmann::json graph_to_json(const LabeledGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : graph.label_edges()) edges.push_back({a, b});
  return {{"vertices", sorted(graph.labels())}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::InvalidGraph, "expected an object with a \"vertices\" array");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorCode::InvalidGraph, "vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  LabeledGraph graph(std::move(labels));
  if (!doc.contains("edges")) return graph;
  if (!doc["edges"].is_array()) throw Error(ErrorCode::InvalidGraph, "\"edges\" must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorCode::InvalidGraph, "each edge must be a pair of vertex labels");
    }
    const auto a = e[0].get<std::string>();
    const auto b = e[1].get<std::string>();
    const auto u = graph.find(a);
    const auto v = graph.find(b);
    if (!u || !v) throw Error(ErrorCode::InvalidGraph, "edge " + a + " -- " + b + " names an unknown vertex");
    if (!graph.add_edge(*u, *v)) throw Error(ErrorCode::InvalidGraph, "edge " + a + " -- " + b + " repeated");
  }
  return graph;
}

std::string graph_to_dot(const LabeledGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (const auto& v : sorted(graph.labels())) out << "  " << quoted(v) << ";\n";
  for (const auto& [a, b] : graph.label_edges()) out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_to_dot(const Lattice& lattice, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  for (const auto& v : sorted(lattice.labels())) out << "  " << quoted(v) << ";\n";
  auto covers = lattice.cover_label_pairs();
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers) out << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json partition_to_json(const ClassPartition& partition) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : partition.classes) {
    classes.push_back({{"members", c.members},
                       {"has_adjunct", c.has_adjunct},
                       {"adjunct_member", c.adjunct_member ? nlohmann::json(*c.adjunct_member) : nlohmann::json()}});
  }
  return {{"classes", std::move(classes)}, {"peel_order", partition.peel_order}};
}

nlohmann::json witness_to_json(const IsoWitness& witness) {
  return {{"kind", std::string(to_string(witness.kind))}, {"map", witness.map}};
}

IsoWitness witness_from_json(const nlohmann::json& doc) {
  IsoWitness w;
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "graph-iso") {
    w.kind = IsoWitness::Kind::GraphIso;
  } else if (kind == "lattice-iso") {
    w.kind = IsoWitness::Kind::LatticeIso;
  } else {
    throw Error(ErrorCode::SyntaxError, "unknown witness kind '" + kind + "'");
  }
  w.map = doc.at("map").get<std::map<std::string, std::string>>();
  return w;
}

}  // namespace ldlat::io
