#include "cello/callgraph.hpp"

#include <algorithm>

#include "cello/error.hpp"

namespace cello {

namespace {

const std::set<std::string>& empty_set() {
  static const std::set<std::string> kEmpty;
  return kEmpty;
}

std::string join(const std::set<std::string>& names, std::string_view none) {
  if (names.empty()) return std::string(none);
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

void CallGraph::add_node(const std::string& id, const std::string& path) { nodes_[id] = path; }

void CallGraph::add_edge(const std::string& caller, const std::string& callee) {
  if (!contains(caller) || !contains(callee)) throw SchemaError("edge endpoint is not a node", {});
  out_[caller].insert(callee);
  in_[callee].insert(caller);
}

std::size_t CallGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [_, targets] : out_) n += targets.size();
  return n;
}

const std::set<std::string>& CallGraph::callers(const std::string& id) const {
  const auto it = in_.find(id);
  return it == in_.end() ? empty_set() : it->second;
}

const std::set<std::string>& CallGraph::callees(const std::string& id) const {
  const auto it = out_.find(id);
  return it == out_.end() ? empty_set() : it->second;
}

std::string strip_overload_suffix(std::string_view id) {
  if (!id.empty() && id.back() == ')') {
    int depth = 0;
    for (std::size_t i = id.size(); i-- > 0;) {
      if (id[i] == ')') ++depth;
      if (id[i] == '(' && --depth == 0) {
        // "operator()" itself is a name, not an overload suffix
        if (id.substr(0, i).ends_with("operator")) break;
        return std::string(id.substr(0, i));
      }
    }
  }
  const auto hash = id.rfind('#');
  if (hash != std::string_view::npos && hash + 1 < id.size() &&
      std::all_of(id.begin() + static_cast<std::ptrdiff_t>(hash) + 1, id.end(),
                  [](char c) { return c >= '0' && c <= '9'; }))
    return std::string(id.substr(0, hash));
  return std::string(id);
}

std::vector<std::string> CallGraph::resolve(std::string_view symbol) const {
  if (const auto it = nodes_.find(std::string(symbol)); it != nodes_.end()) return {it->first};
  std::vector<std::string> out;
  for (const auto& [id, _] : nodes_)
    if (strip_overload_suffix(id) == symbol) out.push_back(id);
  return out;
}

nlohmann::json CallGraph::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [id, path] : nodes_) nodes.push_back({{"id", id}, {"path", path}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [caller, targets] : out_)
    for (const auto& callee : targets) edges.push_back({caller, callee});
  return {{"nodes", nodes}, {"edges", edges}};
}

CallGraph load_callgraph(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("callgraph is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j["nodes"].is_array() ||
      !j["edges"].is_array())
    throw SchemaError("callgraph needs 'nodes' and 'edges' arrays", {});

  CallGraph g;
  for (const auto& n : j["nodes"]) {
    if (!n.is_object() || !n.contains("id") || !n["id"].is_string())
      throw SchemaError("callgraph node without a string 'id'", {n.dump()});
    g.add_node(n["id"].get<std::string>(), n.value("path", ""));
  }
  std::set<std::string> dangling;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw SchemaError("callgraph edge must be [caller, callee]", {e.dump()});
    auto caller = e[0].get<std::string>();
    auto callee = e[1].get<std::string>();
    if (!g.contains(caller)) dangling.insert(caller);
    if (!g.contains(callee)) dangling.insert(callee);
    edges.emplace_back(std::move(caller), std::move(callee));
  }
  if (!dangling.empty()) {
    std::string names;
    for (const auto& d : dangling) names += (names.empty() ? "" : ", ") + d;
    throw SchemaError("edges reference undeclared nodes: " + names, {dangling.begin(), dangling.end()});
  }
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

Lineage two_hop_lineage(const CallGraph& graph, const std::string& target) {
  if (!graph.contains(target)) throw NotFoundError("function not in callgraph: " + target);
  return {target, graph.callers(target), graph.callees(target)};
}

std::string summarize_lineage(const Lineage& lineage) {
  return "Function " + lineage.target + " is called by: " + join(lineage.callers, "no known callers") +
         ". It calls: " + join(lineage.callees, "no known callees") + ".";
}

}  // namespace cello
