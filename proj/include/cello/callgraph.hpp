#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cello {

// Function dependency graph as cached on disk:
//   {"nodes": [{"id": "ns::f(int)", "path": "src/f.cc"}], "edges": [["caller", "callee"]]}
// Ids are fully qualified names; overloads carry a "(param types)" suffix or an "#N" ordinal.
class CallGraph {
 public:
  void add_node(const std::string& id, const std::string& path);
  // Both endpoints must already be nodes.
  void add_edge(const std::string& caller, const std::string& callee);

  bool contains(const std::string& id) const { return nodes_.count(id) != 0; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;

  const std::map<std::string, std::string>& nodes() const { return nodes_; }
  const std::set<std::string>& callers(const std::string& id) const;
  const std::set<std::string>& callees(const std::string& id) const;

  // Graph node ids a routine symbol refers to: the exact id if present, otherwise every node
  // whose id without its overload suffix equals `symbol`.
  std::vector<std::string> resolve(std::string_view symbol) const;

  nlohmann::json to_json() const;

  friend bool operator==(const CallGraph&, const CallGraph&) = default;

 private:
  std::map<std::string, std::string> nodes_;  // id -> defining path
  std::map<std::string, std::set<std::string>> out_;
  std::map<std::string, std::set<std::string>> in_;
};

// Throws ParseError for malformed JSON and SchemaError (offenders = undeclared ids) for edges
// that reference unknown nodes.
CallGraph load_callgraph(std::string_view document);

// Immediate callers and callees of one function.
struct Lineage {
  std::string target;
  std::set<std::string> callers;
  std::set<std::string> callees;

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

// Throws NotFoundError if `target` is not a node.
Lineage two_hop_lineage(const CallGraph& graph, const std::string& target);

std::string summarize_lineage(const Lineage& lineage);

// "ns::f(int)" -> "ns::f", "ns::f#2" -> "ns::f".
std::string strip_overload_suffix(std::string_view id);

}  // namespace cello
