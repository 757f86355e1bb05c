#include "polymu/graph_json.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "polymu/error.hpp"

namespace polymu {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("expected an array of strings", field);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) throw InputError("expected a string", field + "[" + std::to_string(k) + "]");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing key", key);
  return *it;
}

}  // namespace

LabeledGraph read_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what(), "$");
  }
  if (!doc.is_object()) throw InputError("expected a JSON object", "$");

  Signature sig(string_list(member(doc, "actions"), "actions"), string_list(member(doc, "colors"), "colors"));
  GraphBuilder b(sig);

  const json& nodes = member(doc, "nodes");
  if (!nodes.is_array()) throw InputError("expected an array", "nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::string where = "nodes[" + std::to_string(k) + "]";
    const json& n = nodes[k];
    if (!n.is_object()) throw InputError("expected an object", where);
    auto id = n.find("id");
    if (id == n.end() || !id->is_string()) throw InputError("missing string id", where + ".id");
    std::vector<std::string> colors;
    if (auto c = n.find("colors"); c != n.end()) colors = string_list(*c, where + ".colors");
    for (std::size_t ci = 0; ci < colors.size(); ++ci)
      if (!sig.find_color(colors[ci]))
        throw InputError("unknown color '" + colors[ci] + "'", where + ".colors[" + std::to_string(ci) + "]");
    b.node(id->get<std::string>(), std::move(colors));
  }

  const json& root = member(doc, "root");
  if (!root.is_string()) throw InputError("expected a string", "root");
  b.root(root.get<std::string>());

  const json& edges = member(doc, "edges");
  if (!edges.is_array()) throw InputError("expected an array", "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
      throw InputError("expected [from, action, to]", where);
    auto action = e[1].get<std::string>();
    if (!sig.find_action(action)) throw InputError("unknown action '" + action + "'", where + "[1]");
    b.edge(e[0].get<std::string>(), action, e[2].get<std::string>());
  }
  return b.build();
}

std::string write_graph(const LabeledGraph& g) {
  const Signature& sig = g.signature();
  json doc = json::object();
  doc["actions"] = sig.actions();
  doc["colors"] = sig.colors();

  std::vector<NodeId> order(g.num_nodes());
  for (NodeId v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.node_id(a) < g.node_id(b); });
  json nodes = json::array();
  for (NodeId v : order) {
    auto colors = color_names(g, v);
    std::sort(colors.begin(), colors.end());
    nodes.push_back(json{{"id", g.node_id(v)}, {"colors", colors}});
  }
  doc["nodes"] = std::move(nodes);
  doc["root"] = g.node_id(g.root());

  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.node_id(e.from), sig.actions()[e.action], g.node_id(e.to));
  std::sort(edges.begin(), edges.end());
  json ej = json::array();
  for (const auto& [f, a, t] : edges) ej.push_back(json::array({f, a, t}));
  doc["edges"] = std::move(ej);
  return doc.dump();
}

FiniteTree read_tree(std::string_view text) { return FiniteTree(read_graph(text)); }

}  // namespace polymu
