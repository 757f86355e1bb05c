#include "polymu/relation.hpp"

#include <algorithm>

namespace polymu {

std::size_t Relation::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<NodeId, NodeId>> Relation::pairs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId u = 0; u < rows_; ++u)
    for (NodeId v = 0; v < cols_; ++v)
      if (contains(u, v)) out.emplace_back(u, v);
  return out;
}

Relation Relation::inverse() const {
  Relation out(cols_, rows_);
  for (auto [u, v] : pairs()) out.set(v, u);
  return out;
}

std::string format_pairs(const Relation& r, const LabeledGraph& left, const LabeledGraph& right) {
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : r.pairs()) named.emplace_back(left.node_id(u), right.node_id(v));
  std::sort(named.begin(), named.end());
  std::string out;
  for (const auto& [u, v] : named) out += "(" + u + "," + v + ")\n";
  return out;
}

}  // namespace polymu
