#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polymu/graph.hpp"

namespace polymu {

/// Dense binary relation between the nodes of two graphs (rows x cols).
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t rows, std::size_t cols, bool value = false)
      : rows_(rows), cols_(cols), bits_(rows * cols, value ? 1 : 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool contains(NodeId u, NodeId v) const { return bits_[u * cols_ + v] != 0; }
  void set(NodeId u, NodeId v, bool value = true) { bits_[u * cols_ + v] = value ? 1 : 0; }
  std::size_t size() const;

  std::vector<std::pair<NodeId, NodeId>> pairs() const;
  Relation inverse() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<char> bits_;
};

/// One "(u,v)" line per pair, sorted by the printed node ids.
std::string format_pairs(const Relation& r, const LabeledGraph& left, const LabeledGraph& right);

}  // namespace polymu
