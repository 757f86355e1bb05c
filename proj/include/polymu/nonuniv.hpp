#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polymu/graph.hpp"

namespace polymu {

/// Outcome of a non-universality query. For one-letter queries the witness
/// is the length n, for two-letter queries the word (as action names).
struct NonUnivVerdict {
  bool member = false;
  std::optional<std::size_t> length;
  std::optional<std::vector<std::string>> word;
  /// The step budget ran out before the subset sequence closed a cycle;
  /// `member` is then false without being a proof of universality.
  bool exhausted_bound = false;
};

struct SearchOptions {
  std::size_t max_steps = std::size_t{1} << 20;
};

/// {"member":...,"witness":n | [letters] | null,"exhausted_bound":...}
std::string verdict_json(const NonUnivVerdict& v);

/// Is there n such that no node reachable from the root by exactly n edges
/// is colored? The graph needs exactly one action and one color.
NonUnivVerdict one_letter_non_universal(const LabeledGraph& nfa, const SearchOptions& options = {});

/// Nodes reachable from the root by exactly n edges, via binary
/// decomposition of n and boolean matrix squaring.
std::vector<NodeId> reach_by_squaring(const LabeledGraph& nfa, std::size_t n);

/// Is there a word w such that no node reachable from the root along w is
/// colored? Two actions, one color. The witness is the shortest word,
/// lexicographically least by action name among those.
NonUnivVerdict two_letter_non_universal(const LabeledGraph& nfa, const SearchOptions& options = {});

/// Lifted counterparts over lift_signature(base, d) with a one- or
/// two-letter base: is there n (resp. w) such that for every path from the
/// root and every component i, if the a@i (resp. a@i, b@i) moves after the
/// last rst@i have length n (resp. spell w) then f@i is absent at the end?
NonUnivVerdict one_lifted_non_universal(const LabeledGraph& g, std::size_t d, const SearchOptions& options = {});
NonUnivVerdict two_lifted_non_universal(const LabeledGraph& g, std::size_t d, const SearchOptions& options = {});

/// Replays a witness against the path condition directly, by a search over
/// (node, letters matched since the last reset of component i). `word`
/// uses base action names.
bool verify_lifted_witness(const LabeledGraph& g, std::size_t d, const std::vector<std::string>& word);
/// Same for a plain NFA: every node reachable along `word` is uncolored.
bool verify_witness(const LabeledGraph& nfa, const std::vector<std::string>& word);

}  // namespace polymu
