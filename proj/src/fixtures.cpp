#include "polymu/fixtures.hpp"

namespace polymu {

LabeledGraph example_graph() {
  return GraphBuilder(Signature({"a"}, {"f"}))
      .node("0")
      .node("1", {"f"})
      .node("2")
      .edge("0", "a", "1")
      .edge("1", "a", "2")
      .edge("2", "a", "1")
      .build();
}

LabeledGraph example_power() { return power(example_graph(), 2); }

std::vector<WordLetter> example_word() { return {{{}, "a"}, {{}, "b"}, {{"f"}, "a"}}; }

FiniteTree example_rword_tree() {
  auto word = example_word();
  return gen_rword_tree(Signature({"a", "b"}, {"f"}), word, 2, 2);
}

}  // namespace polymu
