#include "tamecomb/tree_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamecomb::thompson {

namespace {

// Removes every caret pair exposed in both trees at equal leaf numbers,
// repeating until none remain.
void reduce_in_place(Tree& neg, Tree& pos) {
  for (;;) {
    std::vector<int> en = exposed_caret_leaf_positions(neg);
    std::vector<int> ep = exposed_caret_leaf_positions(pos);
    std::vector<int> common;
    std::set_intersection(en.begin(), en.end(), ep.begin(), ep.end(),
                          std::back_inserter(common));
    if (common.empty()) return;
    // Right-to-left so earlier positions stay valid.
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      neg = remove_exposed_caret(neg, *it);
      pos = remove_exposed_caret(pos, *it);
    }
  }
}

}  // namespace

TreePair TreePair::make_reduced(Tree negative, Tree positive) {
  if (negative.carets() != positive.carets())
    throw std::invalid_argument("TreePair: trees must have equal caret counts");
  reduce_in_place(negative, positive);
  TreePair w;
  w.neg_ = std::move(negative);
  w.pos_ = std::move(positive);
  return w;
}

TreePair multiply(const TreePair& u, const TreePair& v) {
  // Refine so v's positive tree equals u's negative tree, then glue.
  const Tree common = tree_union(u.negative(), v.positive());
  const Tree u_pos = attach_at_leaves(u.positive(), decompose_over(common, u.negative()));
  const Tree v_neg = attach_at_leaves(v.negative(), decompose_over(common, v.positive()));
  return TreePair::make_reduced(v_neg, u_pos);
}

TreePair invert(const TreePair& w) {
  return TreePair::make_reduced(w.positive(), w.negative());
}

namespace {
TreePair make_pair_unchecked(const char* neg, const char* pos) {
  return TreePair::make_reduced(Tree::parse(neg), Tree::parse(pos));
}
}  // namespace

const TreePair& generator_pair(const Letter& g) {
  static const TreePair x0 = make_pair_unchecked("(* (* *))", "((* *) *)");
  static const TreePair x0i = make_pair_unchecked("((* *) *)", "(* (* *))");
  static const TreePair x1 = make_pair_unchecked("(* (* (* *)))", "(* ((* *) *))");
  static const TreePair x1i = make_pair_unchecked("(* ((* *) *))", "(* (* (* *)))");
  if (g.index == 0) return g.sign > 0 ? x0 : x0i;
  if (g.index == 1) return g.sign > 0 ? x1 : x1i;
  throw std::invalid_argument("generator_pair: finite generators are x0 and x1");
}

std::pair<TreePair, CaretDelta> apply_generator(const TreePair& w, const Letter& g) {
  const TreePair& gen = generator_pair(g);
  const Tree common = tree_union(w.negative(), gen.positive());
  const Tree w_pos = attach_at_leaves(w.positive(), decompose_over(common, w.negative()));
  const Tree g_neg = attach_at_leaves(gen.negative(), decompose_over(common, gen.positive()));
  TreePair result = TreePair::make_reduced(g_neg, w_pos);
  CaretDelta delta;
  delta.added = common.carets() - w.carets();
  delta.removed = common.carets() - result.carets();
  return {std::move(result), delta};
}

TreePair eval_word(const GenWord& word) {
  TreePair acc;
  for (const Letter& l : expand_infinite_generators(word))
    acc = apply_generator(acc, l).first;
  return acc;
}

}  // namespace tamecomb::thompson
