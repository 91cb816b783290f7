#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tamecomb::thompson {

/// Immutable rooted binary tree.  A default-constructed Tree is a single
/// leaf (zero carets); Tree(l, r) is a caret with subtrees l and r.
/// Values share structure freely and are safe to copy across threads.
class Tree {
public:
  Tree() = default;
  Tree(Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  int carets() const;
  int leaves() const { return carets() + 1; }

  /// Children; pre: !is_leaf().
  const Tree& left() const;
  const Tree& right() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

  /// Text form: leaf = `*`, caret = `(L R)`.
  std::string str() const;
  static Tree parse(std::string_view text);

  static Tree right_vine(int k);  // R_k
  static Tree left_vine(int k);   // L_k

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left, right;
  int carets;
};

inline int Tree::carets() const { return node_ ? node_->carets : 0; }

Tree mirror(const Tree& t);

/// True iff t consists only of right carets (a leaf counts).
bool is_right_vine(const Tree& t);
bool is_left_vine(const Tree& t);

/// Per-caret facts in infix order (index 0 = caret 1).  Spine membership
/// is relative to the whole tree; the root is on both spines.
struct CaretInfo {
  bool on_left_spine = false;
  bool on_right_spine = false;
  bool right_subtree_empty = true;
  bool right_subtree_vine = true;  // right subtree has only right carets
  int first_leaf = 0;              // number of the leftmost leaf below this caret
  bool exposed = false;            // both children are leaves
  bool interior() const { return !on_left_spine && !on_right_spine; }
};

std::vector<CaretInfo> caret_table(const Tree& t);

/// E_T(k) for every leaf k: the number of upward left-edge steps from
/// leaf k whose upper endpoint stays off the right side of the tree.
std::vector<int> leaf_exponents(const Tree& t);

/// Leaf positions i such that leaves i and i+1 form an exposed caret.
std::vector<int> exposed_caret_leaf_positions(const Tree& t);

/// Infix number of the first exposed caret, if the tree has any caret.
std::optional<int> first_exposed_caret_infix(const Tree& t);

/// Replaces the exposed caret covering leaves (i, i+1) by a leaf.
Tree remove_exposed_caret(const Tree& t, int leaf_pos);

/// Smallest common refinement: the leafwise union of branch structures.
Tree tree_union(const Tree& a, const Tree& b);

/// Subtrees of `big` hanging below each leaf of `prefix`; pre: prefix is
/// a branch-structure prefix of big.
std::vector<Tree> decompose_over(const Tree& big, const Tree& prefix);

/// Replaces leaf i of `base` by grafts[i].
Tree attach_at_leaves(const Tree& base, const std::vector<Tree>& grafts);

/// Left subtrees T_1..T_k of the right-spine carets r_1..r_k (r_1 = root).
std::vector<Tree> right_spine_left_subtrees(const Tree& t);
/// Right subtrees S_1..S_m of the left-spine carets l_1..l_m (l_1 = root).
std::vector<Tree> left_spine_right_subtrees(const Tree& t);

/// (X (Y Z)) -> ((X Y) Z)
Tree rotate_left(const Tree& t);
/// ((X Y) Z) -> (X (Y Z))
Tree rotate_right(const Tree& t);

/// Applies rotate_left/rotate_right to the subtree rooted at the pos-th
/// right-spine caret (1-based; pos 1 = the root).
Tree rotate_at_right_spine(const Tree& t, int pos, bool leftward);
Tree rotate_at_left_spine(const Tree& t, int pos, bool leftward);

bool has_interior_caret(const Tree& t);

}  // namespace tamecomb::thompson
