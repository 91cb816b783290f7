#include "tamecomb/tree.hpp"

#include <functional>
#include <stdexcept>

namespace tamecomb::thompson {

Tree::Tree(Tree left, Tree right) {
  auto n = std::make_shared<Node>();
  n->carets = left.carets() + right.carets() + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  node_ = std::move(n);
}

const Tree& Tree::left() const {
  if (!node_) throw std::logic_error("Tree: leaf has no children");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::logic_error("Tree: leaf has no children");
  return node_->right;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->carets != b.node_->carets) return false;
  return a.left() == b.left() && a.right() == b.right();
}

std::string Tree::str() const {
  if (is_leaf()) return "*";
  return "(" + left().str() + " " + right().str() + ")";
}

namespace {
Tree parse_at(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size()) throw std::invalid_argument("tree parse: unexpected end");
  if (text[pos] == '*') { ++pos; return Tree(); }
  if (text[pos] != '(') throw std::invalid_argument("tree parse: expected '*' or '('");
  ++pos;
  Tree l = parse_at(text, pos);
  Tree r = parse_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != ')')
    throw std::invalid_argument("tree parse: expected ')'");
  ++pos;
  return Tree(std::move(l), std::move(r));
}
}  // namespace

Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw std::invalid_argument("tree parse: trailing characters");
  return t;
}

Tree Tree::right_vine(int k) {
  Tree t;
  for (int i = 0; i < k; ++i) t = Tree(Tree(), std::move(t));
  return t;
}

Tree Tree::left_vine(int k) {
  Tree t;
  for (int i = 0; i < k; ++i) t = Tree(std::move(t), Tree());
  return t;
}

Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  return Tree(mirror(t.right()), mirror(t.left()));
}

bool is_right_vine(const Tree& t) {
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    if (!cur->left().is_leaf()) return false;
    cur = &cur->right();
  }
  return true;
}

bool is_left_vine(const Tree& t) {
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    if (!cur->right().is_leaf()) return false;
    cur = &cur->left();
  }
  return true;
}

std::vector<CaretInfo> caret_table(const Tree& t) {
  std::vector<CaretInfo> table;
  table.reserve(t.carets());
  int leaf_counter = 0;
  std::function<void(const Tree&, bool, bool)> walk = [&](const Tree& n, bool lsp, bool rsp) {
    if (n.is_leaf()) { ++leaf_counter; return; }
    const int first_leaf = leaf_counter;
    walk(n.left(), lsp, false);
    CaretInfo info;
    info.on_left_spine = lsp;
    info.on_right_spine = rsp;
    info.right_subtree_empty = n.right().is_leaf();
    info.right_subtree_vine = is_right_vine(n.right());
    info.first_leaf = first_leaf;
    info.exposed = n.left().is_leaf() && n.right().is_leaf();
    table.push_back(info);
    walk(n.right(), false, rsp);
  };
  walk(t, true, true);
  return table;
}

std::vector<int> leaf_exponents(const Tree& t) {
  std::vector<int> out(t.leaves(), 0);
  int leaf_counter = 0;
  // depth_off_right(v) = number of upward left edges from v whose upper
  // endpoint is off the right side; a leaf inherits the count of its
  // parent chain.
  std::function<void(const Tree&, bool, int)> walk = [&](const Tree& n, bool rsp, int chain) {
    if (n.is_leaf()) { out[leaf_counter++] = chain; return; }
    // Left child: extends the left-edge chain unless this caret is on
    // the right side, which cuts the path.
    walk(n.left(), false, rsp ? 0 : chain + 1);
    walk(n.right(), rsp, 0);
  };
  if (!t.is_leaf()) {
    walk(t.left(), false, 0);  // root is on the right side: chain resets above it
    walk(t.right(), true, 0);
  } else {
    out[0] = 0;
  }
  return out;
}

std::vector<int> exposed_caret_leaf_positions(const Tree& t) {
  std::vector<int> out;
  int leaf_counter = 0;
  std::function<void(const Tree&)> walk = [&](const Tree& n) {
    if (n.is_leaf()) { ++leaf_counter; return; }
    if (n.left().is_leaf() && n.right().is_leaf()) {
      out.push_back(leaf_counter);
      leaf_counter += 2;
      return;
    }
    walk(n.left());
    walk(n.right());
  };
  walk(t);
  return out;
}

std::optional<int> first_exposed_caret_infix(const Tree& t) {
  auto table = caret_table(t);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].exposed) return static_cast<int>(i) + 1;
  return std::nullopt;
}

Tree remove_exposed_caret(const Tree& t, int leaf_pos) {
  int leaf_counter = 0;
  bool removed = false;
  std::function<Tree(const Tree&)> walk = [&](const Tree& n) -> Tree {
    if (n.is_leaf()) { ++leaf_counter; return n; }
    if (!removed && n.left().is_leaf() && n.right().is_leaf() && leaf_counter == leaf_pos) {
      removed = true;
      leaf_counter += 2;
      return Tree();
    }
    Tree l = walk(n.left());
    Tree r = walk(n.right());
    if (l == n.left() && r == n.right()) return n;
    return Tree(std::move(l), std::move(r));
  };
  Tree result = walk(t);
  if (!removed) throw std::invalid_argument("remove_exposed_caret: no exposed caret at leaf position");
  return result;
}

Tree tree_union(const Tree& a, const Tree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  Tree l = tree_union(a.left(), b.left());
  Tree r = tree_union(a.right(), b.right());
  if (l == a.left() && r == a.right()) return a;
  return Tree(std::move(l), std::move(r));
}

namespace {
void decompose_rec(const Tree& big, const Tree& prefix, std::vector<Tree>& out) {
  if (prefix.is_leaf()) { out.push_back(big); return; }
  if (big.is_leaf()) throw std::logic_error("decompose_over: prefix is not contained in tree");
  decompose_rec(big.left(), prefix.left(), out);
  decompose_rec(big.right(), prefix.right(), out);
}

Tree attach_rec(const Tree& base, const std::vector<Tree>& grafts, std::size_t& idx) {
  if (base.is_leaf()) return grafts.at(idx++);
  Tree l = attach_rec(base.left(), grafts, idx);
  Tree r = attach_rec(base.right(), grafts, idx);
  if (l == base.left() && r == base.right()) return base;
  return Tree(std::move(l), std::move(r));
}
}  // namespace

std::vector<Tree> decompose_over(const Tree& big, const Tree& prefix) {
  std::vector<Tree> out;
  out.reserve(prefix.leaves());
  decompose_rec(big, prefix, out);
  return out;
}

Tree attach_at_leaves(const Tree& base, const std::vector<Tree>& grafts) {
  if (static_cast<int>(grafts.size()) != base.leaves())
    throw std::invalid_argument("attach_at_leaves: graft count does not match leaf count");
  std::size_t idx = 0;
  return attach_rec(base, grafts, idx);
}

std::vector<Tree> right_spine_left_subtrees(const Tree& t) {
  std::vector<Tree> out;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    out.push_back(cur->left());
    cur = &cur->right();
  }
  return out;
}

std::vector<Tree> left_spine_right_subtrees(const Tree& t) {
  std::vector<Tree> out;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    out.push_back(cur->right());
    cur = &cur->left();
  }
  return out;
}

Tree rotate_left(const Tree& t) {
  if (t.is_leaf() || t.right().is_leaf())
    throw std::invalid_argument("rotate_left: right child required");
  return Tree(Tree(t.left(), t.right().left()), t.right().right());
}

Tree rotate_right(const Tree& t) {
  if (t.is_leaf() || t.left().is_leaf())
    throw std::invalid_argument("rotate_right: left child required");
  return Tree(t.left().left(), Tree(t.left().right(), t.right()));
}

Tree rotate_at_right_spine(const Tree& t, int pos, bool leftward) {
  if (t.is_leaf()) throw std::invalid_argument("rotate_at_right_spine: no such spine caret");
  if (pos == 1) return leftward ? rotate_left(t) : rotate_right(t);
  return Tree(t.left(), rotate_at_right_spine(t.right(), pos - 1, leftward));
}

Tree rotate_at_left_spine(const Tree& t, int pos, bool leftward) {
  if (t.is_leaf()) throw std::invalid_argument("rotate_at_left_spine: no such spine caret");
  if (pos == 1) return leftward ? rotate_left(t) : rotate_right(t);
  return Tree(rotate_at_left_spine(t.left(), pos - 1, leftward), t.right());
}

bool has_interior_caret(const Tree& t) {
  for (const CaretInfo& c : caret_table(t))
    if (c.interior()) return true;
  return false;
}

}  // namespace tamecomb::thompson
