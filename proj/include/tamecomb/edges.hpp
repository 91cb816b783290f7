#pragma once

#include <map>
#include <optional>
#include <string>

#include "tamecomb/eta.hpp"
#include "tamecomb/tree_pair.hpp"

namespace tamecomb::thompson {

/// Undirected Cayley-graph edge with endpoint set {w, w x_a^-1}, named
/// e_a(w).  Each edge has exactly one such name: the base is the
/// endpoint the x_a arrow points at.
struct EdgeId {
  TreePair base;
  int gen = 1;  // 0 or 1

  TreePair other_endpoint() const {
    return apply_generator(base, Letter{gen, -1}).first;
  }
  std::string key() const { return "e" + std::to_string(gen) + "(" + base.key() + ")"; }
  friend bool operator==(const EdgeId& a, const EdgeId& b) {
    return a.gen == b.gen && a.base == b.base;
  }
  friend bool operator<(const EdgeId& a, const EdgeId& b) {
    return a.key() < b.key();
  }
};

/// Subtree statistics of the negative tree.  A(w), B(w) are the left
/// subtrees of the root and of the root's right child; C(w), D(w) are
/// the left and right subtrees of the third right caret.  They exist
/// only when the negative tree has at least three right carets.
struct EdgeStats {
  int n_carets = 0;     // N(w)
  int right_carets = 0; // right carets of the negative tree, root included
  bool has_subtrees = false;  // the A/B/C/D decomposition exists
  Tree a, b, c, d;
  int n_a = 0, n_d = 0;
  std::optional<int> j;  // first exposed caret of the positive tree
  int s_r = 0, s_l = 0;  // of D(w) and A(w) respectively
  int c_r = 0, c_l = 0;
  int n_caret = 0;       // n(w): last right-spine caret of T_- with a left subtree
  bool ddagger = false;  // a caret cancels when multiplying by x1^-1
};

EdgeStats edge_stats(const TreePair& w);

/// Cache for nested traversal normal forms keyed by element.
class EtaCache {
public:
  const GenWord& get(const TreePair& w);

private:
  std::map<std::string, GenWord> cache_;
};

/// Definitional goodness: the loop eta(w) x_a^-1 eta(w x_a^-1)^-1 freely
/// reduces to the empty word.
bool is_good(const EdgeId& e, EtaCache& cache);
bool is_good(const EdgeId& e);

enum class GoodCondition { T1, T2, T3, T4 };
/// First satisfied sufficient condition for goodness, if any:
///   T1: index 0.  T2: at most two right carets.
///   T3: three or more right carets, no cancellation, D a right vine.
///   T4: no interior carets, cancellation, and the cancelled caret is
///       the first exposed caret of the positive tree.
std::optional<GoodCondition> goodness_certificate(const EdgeId& e);

enum class BadCase { C1, C2, C3 };
/// Necessary-case classification of a bad edge:
///   C1: D not a right vine.  C2: D a right vine, A a left vine,
///   cancellation, 2 <= j <= N_A.  C3: D a right vine, A not a left
///   vine, cancellation.
std::optional<BadCase> bad_case(const EdgeId& e);

const char* to_string(GoodCondition c);
const char* to_string(BadCase c);

}  // namespace tamecomb::thompson
