#pragma once

#include <string>
#include <utility>

#include "tamecomb/genword.hpp"
#include "tamecomb/tree.hpp"

namespace tamecomb::thompson {

/// Reduced tree pair diagram (negative tree, positive tree).  The
/// identity is the pair of single leaves (zero carets).  Instances are
/// immutable and always reduced.
class TreePair {
public:
  TreePair() = default;  // identity

  /// Reduces the given pair; throws std::invalid_argument when the
  /// caret counts differ.
  static TreePair make_reduced(Tree negative, Tree positive);

  const Tree& negative() const { return neg_; }
  const Tree& positive() const { return pos_; }
  int carets() const { return neg_.carets(); }
  bool is_identity() const { return neg_.is_leaf(); }

  /// Canonical text key `negative|positive`.
  std::string key() const { return neg_.str() + "|" + pos_.str(); }

  friend bool operator==(const TreePair& a, const TreePair& b) {
    return a.neg_ == b.neg_ && a.pos_ == b.pos_;
  }
  friend bool operator!=(const TreePair& a, const TreePair& b) { return !(a == b); }
  friend bool operator<(const TreePair& a, const TreePair& b) { return a.key() < b.key(); }

private:
  Tree neg_, pos_;
};

/// Caret bookkeeping for one generator multiplication: carets added per
/// tree to perform the product, carets removed per tree to reduce it.
struct CaretDelta {
  int added = 0;
  int removed = 0;
};

TreePair multiply(const TreePair& u, const TreePair& v);
TreePair invert(const TreePair& w);

/// w * g for a finite generator letter (index 0 or 1, sign +-1).
std::pair<TreePair, CaretDelta> apply_generator(const TreePair& w, const Letter& g);

/// Evaluates a word letter by letter; x_i tokens with i >= 2 expand to
/// finite-generator words first.
TreePair eval_word(const GenWord& word);

/// The four generator diagrams.
const TreePair& generator_pair(const Letter& g);

}  // namespace tamecomb::thompson
