#pragma once

#include "tamecomb/tree_pair.hpp"

namespace tamecomb::thompson {

/// Word length over {x0^-1, x0, x1^-1, x1}: the non-right caret count of
/// both trees plus twice the number of penalty caret pairs.
int word_length(const TreePair& w);

/// Number of penalty caret pairs of the reduced diagram.
int penalty_pairs(const TreePair& w);

/// Carets of both trees that are not right carets (root counts as right).
int non_right_carets(const TreePair& w);

}  // namespace tamecomb::thompson
