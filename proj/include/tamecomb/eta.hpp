#pragma once

#include <optional>
#include <set>

#include "tamecomb/tree_pair.hpp"

namespace tamecomb::thompson {

/// Traversal word for a strictly negative element represented by
/// (t, R_{N(t)}).  Appending right carets to the last leaf of t does not
/// change the output, so unreduced representatives of that shape are fine.
GenWord eta_negative(const Tree& t);

/// Nested traversal normal form of an arbitrary element: the free
/// reduction of eta(w_p) eta(w_n), which cancels exactly a central x0
/// block.
GenWord eta(const TreePair& w);

/// Recognizer for traversal words over {x0, x0^-1, x1^-1}: freely
/// reduced, no prefix with positive x0 exponent sum, and after the first
/// x0 x0 only x0 follows.  Throws std::domain_error on other letters.
bool is_ntp(const GenWord& y);

struct ExposedScan {
  bool first_caret_exposed = false;
  std::set<int> exposed;  // caret numbers, including caret 1 when exposed
};

/// Exposed carets of the negative tree of the evaluated element, read
/// off the word alone.  Pre: is_ntp(y); throws std::domain_error otherwise.
ExposedScan exposed_scan(const GenWord& y);

/// First index i (1-based) where the prefix caret count drops, if any.
std::optional<int> check_prefix_monotone(const GenWord& y);

}  // namespace tamecomb::thompson
