#include "tamecomb/eta.hpp"

#include <functional>
#include <stdexcept>

namespace tamecomb::thompson {

namespace {

const Letter kX0{0, +1};
const Letter kX0i{0, -1};
const Letter kX1{1, +1};
const Letter kX1i{1, -1};

// Emits the traversal contributions caret by caret in infix order.  A
// caret's own letters wrap the block produced by its right subtree:
//   infix number 1                     -> nothing
//   left caret (root included)        -> x0^-1
//   interior, empty right subtree     -> x1^-1
//   interior, nonempty right subtree  -> x0^-1 <block> x0 x1^-1
//   right caret, right subtree with   -> x0^-1 <block> x0
//     a caret off its right spine
//   right caret otherwise             -> nothing
// Caret kinds are those of the whole tree, not of any subtree.
void traverse(const Tree& n, bool lspine, bool rspine, int& counter, GenWord& out) {
  if (n.is_leaf()) return;
  traverse(n.left(), lspine, false, counter, out);
  const int infix = ++counter;
  if (infix == 1) {
    traverse(n.right(), false, rspine, counter, out);
    return;
  }
  if (lspine) {
    // Only the root carries rspine here; its right child stays on the
    // right side.
    out.push_back(kX0i);
    traverse(n.right(), false, rspine, counter, out);
    return;
  }
  if (!rspine) {  // interior caret
    if (n.right().is_leaf()) {
      out.push_back(kX1i);
      return;
    }
    out.push_back(kX0i);
    traverse(n.right(), false, false, counter, out);
    out.push_back(kX0);
    out.push_back(kX1i);
    return;
  }
  // right non-root caret
  if (!is_right_vine(n.right())) {
    out.push_back(kX0i);
    traverse(n.right(), false, true, counter, out);
    out.push_back(kX0);
  } else {
    traverse(n.right(), false, true, counter, out);
  }
}

}  // namespace

GenWord eta_negative(const Tree& t) {
  GenWord out;
  int counter = 0;
  traverse(t, true, true, counter, out);
  return out;
}

GenWord eta(const TreePair& w) {
  const GenWord neg_part = eta_negative(w.negative());
  const GenWord pos_part = inverse_word(eta_negative(w.positive()));
  // The concatenation cancels exactly the central x0-block: pos_part ends
  // with x0^n, neg_part begins with x0^-n.
  std::size_t cancel = 0;
  while (cancel < pos_part.size() && cancel < neg_part.size() &&
         pos_part[pos_part.size() - 1 - cancel] == kX0 && neg_part[cancel] == kX0i)
    ++cancel;
  GenWord out(pos_part.begin(), pos_part.end() - static_cast<long>(cancel));
  out.insert(out.end(), neg_part.begin() + static_cast<long>(cancel), neg_part.end());
  if (out != free_reduce(concat(pos_part, neg_part)))
    throw std::logic_error("eta: concatenation cancelled beyond the central x0 block");
  return out;
}

namespace {
void require_path_alphabet(const GenWord& y) {
  for (const Letter& l : y) {
    const bool ok = (l.index == 0) || (l.index == 1 && l.sign == -1);
    if (!ok) throw std::domain_error("traversal words use only x0, x0^-1, x1^-1");
  }
}
}  // namespace

bool is_ntp(const GenWord& y) {
  require_path_alphabet(y);
  if (free_reduce(y) != y) return false;
  int x0_sum = 0;
  bool only_x0_from_here = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (only_x0_from_here && !(y[i] == kX0)) return false;
    if (y[i].index == 0) x0_sum += y[i].sign;
    if (x0_sum > 0) return false;
    if (i + 1 < y.size() && y[i] == kX0 && y[i + 1] == kX0) only_x0_from_here = true;
  }
  return true;
}

ExposedScan exposed_scan(const GenWord& y) {
  if (!is_ntp(y)) throw std::domain_error("exposed_scan: input is not a traversal word");
  ExposedScan scan;
  if (y.empty()) return scan;

  // Caret 1: first letter x0^-1 and every nonempty prefix with strictly
  // negative x0 exponent sum.
  if (y[0] == kX0i) {
    int sum = 0;
    bool always_negative = true;
    for (const Letter& l : y) {
      if (l.index == 0) sum += l.sign;
      if (sum >= 0) { always_negative = false; break; }
    }
    scan.first_caret_exposed = always_negative;
    if (always_negative) scan.exposed.insert(1);
  }

  // Carets 2, 3, ...: one decision per letter once the letter pattern
  // settles it; x0 (and x1^-1 after x0) defer the decision.
  int caret = 2;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const Letter cur = y[k];
    if (cur == kX0) continue;
    if (cur == kX1i && k > 0 && y[k - 1] == kX0) continue;
    bool exposed = false;
    if (cur == kX1i) {
      if (k == 0) exposed = true;  // caret 2 exposed when the word starts with x1^-1
      else if (y[k - 1] == kX0i) exposed = true;
      else if (y[k - 1] == kX1i) exposed = false;
    } else {  // x0^-1
      exposed = false;
    }
    if (exposed) scan.exposed.insert(caret);
    ++caret;
  }
  return scan;
}

std::optional<int> check_prefix_monotone(const GenWord& y) {
  TreePair acc;
  int prev = 0;
  const GenWord expanded = expand_infinite_generators(y);
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    acc = apply_generator(acc, expanded[i]).first;
    if (acc.carets() < prev) return static_cast<int>(i) + 1;
    prev = acc.carets();
  }
  return std::nullopt;
}

}  // namespace tamecomb::thompson
