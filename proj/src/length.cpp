#include "tamecomb/length.hpp"

namespace tamecomb::thompson {

namespace {
// type_n[p-1]: caret p+1 exists, is interior, and lies in the right
// subtree of caret p (the infix successor of p sits there exactly when
// p's right subtree is nonempty).
std::vector<bool> type_n_flags(const std::vector<CaretInfo>& table) {
  std::vector<bool> out(table.size(), false);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].right_subtree_empty) continue;
    if (i + 1 < table.size() && table[i + 1].interior()) out[i] = true;
  }
  return out;
}
}  // namespace

int non_right_carets(const TreePair& w) {
  int count = 0;
  for (const CaretInfo& c : caret_table(w.negative()))
    if (!c.on_right_spine) ++count;
  for (const CaretInfo& c : caret_table(w.positive()))
    if (!c.on_right_spine) ++count;
  return count;
}

int penalty_pairs(const TreePair& w) {
  const auto tn = caret_table(w.negative());
  const auto tp = caret_table(w.positive());
  const auto nn = type_n_flags(tn);
  const auto np = type_n_flags(tp);
  const int n = w.carets();
  int count = 0;
  for (int p = 0; p < n; ++p) {
    const bool left_in_either = tn[p].on_left_spine || tp[p].on_left_spine;
    if (left_in_either) continue;
    const bool type_n = nn[p] || np[p];
    const bool right_in_both = tn[p].on_right_spine && tp[p].on_right_spine;
    if (type_n || (right_in_both && p != n - 1)) ++count;
  }
  return count;
}

int word_length(const TreePair& w) { return non_right_carets(w) + 2 * penalty_pairs(w); }

}  // namespace tamecomb::thompson
