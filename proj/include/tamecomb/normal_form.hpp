#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tamecomb/tree_pair.hpp"

namespace tamecomb::thompson {

/// Infinite-presentation normal form: positive part (ascending indices,
/// positive exponents) followed by the negative part (stored ascending,
/// emitted with descending indices).  Terms with both x_i and x_i^-1
/// present require an x_{i+1}^{+-1} term as well.
struct InfNormalForm {
  std::vector<std::pair<int, int>> positive;  // (index, exponent > 0)
  std::vector<std::pair<int, int>> negative;

  bool empty() const { return positive.empty() && negative.empty(); }
  friend bool operator==(const InfNormalForm& a, const InfNormalForm& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
};

InfNormalForm to_inf_normal_form(const TreePair& w);

/// Validates the normal-form invariants (including the x_{i+1} condition)
/// and evaluates; throws std::invalid_argument on violation.
TreePair from_inf_normal_form(const InfNormalForm& nf);

/// The word the form denotes, over infinite-presentation tokens.
GenWord normal_form_word(const InfNormalForm& nf);

/// `x0 x1^2 . x3^-1 x0^-2` with `.` separating the parts.
std::string format_normal_form(const InfNormalForm& nf);

}  // namespace tamecomb::thompson
