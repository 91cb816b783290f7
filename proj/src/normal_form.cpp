#include "tamecomb/normal_form.hpp"

#include <stdexcept>

namespace tamecomb::thompson {

InfNormalForm to_inf_normal_form(const TreePair& w) {
  InfNormalForm nf;
  const std::vector<int> ep = leaf_exponents(w.positive());
  for (int i = 0; i < static_cast<int>(ep.size()); ++i)
    if (ep[i] > 0) nf.positive.push_back({i, ep[i]});
  const std::vector<int> en = leaf_exponents(w.negative());
  for (int i = 0; i < static_cast<int>(en.size()); ++i)
    if (en[i] > 0) nf.negative.push_back({i, en[i]});
  return nf;
}

namespace {
void validate(const InfNormalForm& nf) {
  auto check_part = [](const std::vector<std::pair<int, int>>& part) {
    int prev = -1;
    for (const auto& [idx, exp] : part) {
      if (idx < 0 || exp <= 0)
        throw std::invalid_argument("normal form: indices must be >= 0 and exponents positive");
      if (idx <= prev)
        throw std::invalid_argument("normal form: indices must be strictly increasing");
      prev = idx;
    }
  };
  check_part(nf.positive);
  check_part(nf.negative);
  auto has_index = [](const std::vector<std::pair<int, int>>& part, int idx) {
    for (const auto& [i, e] : part)
      if (i == idx) return true;
    return false;
  };
  for (const auto& [idx, exp] : nf.positive) {
    if (has_index(nf.negative, idx) &&
        !has_index(nf.positive, idx + 1) && !has_index(nf.negative, idx + 1))
      throw std::invalid_argument(
          "normal form: x_i and x_i^-1 both present without any x_{i+1} term");
  }
}
}  // namespace

GenWord normal_form_word(const InfNormalForm& nf) {
  GenWord word;
  for (const auto& [idx, exp] : nf.positive)
    for (int k = 0; k < exp; ++k) word.push_back(Letter{idx, +1});
  for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it)
    for (int k = 0; k < it->second; ++k) word.push_back(Letter{it->first, -1});
  return word;
}

TreePair from_inf_normal_form(const InfNormalForm& nf) {
  validate(nf);
  return eval_word(normal_form_word(nf));
}

std::string format_normal_form(const InfNormalForm& nf) {
  std::string out;
  for (const auto& [idx, exp] : nf.positive) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(idx);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  out += out.empty() ? "." : " .";
  for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it)
    out += " x" + std::to_string(it->first) + "^-" + std::to_string(it->second);
  return out;
}

}  // namespace tamecomb::thompson
