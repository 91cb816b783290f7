#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tamecomb {

/// One letter of a word over an indexed generating set: generator
/// `index` raised to `sign` (+1 or -1).  For Thompson's group F the
/// index is the generator subscript (0 and 1 are the finite generators,
/// i >= 2 the infinite-presentation tokens); for BS(1,p) index 0 is `a`
/// and index 1 is `t`.
struct Letter {
  int index = 0;
  int sign = +1;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.index == b.index && a.sign == b.sign;
  }
  Letter inverse() const { return Letter{index, -sign}; }
};

using GenWord = std::vector<Letter>;

GenWord inverse_word(const GenWord& w);
GenWord free_reduce(const GenWord& w);
GenWord concat(const GenWord& a, const GenWord& b);

/// F literals: whitespace-separated tokens `x0`, `x1^-1`, `x5^-2`, ...
/// A token with |exponent| = k expands to k letters.
GenWord parse_f_word(std::string_view text);
std::string format_f_word(const GenWord& w);

/// BS(1,p) literals: tokens `a`, `t^-2`, `a^5`, ...
GenWord parse_bs_word(std::string_view text);
std::string format_bs_word(const GenWord& w);

/// Rewrites every x_i with i >= 2 as x0^-(i-1) x1 x0^(i-1).
GenWord expand_infinite_generators(const GenWord& w);

}  // namespace tamecomb
