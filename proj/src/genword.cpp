#include "tamecomb/genword.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tamecomb {

GenWord inverse_word(const GenWord& w) {
  GenWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

GenWord free_reduce(const GenWord& w) {
  GenWord out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GenWord concat(const GenWord& a, const GenWord& b) {
  GenWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& why) {
  std::ostringstream os;
  os << "parse error at position " << pos << " in \"" << std::string(text) << "\": " << why;
  throw std::invalid_argument(os.str());
}

// Splits on whitespace, then parses each token as <head><digits>(^<int>)?
// where `head` identifies the generator family.
GenWord parse_tokens(std::string_view text, bool bs_alphabet) {
  GenWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);

    int index = 0;
    std::size_t p = 0;
    if (bs_alphabet) {
      if (tok[0] == 'a') index = 0;
      else if (tok[0] == 't') index = 1;
      else parse_fail(text, start, "expected 'a' or 't'");
      p = 1;
    } else {
      if (tok[0] != 'x') parse_fail(text, start, "expected generator 'x<k>'");
      p = 1;
      if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
        parse_fail(text, start + p, "expected generator subscript");
      index = 0;
      while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
        index = index * 10 + (tok[p] - '0');
        if (index > 1000000) parse_fail(text, start + p, "subscript too large");
        ++p;
      }
    }

    long exponent = 1;
    if (p < tok.size()) {
      if (tok[p] != '^') parse_fail(text, start + p, "expected '^'");
      ++p;
      bool neg = false;
      if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) { neg = tok[p] == '-'; ++p; }
      if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
        parse_fail(text, start + p, "expected exponent digits");
      long mag = 0;
      while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
        mag = mag * 10 + (tok[p] - '0');
        if (mag > 1000000) parse_fail(text, start + p, "exponent too large");
        ++p;
      }
      if (p != tok.size()) parse_fail(text, start + p, "trailing characters in token");
      exponent = neg ? -mag : mag;
    }

    const int sign = exponent < 0 ? -1 : +1;
    for (long k = 0; k < std::labs(exponent); ++k) out.push_back(Letter{index, sign});
  }
  return out;
}

std::string format_tokens(const GenWord& w, bool bs_alphabet) {
  // Adjacent equal letters collapse into one token with an exponent.
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    if (bs_alphabet) out += (w[i].index == 0 ? "a" : "t");
    else out += "x" + std::to_string(w[i].index);
    const long exponent = w[i].sign * run;
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

}  // namespace

GenWord parse_f_word(std::string_view text) { return parse_tokens(text, false); }
std::string format_f_word(const GenWord& w) { return format_tokens(w, false); }

GenWord parse_bs_word(std::string_view text) {
  GenWord w = parse_tokens(text, true);
  for (const Letter& l : w)
    if (l.index > 1) throw std::invalid_argument("BS words use only 'a' and 't'");
  return w;
}
std::string format_bs_word(const GenWord& w) { return format_tokens(w, true); }

GenWord expand_infinite_generators(const GenWord& w) {
  GenWord out;
  for (const Letter& l : w) {
    if (l.index <= 1) { out.push_back(l); continue; }
    const int shift = l.index - 1;
    // x_i = x0^-(i-1) x1 x0^(i-1); invert for x_i^-1.
    for (int k = 0; k < shift; ++k) out.push_back(Letter{0, -1});
    out.push_back(Letter{1, l.sign});
    for (int k = 0; k < shift; ++k) out.push_back(Letter{0, +1});
  }
  return out;
}

}  // namespace tamecomb
