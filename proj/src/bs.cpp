#include "tamecomb/bs.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamecomb::bs {

namespace {
i64 checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("bs: integer overflow");
  return static_cast<i64>(v);
}
}  // namespace

i64 ipow(i64 base, i64 exp) {
  __int128 r = 1;
  for (i64 i = 0; i < exp; ++i) {
    r *= base;
    if (r > INT64_MAX) throw std::overflow_error("ipow: overflow");
  }
  return static_cast<i64>(r);
}

std::string BsElement::word_str() const {
  std::string out;
  auto piece = [&out](const std::string& head, i64 e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += head;
    if (e != 1) out += "^" + std::to_string(e);
  };
  piece("t", -m);
  piece("a", j);
  piece("t", s);
  return out.empty() ? "1" : out;
}

BsElement normalize(i64 m, i64 j, i64 s, int p) {
  if (m < 0 || s < 0) throw std::domain_error("normalize: m and s must be nonnegative");
  if (p < 2) throw std::domain_error("normalize: p must be at least 2");
  while (m > 0 && s > 0 && j % p == 0) {
    m -= 1;
    s -= 1;
    j /= p;
  }
  return BsElement{m, j, s};
}

BsElement bs_multiply(const BsElement& u, const BsElement& v, int p) {
  // t^-m1 a^j1 t^s1 * t^-m2 a^j2 t^s2 with the a-power carried across
  // the t-gap: t^d a^j t^-d = a^(j p^d).
  const i64 d = u.s - v.m;
  if (d >= 0) {
    const i64 j = checked(__int128(u.j) + __int128(v.j) * ipow(p, d));
    return normalize(u.m, j, d + v.s, p);
  }
  const i64 e = -d;
  const i64 j = checked(__int128(u.j) * ipow(p, e) + v.j);
  return normalize(u.m + e, j, v.s, p);
}

BsElement bs_invert(const BsElement& u, int p) { return normalize(u.s, -u.j, u.m, p); }

BsElement bs_eval_word(const GenWord& word, int p) {
  BsElement acc;
  for (const Letter& l : word) {
    BsElement gen;
    if (l.index == 0) gen = BsElement{0, l.sign, 0};
    else if (l.index == 1) gen = l.sign > 0 ? BsElement{0, 0, 1} : BsElement{1, 0, 0};
    else throw std::domain_error("bs_eval_word: letters are a and t only");
    acc = bs_multiply(acc, gen, p);
  }
  return acc;
}

namespace {

struct DigitPlan {
  std::vector<i64> digits;  // least significant first; empty for value 0
  i64 cost = 0;             // sum |digit| + 2 * max(top - tau, 0)
};

// Minimal contribution of the digit expansion of v (> 0) starting at
// level `lvl`, where digit levels above `tau` cost 2 apiece in t-moves.
// Digits lie in [-h, h]; the top digit alone may reach h+1.
DigitPlan best_digits(i64 v, i64 lvl, i64 tau, int p, int h) {
  if (v == 0) return {};
  DigitPlan best;
  best.cost = INT64_MAX;
  const i64 r = v % p;  // 0 <= r < p since v > 0
  auto consider = [&](i64 d) {
    if (d < -(h + 1) || d > h + 1) return;
    const i64 rest = (v - d) / p;
    if (std::abs(d) == h + 1 && rest != 0) return;  // h+1 only at the top
    if (d == 0 && rest == 0) return;                // top digit must be nonzero
    DigitPlan sub = best_digits(rest, lvl + 1, tau, p, h);
    i64 cost = std::abs(d) + sub.cost;
    if (rest == 0) cost += 2 * std::max<i64>(lvl - tau, 0);
    if (cost < best.cost) {
      best.digits = std::move(sub.digits);
      best.digits.insert(best.digits.begin(), d);
      best.cost = cost;
    }
  };
  consider(r);
  consider(r - p);
  if (best.cost == INT64_MAX) throw std::logic_error("best_digits: no valid digit");
  return best;
}

}  // namespace

GeodesicForm geodesic_word(const BsElement& g, int p) {
  if (p < 3) throw std::domain_error("geodesic_word: p must be at least 3");
  const int h = p / 2;
  GeodesicForm gf;
  gf.m = g.m;
  gf.s = g.s;
  gf.form = g.s >= g.m ? 2 : 1;
  // Digit levels are 0-based from depth -m; free t-travel reaches level
  // max(s, m) (form 1 tops out at m, form 2 at s), beyond which each
  // level costs two extra t-letters.
  const i64 tau = std::max(g.s, g.m);
  const i64 sign = g.j < 0 ? -1 : 1;
  DigitPlan plan = best_digits(std::llabs(g.j), 0, tau, p, h);
  gf.digits = plan.digits;
  for (i64& d : gf.digits) d *= sign;
  if (gf.digits.empty()) gf.digits.push_back(0);  // j = 0: single zero digit at -m
  gf.k = -g.m + static_cast<i64>(gf.digits.size()) - 1;
  return gf;
}

GenWord GeodesicForm::word(int p) const {
  (void)p;
  GenWord out;
  auto push_run = [&out](int index, i64 count) {
    const int sign = count < 0 ? -1 : +1;
    for (i64 i = 0; i < std::llabs(count); ++i) out.push_back(Letter{index, sign});
  };
  if (form == 1) {
    // top-down spelling: t^k a^{i_k} t^-1 ... a^{i_-m} t^s
    push_run(1, k);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      push_run(0, *it);
      if (std::next(it) != digits.rend()) push_run(1, -1);
    }
    push_run(1, s);
  } else {
    // bottom-up spelling: t^-m a^{i_-m} t ... t a^{i_k} t^(s-m-k)
    push_run(1, -m);
    for (auto it = digits.begin(); it != digits.end(); ++it) {
      push_run(0, *it);
      if (std::next(it) != digits.end()) push_run(1, 1);
    }
    push_run(1, s - m - k);
  }
  return out;
}

int GeodesicForm::length() const {
  i64 digit_sum = 0;
  for (i64 d : digits) digit_sum += std::llabs(d);
  const i64 tau = std::max<i64>(s - m, 0);
  const i64 excess = 2 * std::max<i64>(k - tau, 0);
  return static_cast<int>(m + s + digit_sum + excess);
}

int bs_length(const BsElement& g, int p) { return geodesic_word(g, p).length(); }

DhuPath dhu_path(const BsElement& g) { return DhuPath{g.m, g.j, g.s}; }

std::string t_vertex_key(const BsElement& g, int p) {
  if (g.s == 0) return "d" + std::to_string(g.m);
  const i64 mod = ipow(p, g.s);
  i64 r = g.j % mod;
  if (r < 0) r += mod;
  return std::to_string(g.m) + ":" + std::to_string(r) + ":" + std::to_string(g.s);
}

std::string nadir_key(const BsElement& g, int p) {
  return t_vertex_key(BsElement{g.m, 0, 0}, p);
}

RealCoord real_coord(const BsElement& g, int p) {
  (void)p;
  return RealCoord{g.j, g.m};
}

BsPoint bs_point(const BsElement& g, int p) {
  return BsPoint{real_coord(g, p), t_vertex_key(g, p)};
}

namespace {
// |j| > p^(a/b) with integer a possibly negative, b >= 1.
bool abs_exceeds_power(i64 j, int p, i64 a, i64 b) {
  const i64 aj = std::llabs(j);
  if (a < 0) return aj >= 1;
  // compare aj^b > p^a using 128-bit stepping with early exit
  __int128 lhs = 1;
  bool lhs_huge = false;
  for (i64 i = 0; i < b; ++i) {
    lhs *= aj;
    if (lhs > __int128(1) << 100) { lhs_huge = true; break; }
  }
  __int128 rhs = 1;
  bool rhs_huge = false;
  for (i64 i = 0; i < a; ++i) {
    rhs *= p;
    if (rhs > __int128(1) << 100) { rhs_huge = true; break; }
  }
  if (lhs_huge && rhs_huge)
    throw std::overflow_error("abs_exceeds_power: both sides overflow");
  if (lhs_huge) return true;
  if (rhs_huge) return false;
  return lhs > rhs;
}
}  // namespace

BoundChecks bound_checks(i64 n, i64 B, i64 E, const BsElement& g, int p) {
  const int h = p / 2;
  BoundChecks out;
  const bool range_ok = 0 <= g.m && g.m < n && 0 <= g.s && g.s < n;
  const i64 len = bs_length(g, p);

  if (range_ok && h + 2 < B) {
    out.length_implies_digit.applicable = true;
    if (len > B * n) {
      // |j| > p^((B/(h+2) - 2) n) == |j|^(h+2) > p^((B - 2(h+2)) n)
      out.length_implies_digit.holds =
          abs_exceeds_power(g.j, p, (B - 2 * (h + 2)) * n, h + 2);
    }
  }
  if (range_ok && E > 1) {
    out.digit_implies_length.applicable = true;
    if (abs_exceeds_power(g.j, p, E * n, 1)) {
      out.digit_implies_length.holds = len > (E - 1) * n;
    }
  }
  return out;
}

CoeffWitness coeff1_witness(int p, int C) {
  if (p < 8) throw std::domain_error("coeff1_witness: requires p >= 8");
  if (C < 2) throw std::domain_error("coeff1_witness: requires C >= 2");
  const i64 h = p / 2;
  CoeffWitness w;

  auto push_run = [](GenWord& word, int index, i64 count) {
    const int sign = count < 0 ? -1 : +1;
    for (i64 i = 0; i < std::llabs(count); ++i) word.push_back(Letter{index, sign});
  };

  push_run(w.loop, 1, C);
  push_run(w.loop, 0, 1);
  push_run(w.loop, 1, -C);
  push_run(w.loop, 0, 1);
  push_run(w.loop, 1, C);
  push_run(w.loop, 0, -1);
  push_run(w.loop, 1, -C);
  push_run(w.loop, 0, -1);
  w.loop_trivial = bs_eval_word(w.loop, p).is_identity();

  const i64 power = ipow(p, C);
  w.g = BsElement{0, (h - 2) * ((power - 1) / (p - 1)), 0};

  for (int i = 0; i < C - 1; ++i) {
    push_run(w.v, 0, h - 2);
    push_run(w.v, 1, 1);
  }
  push_run(w.v, 0, h - 2);
  push_run(w.v, 1, -(C - 1));
  w.v_represents_g = bs_eval_word(w.v, p) == w.g;

  w.len_v = static_cast<int>(h) * C - 2;
  if (static_cast<int>(w.v.size()) != w.len_v)
    throw std::logic_error("coeff1_witness: spelled witness has unexpected length");
  w.bound = 3 * C + 2;
  w.exceeds_bound = w.len_v > w.bound;
  return w;
}

}  // namespace tamecomb::bs
