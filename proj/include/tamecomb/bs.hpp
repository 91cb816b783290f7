#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamecomb/genword.hpp"
#include "tamecomb/rational.hpp"

namespace tamecomb::bs {

using i64 = std::int64_t;

/// Canonical triple (m, j, s) for t^-m a^j t^s in BS(1,p): m, s >= 0 and
/// never (m > 0 and s > 0 and p | j).
struct BsElement {
  i64 m = 0, j = 0, s = 0;
  friend bool operator==(const BsElement& a, const BsElement& b) {
    return a.m == b.m && a.j == b.j && a.s == b.s;
  }
  friend bool operator<(const BsElement& a, const BsElement& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.j != b.j) return a.j < b.j;
    return a.s < b.s;
  }
  bool is_identity() const { return m == 0 && j == 0 && s == 0; }
  std::string key() const {
    return std::to_string(m) + "," + std::to_string(j) + "," + std::to_string(s);
  }
  std::string word_str() const;  // "t^-m a^j t^s" with zero factors dropped
};

BsElement normalize(i64 m, i64 j, i64 s, int p);
BsElement bs_multiply(const BsElement& u, const BsElement& v, int p);
BsElement bs_invert(const BsElement& u, int p);
BsElement bs_eval_word(const GenWord& word, int p);  // letters: a = index 0, t = index 1

i64 ipow(i64 base, i64 exp);

/// Geodesic witness: a horocyclic digit word in one of two shapes,
///   form 1: t^k a^{i_k} t^-1 ... a^{i_-m} t^s          (s <= m)
///   form 2: t^-m a^{i_-m} t ... t a^{i_k} t^(s-m-k)    (m <= s)
/// with |i_l| <= h below the top digit and |i_k| <= h+1 at the top.
struct GeodesicForm {
  int form = 2;
  std::vector<i64> digits;  // i_{-m} first
  i64 m = 0, s = 0, k = 0;  // k = top digit index (from -m upward)
  GenWord word(int p) const;
  int length() const;
};

GeodesicForm geodesic_word(const BsElement& g, int p);
int bs_length(const BsElement& g, int p);

struct DhuPath {
  i64 down = 0;        // m
  i64 horizontal = 0;  // j at depth m
  i64 up = 0;          // s
};
DhuPath dhu_path(const BsElement& g);

/// Tree-coordinate key of the vertex class reachable from g by powers of
/// a: (m, j mod p^s, s) with s = 0 collapsing to the depth alone.
std::string t_vertex_key(const BsElement& g, int p);

/// Key of the lowest tree vertex on the geodesic from the identity's
/// projection: the class of t^-m.
std::string nadir_key(const BsElement& g, int p);

/// Exact projection to the real coordinate: j * p^-m as num / p^exp,
/// kept unreduced so comparisons stay p-adic.
struct RealCoord {
  i64 num = 0;
  i64 exp = 0;  // denominator p^exp
  Rat as_rat(int p) const { return Rat(num, ipow(p, exp)); }
};
RealCoord real_coord(const BsElement& g, int p);

/// A vertex as a point of the product complex: its real coordinate and
/// the tree vertex it projects to.
struct BsPoint {
  RealCoord r;
  std::string tkey;
};
BsPoint bs_point(const BsElement& g, int p);

struct BoundCheckResult {
  bool applicable = false;
  bool holds = true;
};

/// Both digit-bound implications on one instance:
///   length > B n  implies |j| > p^((B/(h+2) - 2) n)     (needs h+2 < B)
///   |j| > p^(E n) implies length > (E-1) n              (needs 1 < E)
/// with 0 <= m < n and 0 <= s < n.
struct BoundChecks {
  BoundCheckResult length_implies_digit;
  BoundCheckResult digit_implies_length;
};
BoundChecks bound_checks(i64 n, i64 B, i64 E, const BsElement& g, int p);

struct CoeffWitness {
  GenWord loop;      // t^C a t^-C a t^C a^-1 t^-C a^-1
  BsElement g;       // a^((h-2)(p^C - 1)/(p - 1))
  GenWord v;         // (a^(h-2) t)^(C-1) a^(h-2) t^-(C-1)
  int len_v = 0;     // h C - 2
  int bound = 0;     // 3 C + 2
  bool loop_trivial = false;
  bool v_represents_g = false;
  bool exceeds_bound = false;  // len_v > bound, the contradiction for C > 4
};

/// The witness computation behind the no-coefficient-1 result; requires
/// p >= 8 and C >= 2.
CoeffWitness coeff1_witness(int p, int C);

/// Cayley-graph adapter for the ball oracle.
struct BsGroup {
  int p;
  using Element = BsElement;
  Element identity() const { return BsElement{}; }
  int generator_count() const { return 2; }
  Element apply(const Element& e, int dir) const {
    static const BsElement gens[4] = {{0, 1, 0}, {0, 0, 1}, {0, -1, 0}, {1, 0, 0}};
    return bs_multiply(e, gens[dir], p);
  }
  std::string key(const Element& e) const { return e.key(); }
  std::string direction_name(int dir) const {
    static const char* names[] = {"a", "t", "a^-1", "t^-1"};
    return names[dir];
  }
};

}  // namespace tamecomb::bs
