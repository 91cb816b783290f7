#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tamecomb/bs.hpp"
#include "tamecomb/rational.hpp"

namespace tamecomb::bs {

/// Edge of the BS(1,p) Cayley graph from `from` along generator a
/// (gen 0) or t (gen 1), positive direction.
struct BsEdge {
  BsElement from;
  int gen = 0;
  BsElement to(int p) const {
    return bs_multiply(from, gen == 0 ? BsElement{0, 1, 0} : BsElement{0, 0, 1}, p);
  }
  std::string key() const {
    return (gen == 0 ? "a(" : "t(") + from.word_str() + ")";
  }
};

/// Rectangle cell named by its bottom-left corner g: the loop
/// t a t^-1 a^-p based at g.
struct BsCell {
  BsElement corner;
  std::string key() const { return "cell(" + corner.word_str() + ")"; }
};

using BsPointRef = std::variant<BsElement, BsEdge, BsCell>;

Rat bs_level(const BsPointRef& ref, int p);
/// The designated nearby vertex: edges pick the lower endpoint
/// (t-edges) or the endpoint of larger |real coordinate| (a-edges, ties
/// toward the positive side); cells pick the bottom corner of larger
/// |real coordinate|.
BsElement associated_vertex(const BsPointRef& ref, int p);
std::string bs_point_key(const BsPointRef& ref);

struct BsTracePoint {
  BsPointRef ref;
  Rat lev;
  BsElement assoc;
  Rat assoc_lev;
  int segment = 0;  // 0 = down, 1 = horizontal, 2 = up
};

/// Discretized down-horizontal-up path of the midpoint of an edge:
/// carrier cells visited from the identity outward.
std::vector<BsTracePoint> bs_trace(const BsEdge& e, int p);

struct BsTameCheck {
  bool pass = true;
  bool level_condition = true;
  bool slack_ok = true;         // |lev(assoc) - lev(carrier)| < h + 3
  bool down_monotone = true;    // levels nondecreasing along the descent
  bool horizontal_chain = true; // digit-bound chain along the horizontal part
  bool nadir_shared = true;     // upward carriers keep the trace's nadir
  bool good = true;             // the trace stays in the 1-skeleton
  int cells_used = 0;           // 2-cell carriers along the trace
  Rat max_level;
  std::size_t trace_len = 0;
};

/// Radial tameness of the DHU trace with slope B and intercept C, plus
/// the structural facts the linear bound rests on.
BsTameCheck check_tame_bs(const BsEdge& e, const Rat& slope, const Rat& intercept, int p);

/// Default constants: B = 4(h+2), C = (h+4)(B+1).
Rat bs_default_slope(int p);
Rat bs_default_intercept(int p);

}  // namespace tamecomb::bs
