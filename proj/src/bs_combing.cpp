#include "tamecomb/bs_combing.hpp"

#include <algorithm>
#include <stdexcept>

namespace tamecomb::bs {

namespace {

const BsElement kA{0, 1, 0};
const BsElement kT{0, 0, 1};

i64 fdiv(i64 a, i64 b) {  // floor division, b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::vector<BsElement> cell_vertices(const BsCell& c, int p) {
  std::vector<BsElement> out;
  BsElement cur = c.corner;
  out.push_back(cur);
  for (int k = 0; k < p; ++k) {
    cur = bs_multiply(cur, kA, p);
    out.push_back(cur);
  }
  out.push_back(bs_multiply(c.corner, kT, p));
  out.push_back(bs_multiply(bs_multiply(c.corner, kT, p), kA, p));
  return out;
}

// |a| vs |b| as real coordinates; returns the larger, ties toward the
// positive side.
BsElement larger_abs_coord(const BsElement& a, const BsElement& b, int p) {
  const RealCoord ra = real_coord(a, p), rb = real_coord(b, p);
  const __int128 la = __int128(ra.num < 0 ? -ra.num : ra.num) * ipow(p, rb.exp);
  const __int128 lb = __int128(rb.num < 0 ? -rb.num : rb.num) * ipow(p, ra.exp);
  if (la != lb) return la > lb ? a : b;
  const __int128 sa = __int128(ra.num) * ipow(p, rb.exp);
  const __int128 sb = __int128(rb.num) * ipow(p, ra.exp);
  return sa >= sb ? a : b;
}

}  // namespace

Rat bs_level(const BsPointRef& ref, int p) {
  if (const auto* v = std::get_if<BsElement>(&ref)) return Rat(bs_length(*v, p));
  if (const auto* e = std::get_if<BsEdge>(&ref)) {
    const int a = bs_length(e->from, p);
    const int b = bs_length(e->to(p), p);
    return Rat(a + b, 2) + Rat(1, 4);
  }
  const BsCell& c = std::get<BsCell>(ref);
  const std::vector<BsElement> vs = cell_vertices(c, p);
  int sum = 0;
  for (const BsElement& v : vs) sum += bs_length(v, p);
  const std::int64_t cc = 4 * (p + 3) + 1;
  return Rat(sum, static_cast<std::int64_t>(vs.size())) + Rat(1, 4) + Rat(1, cc);
}

BsElement associated_vertex(const BsPointRef& ref, int p) {
  if (const auto* v = std::get_if<BsElement>(&ref)) return *v;
  if (const auto* e = std::get_if<BsEdge>(&ref)) {
    if (e->gen == 1) return e->from;  // t-edges: the lower endpoint
    return larger_abs_coord(e->from, e->to(p), p);
  }
  const BsCell& c = std::get<BsCell>(ref);
  BsElement br = c.corner;
  for (int k = 0; k < p; ++k) br = bs_multiply(br, kA, p);
  return larger_abs_coord(c.corner, br, p);
}

std::string bs_point_key(const BsPointRef& ref) {
  if (const auto* v = std::get_if<BsElement>(&ref)) return "v:" + v->key();
  if (const auto* e = std::get_if<BsEdge>(&ref)) return "e:" + e->key();
  return "c:" + std::get<BsCell>(ref).key();
}

namespace {

struct RefSeq {
  std::vector<std::pair<BsPointRef, int>> refs;
  void push(BsPointRef r, int seg) { refs.push_back({std::move(r), seg}); }
};

// Descent along the t^-infinity ray: vertices and edges down to depth.
void push_descent(RefSeq& seq, i64 depth) {
  seq.push(BsElement{0, 0, 0}, 0);
  for (i64 k = 1; k <= depth; ++k) {
    seq.push(BsEdge{BsElement{k, 0, 0}, 1}, 0);
    seq.push(BsElement{k, 0, 0}, 0);
  }
}

// Horizontal walk at depth m from position 0 toward the doubled target
// x2 (real coordinate x2 / (2 p^m)), emitting vertices and edges; stops
// at the last vertex at or before the target.
void push_horizontal_vertices(RefSeq& seq, i64 m, i64 x2, int p) {
  (void)p;
  const int sign = x2 > 0 ? 1 : -1;
  if (x2 == 0) return;
  for (i64 x = sign; 2 * x * sign <= x2 * sign; x += sign) {
    seq.push(BsEdge{BsElement{m, std::min(x, x - sign), 0}, 0}, 1);
    seq.push(BsElement{m, x, 0}, 1);
  }
}

// Vertex combing path: down to depth m, along a to j, up s levels.
void push_vertex_path(RefSeq& seq, const BsElement& v, int p) {
  push_descent(seq, v.m);
  push_horizontal_vertices(seq, v.m, 2 * v.j, p);
  for (i64 sigma = 1; sigma <= v.s; ++sigma) {
    seq.push(BsEdge{normalize(v.m, v.j, sigma - 1, p), 1}, 2);
    seq.push(normalize(v.m, v.j, sigma, p), 2);
  }
}

}  // namespace

std::vector<BsTracePoint> bs_trace(const BsEdge& e, int p) {
  RefSeq seq;
  const BsElement u = e.from;

  if (e.gen == 1 && u.s == 0 && u.m >= 1 && u.j % p == 0) {
    // The edge projects onto the descending ray: descend partway into
    // the ray column, then cross the row of rectangles sideways.
    push_descent(seq, u.m - 1);
    seq.push(BsEdge{BsElement{u.m, 0, 0}, 1}, 0);
    if (u.j != 0) {
      const i64 cols = u.j / p;
      const i64 sign = cols > 0 ? 1 : -1;
      for (i64 c = sign;; c += sign) {
        seq.push(BsCell{normalize(u.m, p * std::min(c, c - sign), 0, p)}, 1);
        seq.push(BsEdge{normalize(u.m, p * c, 0, p), 1}, 1);
        if (c == cols) break;
      }
    }
  } else if (e.gen == 1) {
    push_vertex_path(seq, u, p);
    seq.push(e, 2);
  } else {
    // a-edge: target the midpoint, doubled to stay integral.
    push_descent(seq, u.m);
    const i64 x2 = 2 * u.j + ipow(p, u.s);
    push_horizontal_vertices(seq, u.m, x2, p);
    if (u.s == 0) {
      seq.push(e, 1);  // x2 is odd; the midpoint sits inside e itself
    } else {
      if (x2 % 2 != 0) {
        // horizontal ends inside an a-edge of the bottom line
        seq.push(BsEdge{normalize(u.m, fdiv(x2, 2), 0, p), 0}, 1);
      }
      for (i64 sigma = 0; sigma < u.s; ++sigma) {
        const i64 step = ipow(p, sigma + 1);
        const bool aligned = x2 % 2 == 0 && (x2 / 2 - u.j) % step == 0;
        const i64 base = u.j + step * fdiv(x2 - 2 * u.j, 2 * step);
        if (aligned) {
          seq.push(BsEdge{normalize(u.m, x2 / 2, sigma, p), 1}, 2);
        } else {
          seq.push(BsCell{normalize(u.m, base, sigma, p)}, 2);
        }
        if (sigma + 1 == u.s) {
          if (base != u.j)
            throw std::logic_error("bs_trace: ascent does not return to the base edge");
          seq.push(e, 2);
        } else if (aligned) {
          seq.push(normalize(u.m, x2 / 2, sigma + 1, p), 2);
        } else {
          seq.push(BsEdge{normalize(u.m, base, sigma + 1, p), 0}, 2);
        }
      }
    }
  }

  std::vector<BsTracePoint> out;
  out.reserve(seq.refs.size());
  for (auto& [ref, seg] : seq.refs) {
    BsTracePoint tp;
    tp.lev = bs_level(ref, p);
    tp.assoc = associated_vertex(ref, p);
    tp.assoc_lev = Rat(bs_length(tp.assoc, p));
    tp.segment = seg;
    tp.ref = std::move(ref);
    out.push_back(std::move(tp));
  }
  return out;
}

Rat bs_default_slope(int p) { return Rat(4 * (p / 2 + 2)); }
Rat bs_default_intercept(int p) {
  const i64 h = p / 2;
  return Rat((h + 4) * (4 * (h + 2) + 1));
}

BsTameCheck check_tame_bs(const BsEdge& e, const Rat& slope, const Rat& intercept,
                          int p) {
  const std::vector<BsTracePoint> tr = bs_trace(e, p);
  const i64 h = p / 2;
  BsTameCheck res;
  res.trace_len = tr.size();
  res.max_level = Rat(0);
  for (const BsTracePoint& tp : tr) {
    if (res.max_level < tp.lev) res.max_level = tp.lev;
    if (std::holds_alternative<BsCell>(tp.ref)) ++res.cells_used;
  }
  res.good = res.cells_used == 0;

  // Associated vertices stay within h + 3 of their carrier's level.
  const Rat slack(h + 3);
  for (const BsTracePoint& tp : tr) {
    const Rat diff = tp.assoc_lev < tp.lev ? tp.lev - tp.assoc_lev : tp.assoc_lev - tp.lev;
    if (!(diff < slack)) res.slack_ok = false;
  }

  // Radial condition on the q-grid of denominator 4c: only the largest
  // earlier level matters for each later position.
  const std::int64_t grid = 4 * (4 * (p + 3) + 1);
  const Rat q_cap = res.max_level + Rat(1);
  Rat prefix_max = tr.empty() ? Rat(0) : tr.front().lev;
  for (std::size_t t = 1; t < tr.size(); ++t) {
    const Rat q = tr[t].lev.ceil_to_grid(grid);
    if (q <= q_cap && prefix_max > slope * q + intercept) res.level_condition = false;
    if (prefix_max < tr[t].lev) prefix_max = tr[t].lev;
  }

  // Down the ray the level never decreases.
  for (std::size_t i = 1; i < tr.size(); ++i) {
    if (tr[i].segment != 0) break;
    if (tr[i].lev < tr[i - 1].lev) res.down_monotone = false;
  }

  // Horizontal digit chain: |real coordinate| grows outward along the
  // walk, and the two digit-bound implications hold on every associated
  // vertex there (they transport a large early level to a large late
  // level, which is what the linear constants rest on).
  std::vector<const BsTracePoint*> horiz;
  for (const BsTracePoint& tp : tr)
    if (tp.segment == 1) horiz.push_back(&tp);
  auto abs_coord_le = [&](const BsElement& x, const BsElement& y) {
    const RealCoord rx = real_coord(x, p), ry = real_coord(y, p);
    const __int128 lx = __int128(rx.num < 0 ? -rx.num : rx.num) * ipow(p, ry.exp);
    const __int128 ly = __int128(ry.num < 0 ? -ry.num : ry.num) * ipow(p, rx.exp);
    return lx <= ly;
  };
  for (std::size_t a = 1; a < horiz.size(); ++a)
    if (!abs_coord_le(horiz[a - 1]->assoc, horiz[a]->assoc))
      res.horizontal_chain = false;
  // Digit-bound implications for every n at once.  With nd = the largest
  // n with |j| > p^(2n), the two implications over all valid n collapse
  // to two threshold comparisons.
  const i64 big_b = 4 * (h + 2);
  for (const BsTracePoint* tp : horiz) {
    const BsElement& v = tp->assoc;
    const i64 len = bs_length(v, p);
    i64 nd = -1;  // largest n >= 0 with |j| > p^(2n)
    {
      const i64 aj = v.j < 0 ? -v.j : v.j;
      __int128 pw = 1;
      i64 n = 0;
      while (__int128(aj) > pw) {
        nd = n++;
        pw *= p;
        pw *= p;
      }
    }
    const i64 hyp = std::max(v.m, v.s);
    // |j| > p^(2n) with n > hyp forces length > n.
    if (nd > hyp && len <= nd) res.horizontal_chain = false;
    // length > B n with n > hyp forces |j| > p^(2n).
    const i64 n_len = (len - 1) / big_b;  // largest n with len > B n
    if (n_len > hyp && n_len > nd) res.horizontal_chain = false;
  }

  // Every carrier on the ascent keeps the nadir of the traced point.
  const std::string nadir = nadir_key(e.from, p);
  for (const BsTracePoint& tp : tr) {
    if (tp.segment != 2) continue;
    if (nadir_key(tp.assoc, p) != nadir) res.nadir_shared = false;
  }

  res.pass = res.level_condition && res.slack_ok && res.down_monotone &&
             res.horizontal_chain && res.nadir_shared;
  return res;
}

}  // namespace tamecomb::bs
