#include <doctest.h>

#include "tamecomb/cayley.hpp"
#include "tamecomb/combing.hpp"
#include "tamecomb/length.hpp"

using namespace tamecomb;
using namespace tamecomb::thompson;

namespace {
TreePair eval(const std::string& s) { return eval_word(parse_f_word(s)); }
}  // namespace

TEST_CASE("levels") {
  CHECK(level(PointRef(TreePair())) == Rat(0));
  CHECK(level(PointRef(eval("x0"))) == Rat(1));
  // edge between the identity and x0: (0 + 1)/2 + 1/4
  const EdgeId e{eval("x0"), 0};
  CHECK(level(PointRef(e)) == Rat(3, 4));
  // a ten-sided cell: mean of the boundary levels + 1/4 + 1/561
  const CellId c{CellKind::Rr1, eval("x5^-1 x3^-2")};
  const CellGeometry geo = cell_geometry(c);
  int sum = 0;
  for (const TreePair& v : geo.vertices) sum += word_length(v);
  CHECK(level(PointRef(c)) == Rat(sum, 10) + Rat(1, 4) + Rat(1, 561));
}

TEST_CASE("caret statistics of point classes") {
  const TreePair w = eval("x5^-1 x3^-2");
  CHECK(nmax_nmin(PointRef(w)) == std::pair<int, int>(7, 7));
  const EdgeId e{w, 1};
  const auto [mx, mn] = nmax_nmin(PointRef(e));
  CHECK(mx == 7);
  CHECK(mn == e.other_endpoint().carets());
  const auto [cmx, cmn] = nmax_nmin(PointRef(CellId{CellKind::Rr1Inv, w}));
  CHECK(cmx - cmn <= 9);
}

TEST_CASE("vertex combing words") {
  EtaCache cache;
  CHECK(comb_vertex(TreePair(), cache).empty());
  CHECK(comb_vertex(eval("x0"), cache) == parse_f_word("x0"));
  const TreePair w = eval("x1 x0^-1");
  CHECK(eval_word(comb_vertex(w, cache)) == w);
}

TEST_CASE("combing diagrams") {
  CombingContext ctx;
  // index-0 edges are always good
  for (const char* s : {"x0", "x1 x0^-1", "x5^-1 x3^-2"}) {
    auto d = ctx.comb_edge(EdgeId{eval(s), 0});
    CHECK(d->good);
  }
  auto d = ctx.comb_edge(EdgeId{eval("x5^-1 x3^-2"), 1});
  REQUIRE_FALSE(d->good);
  CHECK(d->cell.kind == CellKind::Rr1Inv);
  CHECK(d->children.size() == 3);
  CHECK(d->x0_leaves.size() == 6);  // a ten-sided cell has six index-0 edges
  CHECK(d->distinct_cells >= 1);
  CHECK(ctx.comb_edge(EdgeId{TreePair(), 1})->good);
}

TEST_CASE("traces walk outward through carriers") {
  CombingContext ctx;
  // good edge at the end of its own combing word
  const EdgeId e0{eval("x0"), 0};
  const auto tr0 = trace(e0, ctx);
  REQUIRE(tr0.size() == 2);
  CHECK(std::get<TreePair>(tr0.front().ref).is_identity());
  CHECK(point_key(tr0.back().ref) == "e:" + e0.key());

  // bad edge: the trace passes through its collapse cell just before
  // the edge itself
  const EdgeId e1{eval("x5^-1 x3^-2"), 1};
  const auto tr1 = trace(e1, ctx);
  REQUIRE(tr1.size() >= 3);
  CHECK(std::get<TreePair>(tr1.front().ref).is_identity());
  CHECK(point_key(tr1[tr1.size() - 2].ref) ==
        "c:" + ctx.comb_edge(e1)->cell.key());
  CHECK(point_key(tr1.back().ref) == "e:" + e1.key());

  // identity-adjacent edges have tiny traces
  CHECK(trace(EdgeId{eval("x0"), 0}, ctx).size() <= 3);
  CHECK(trace(EdgeId{eval("x1"), 1}, ctx).size() <= 3);
}

TEST_CASE("tameness on a small ball") {
  cayley::FGroup fg;
  const auto ball = cayley::ball(fg, 5);
  CombingContext ctx;
  bool saw_bad = false;
  for (const auto& [key, entry] : ball.entries()) {
    for (int gen : {0, 1}) {
      const EdgeId e{entry.element, gen};
      const TameCheck tc = check_tame(e, Rat(4), Rat(45), ctx);
      CHECK(tc.pass);
      CHECK(tc.nmax_monotone);
      CHECK(tc.nlev_bounds);
      saw_bad = saw_bad || !tc.good;
    }
  }
  CHECK(saw_bad);
}

TEST_CASE("a constant radial function fails") {
  CombingContext ctx;
  const EdgeId e{eval("x5^-1 x3^-2"), 1};
  const TameCheck tc = check_tame(e, Rat(0), Rat(0), ctx);
  CHECK_FALSE(tc.level_condition);
  // a one-point trace is vacuously tame
  const auto tr = trace(EdgeId{eval("x0"), 0}, ctx);
  CHECK(tr.size() >= 1);
}
