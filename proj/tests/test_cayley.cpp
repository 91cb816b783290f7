#include <doctest.h>

#include <sstream>

#include "tamecomb/bs.hpp"
#include "tamecomb/cayley.hpp"

using namespace tamecomb;
using namespace tamecomb::cayley;

TEST_CASE("F ball sizes") {
  FGroup fg;
  const auto b1 = ball(fg, 1);
  CHECK(b1.size() == 5);
  const auto b2 = ball(fg, 2);
  CHECK(b2.size() == 17);  // shortest relator has length 10: free up to radius 2
  const auto sizes = b2.sphere_sizes();
  CHECK(sizes[0] == 1);
  CHECK(sizes[1] == 4);
  CHECK(sizes[2] == 12);
}

TEST_CASE("BS ball sizes") {
  bs::BsGroup g3{3};
  CHECK(ball(g3, 1).size() == 5);
}

TEST_CASE("distance lookups") {
  FGroup fg;
  const auto b = ball(fg, 5);
  CHECK(b.distance(fg.identity(), fg) == 0);
  CHECK(b.distance(thompson::eval_word(parse_f_word("x0")), fg) == 1);
  // x0^-2 x1 x0^2 = x3 has no shorter spelling
  CHECK(b.distance(thompson::eval_word(parse_f_word("x0^-2 x1 x0^2")), fg) == 5);
  CHECK_THROWS_AS(
      b.distance(thompson::eval_word(parse_f_word("x0^6")), fg), OutOfBall);
}

TEST_CASE("ball containment and determinism") {
  FGroup fg;
  const auto a = ball(fg, 3);
  const auto b = ball(fg, 4);
  for (const auto& [k, e] : a.entries()) {
    CHECK(b.contains(k));
    CHECK(b.entries().at(k).distance == e.distance);
  }
  const auto a2 = ball(fg, 3);
  CHECK(export_dot(a, fg) == export_dot(a2, fg));
  std::ostringstream s1, s2;
  save_ball(a, s1);
  save_ball(a2, s2);
  CHECK(s1.str() == s2.str());

  std::istringstream in(s1.str());
  const auto loaded = load_ball_distances(in);
  CHECK(loaded.size() == a.size());
  for (const auto& [k, e] : a.entries()) CHECK(loaded.at(k) == e.distance);
}

TEST_CASE("geodesic reconstruction from parents") {
  FGroup fg;
  const auto b = ball(fg, 5);
  for (const auto& [k, e] : b.entries()) {
    const GenWord w = b.geodesic(k, fg);
    CHECK(static_cast<int>(w.size()) == e.distance);
    CHECK(thompson::eval_word(w) == e.element);
  }
}

TEST_CASE("budget produces a loud error") {
  FGroup fg;
  BallConfig cfg;
  cfg.max_elements = 10;
  CHECK_THROWS_AS(ball(fg, 3, cfg), BudgetExceeded);
  try {
    ball(fg, 3, cfg);
  } catch (const BudgetExceeded& ex) {
    CHECK(ex.completed_radius >= 1);
  }
}

TEST_CASE("free reduction and loop contraction") {
  const GenWord w = parse_f_word("x0 x0^-1 x1");
  CHECK(format_f_word(free_reduce(w)) == "x1");
  CHECK(free_reduce(GenWord{}).empty());

  auto is_identity = [](const GenWord& y) { return thompson::eval_word(y).is_identity(); };
  CHECK(is_graph_null_homotopic(GenWord{}, is_identity));
  CHECK(is_graph_null_homotopic(parse_f_word("x0 x0^-1"), is_identity));
  // a relator loop is trivial in the group but not in the graph
  const GenWord relator = parse_f_word("x0 x1^-1 x0^-1 x1 x0 x1 x0^-2 x1^-1 x0");
  CHECK(free_reduce(relator) == relator);
  CHECK_FALSE(is_graph_null_homotopic(relator, is_identity));
  CHECK_THROWS_AS(is_graph_null_homotopic(parse_f_word("x0"), is_identity),
                  std::domain_error);
}

TEST_CASE("dot export shape") {
  FGroup fg;
  const auto b0 = ball(fg, 0);
  const std::string d0 = export_dot(b0, fg);
  CHECK(d0.find("graph ball {") == 0);
  CHECK(d0.find("--") == std::string::npos);  // one node, no edges

  const auto b1 = ball(fg, 1);
  const std::string d1 = export_dot(b1, fg);
  int edges = 0;
  for (std::size_t pos = d1.find("--"); pos != std::string::npos; pos = d1.find("--", pos + 1))
    ++edges;
  CHECK(edges == 4);  // x0 and x1 arrows from the identity and into it

  bs::BsGroup g3{3};
  const auto bb = ball(g3, 2);
  const std::string dd = export_dot(bb, g3);
  CHECK(dd.find("\"0,0,0\"") != std::string::npos);
  // node count and edge count agree with the census itself
  std::size_t nodes = 0, bs_edges = 0;
  for (std::size_t pos = dd.find("[dist="); pos != std::string::npos;
       pos = dd.find("[dist=", pos + 1))
    ++nodes;
  for (std::size_t pos = dd.find("--"); pos != std::string::npos; pos = dd.find("--", pos + 1))
    ++bs_edges;
  CHECK(nodes == bb.size());
  std::size_t expected_edges = 0;
  for (const auto& [k, e] : bb.entries())
    for (int dir = 0; dir < 2; ++dir)
      if (bb.contains(g3.key(g3.apply(e.element, dir)))) ++expected_edges;
  CHECK(bs_edges == expected_edges);
}

TEST_CASE("spheres are nonempty and nested") {
  FGroup fg;
  const auto b = ball(fg, 6);
  for (std::size_t s : b.sphere_sizes()) CHECK(s > 0);
}
