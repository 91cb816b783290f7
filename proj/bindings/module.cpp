// Python bindings for the main operations: F-side evaluation, lengths,
// combing words, edge/cell classification and tameness scans, plus the
// BS(1,p) geodesic and combing machinery.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamecomb/bs.hpp"
#include "tamecomb/bs_combing.hpp"
#include "tamecomb/cayley.hpp"
#include "tamecomb/cells.hpp"
#include "tamecomb/combing.hpp"
#include "tamecomb/edges.hpp"
#include "tamecomb/length.hpp"
#include "tamecomb/normal_form.hpp"

namespace py = pybind11;
using namespace tamecomb;
using namespace tamecomb::thompson;

namespace {

TreePair eval_literal(const std::string& text) { return eval_word(parse_f_word(text)); }

std::string literal_of(const TreePair& w) {
  return format_f_word(normal_form_word(to_inf_normal_form(w)));
}

py::dict f_eval(const std::string& word) {
  const TreePair w = eval_literal(word);
  py::dict d;
  d["negative"] = w.negative().str();
  d["positive"] = w.positive().str();
  d["carets"] = w.carets();
  d["normal_form"] = format_normal_form(to_inf_normal_form(w));
  return d;
}

int f_len(const std::string& word) { return word_length(eval_literal(word)); }

std::string f_eta(const std::string& word) {
  EtaCache cache;
  return format_f_word(cache.get(eval_literal(word)));
}

std::string f_nf(const std::string& word) {
  return format_normal_form(to_inf_normal_form(eval_literal(word)));
}

py::dict f_classify(const std::string& word, int gen) {
  const EdgeId e{eval_literal(word), gen};
  EtaCache cache;
  py::dict d;
  d["edge"] = e.key();
  d["good"] = is_good(e, cache);
  const auto cert = goodness_certificate(e);
  d["certificate"] = cert ? py::cast(std::string(to_string(*cert))) : py::none();
  const auto bad = bad_case(e);
  d["bad_case"] = bad ? py::cast(std::string(to_string(*bad))) : py::none();
  return d;
}

py::dict f_cell(const std::string& word) {
  const EdgeId e{eval_literal(word), 1};
  EtaCache cache;
  if (is_good(e, cache)) throw py::value_error("edge is good; no cell is assigned");
  const CellId c = cell_map(e);
  const CellGeometry geo = cell_geometry(c);
  py::dict d;
  d["cell"] = std::string(to_string(c.kind));
  d["z_b"] = literal_of(geo.z_b);
  d["z_l"] = literal_of(geo.z_l);
  d["z_r"] = literal_of(geo.z_r);
  d["boundary"] = format_f_word(geo.boundary_word);
  d["verified"] = verify_boundary(e, cache).ok;
  return d;
}

std::vector<std::size_t> f_ball_sizes(int radius) {
  cayley::FGroup fg;
  return cayley::ball(fg, radius).sphere_sizes();
}

py::dict f_tame_scan(int radius, long long slope, long long intercept) {
  cayley::FGroup fg;
  const auto b = cayley::ball(fg, radius);
  CombingContext ctx;
  long edges = 0, bad = 0, failures = 0;
  for (const auto& [key, entry] : b.entries()) {
    for (int gen : {0, 1}) {
      ++edges;
      const TameCheck tc = check_tame(EdgeId{entry.element, gen}, Rat(slope),
                                      Rat(intercept), ctx);
      if (!tc.good) ++bad;
      if (!tc.pass) ++failures;
    }
  }
  py::dict d;
  d["edges"] = edges;
  d["bad_edges"] = bad;
  d["failures"] = failures;
  d["pass"] = failures == 0;
  return d;
}

py::dict bs_geodesic(int p, const std::string& word) {
  const bs::BsElement g = bs::bs_eval_word(parse_bs_word(word), p);
  const bs::GeodesicForm gf = bs::geodesic_word(g, p);
  py::dict d;
  d["element"] = g.word_str();
  d["geodesic"] = format_bs_word(gf.word(p));
  d["length"] = gf.length();
  d["form"] = gf.form;
  d["digits"] = gf.digits;
  return d;
}

std::vector<std::size_t> bs_ball_sizes(int p, int radius) {
  bs::BsGroup group{p};
  return cayley::ball(group, radius).sphere_sizes();
}

py::dict bs_tame_scan(int p, int radius) {
  bs::BsGroup group{p};
  const auto b = cayley::ball(group, radius);
  long edges = 0, failures = 0;
  const Rat slope = bs::bs_default_slope(p);
  const Rat intercept = bs::bs_default_intercept(p);
  for (const auto& [key, entry] : b.entries()) {
    for (int gen : {0, 1}) {
      ++edges;
      if (!bs::check_tame_bs(bs::BsEdge{entry.element, gen}, slope, intercept, p).pass)
        ++failures;
    }
  }
  py::dict d;
  d["edges"] = edges;
  d["failures"] = failures;
  d["pass"] = failures == 0;
  return d;
}

py::dict bs_coeff1(int p, int c_param) {
  const bs::CoeffWitness w = bs::coeff1_witness(p, c_param);
  py::dict d;
  d["loop"] = format_bs_word(w.loop);
  d["g"] = w.g.word_str();
  d["v"] = format_bs_word(w.v);
  d["len_v"] = w.len_v;
  d["bound"] = w.bound;
  d["loop_trivial"] = w.loop_trivial;
  d["v_represents_g"] = w.v_represents_g;
  d["exceeds_bound"] = w.exceeds_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tamecomb, m) {
  m.doc() = "tree-pair and Baumslag-Solitar combing toolkit";

  m.def("f_eval", &f_eval, py::arg("word"),
        "Reduced tree pair of an element literal.");
  m.def("f_len", &f_len, py::arg("word"), "Word length over x0, x1.");
  m.def("f_eta", &f_eta, py::arg("word"), "Nested traversal normal form.");
  m.def("f_nf", &f_nf, py::arg("word"), "Infinite-presentation normal form.");
  m.def("f_classify", &f_classify, py::arg("word"), py::arg("gen") = 1,
        "Good/bad classification of the edge e_gen(w).");
  m.def("f_cell", &f_cell, py::arg("word"),
        "Collapse cell and marked vertices of a bad edge e_1(w).");
  m.def("f_ball_sizes", &f_ball_sizes, py::arg("radius"),
        "Sphere sizes of the ball in Thompson's group F.");
  m.def("f_tame_scan", &f_tame_scan, py::arg("radius"), py::arg("slope") = 4,
        py::arg("intercept") = 45, "Radial tameness scan over a ball.");
  m.def("bs_geodesic", &bs_geodesic, py::arg("p"), py::arg("word"),
        "Geodesic form of a BS(1,p) word.");
  m.def("bs_ball_sizes", &bs_ball_sizes, py::arg("p"), py::arg("radius"));
  m.def("bs_tame_scan", &bs_tame_scan, py::arg("p"), py::arg("radius"));
  m.def("bs_coeff1", &bs_coeff1, py::arg("p"), py::arg("C"),
        "Witness computation for the linear-coefficient lower bound.");
}
