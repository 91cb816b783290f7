#include "tamecomb/combing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tamecomb/length.hpp"

namespace tamecomb::thompson {

Rat level(const PointRef& p) {
  if (const auto* v = std::get_if<TreePair>(&p)) return Rat(word_length(*v));
  if (const auto* e = std::get_if<EdgeId>(&p)) {
    const int a = word_length(e->base);
    const int b = word_length(e->other_endpoint());
    return Rat(a + b, 2) + Rat(1, 4);
  }
  const CellId& c = std::get<CellId>(p);
  const CellGeometry geo = cell_geometry(c);
  int sum = 0;
  for (const TreePair& v : geo.vertices) sum += word_length(v);
  return Rat(sum, static_cast<std::int64_t>(geo.vertices.size())) + Rat(1, 4) +
         Rat(1, kLevelCellConstant);
}

std::pair<int, int> nmax_nmin(const PointRef& p) {
  if (const auto* v = std::get_if<TreePair>(&p)) return {v->carets(), v->carets()};
  if (const auto* e = std::get_if<EdgeId>(&p)) {
    const int a = e->base.carets();
    const int b = e->other_endpoint().carets();
    return {std::max(a, b), std::min(a, b)};
  }
  const CellGeometry geo = cell_geometry(std::get<CellId>(p));
  int mx = geo.vertices.front().carets(), mn = mx;
  for (const TreePair& v : geo.vertices) {
    mx = std::max(mx, v.carets());
    mn = std::min(mn, v.carets());
  }
  return {mx, mn};
}

std::string point_key(const PointRef& p) {
  if (const auto* v = std::get_if<TreePair>(&p)) return "v:" + v->key();
  if (const auto* e = std::get_if<EdgeId>(&p)) return "e:" + e->key();
  return "c:" + std::get<CellId>(p).key();
}

GenWord comb_vertex(const TreePair& w, EtaCache& cache) { return cache.get(w); }

namespace {
void collect_cells(const CombingDiagram& d, std::set<std::string>& out) {
  if (d.good) return;
  if (!out.insert(d.cell.key()).second) return;  // subtree already merged
  for (const auto& child : d.children) collect_cells(*child, out);
}
}  // namespace

std::shared_ptr<const CombingDiagram> CombingContext::comb_edge(const EdgeId& e) {
  return comb_edge_rec(e, 0);
}

std::shared_ptr<const CombingDiagram> CombingContext::comb_edge_rec(const EdgeId& e,
                                                                    int depth) {
  if (depth > max_depth_)
    throw std::runtime_error("comb_edge: recursion exceeded the configured depth; "
                             "the edge order would have to contain a cycle");
  auto it = memo_.find(e.key());
  if (it != memo_.end()) return it->second;

  auto diagram = std::make_shared<CombingDiagram>();
  diagram->edge = e;
  const GenWord& head = etas_.get(e.base);
  GenWord loop = head;
  loop.push_back(Letter{e.gen, -1});
  const GenWord reduced = free_reduce(loop);
  const GenWord& tail = etas_.get(e.other_endpoint());
  if (reduced == tail) {
    diagram->good = true;
    // Either the far endpoint's word extends the base's by x_a^-1, or
    // the base's word ends in x_a and drops it.
    diagram->direction = reduced.size() > head.size() ? GoodDirection::AppendInverse
                                                      : GoodDirection::DropLast;
  } else {
    diagram->good = false;
    diagram->cell = cell_map(e);
    const CellGeometry geo = cell_geometry(diagram->cell);
    for (const EdgeId* side : {&geo.left_edge, &geo.right_edge, &geo.bottom_edge})
      diagram->children.push_back(comb_edge_rec(*side, depth + 1));
    for (std::size_t i = 0; i < geo.boundary_word.size(); ++i) {
      const Letter& l = geo.boundary_word[i];
      if (l.index != 0) continue;
      diagram->x0_leaves.push_back(l.sign < 0 ? EdgeId{geo.vertices[i], 0}
                                              : EdgeId{geo.vertices[(i + 1) %
                                                geo.boundary_word.size()], 0});
    }
    std::set<std::string> cells;
    collect_cells(*diagram, cells);
    diagram->distinct_cells = static_cast<int>(cells.size());
  }
  memo_.emplace(e.key(), diagram);
  return diagram;
}

namespace {

void spell_vertex_path(const TreePair& target, const GenWord& word,
                       std::vector<PointRef>& out) {
  TreePair cur;
  out.push_back(cur);
  for (const Letter& l : word) {
    TreePair next = apply_generator(cur, l).first;
    out.push_back(l.sign < 0 ? PointRef(EdgeId{cur, l.index})
                             : PointRef(EdgeId{next, l.index}));
    out.push_back(next);
    cur = next;
  }
  if (!(cur == target)) throw std::logic_error("spell_vertex_path: word does not reach target");
}

void trace_refs(const EdgeId& e, CombingContext& ctx, std::vector<PointRef>& out) {
  auto diagram = ctx.comb_edge(e);
  if (diagram->good) {
    // Comb along the eta-path of whichever endpoint the edge extends.
    const TreePair anchor = diagram->direction == GoodDirection::AppendInverse
                                ? e.base
                                : e.other_endpoint();
    spell_vertex_path(anchor, ctx.etas().get(anchor), out);
    out.push_back(e);
    return;
  }
  const CellGeometry geo = cell_geometry(diagram->cell);
  trace_refs(geo.bottom_edge, ctx, out);
  out.push_back(diagram->cell);
  out.push_back(e);
}

}  // namespace

std::vector<TracePoint> trace(const EdgeId& e, CombingContext& ctx) {
  std::vector<PointRef> refs;
  trace_refs(e, ctx, refs);
  std::vector<TracePoint> out;
  out.reserve(refs.size());
  for (PointRef& r : refs) {
    TracePoint tp;
    tp.lev = level(r);
    const auto [mx, mn] = nmax_nmin(r);
    tp.n_max = mx;
    tp.n_min = mn;
    tp.ref = std::move(r);
    out.push_back(std::move(tp));
  }
  return out;
}

namespace {

void run_trace_checks(const std::vector<TracePoint>& tr, const Rat& slope,
                      const Rat& intercept, TameCheck& res) {
  Rat trace_max(0);
  for (const TracePoint& tp : tr)
    if (trace_max < tp.lev) trace_max = tp.lev;
  if (res.max_level < trace_max) res.max_level = trace_max;

  for (const TracePoint& tp : tr) {
    if (!(Rat(tp.n_min - 2) <= tp.lev && tp.lev < Rat(4 * tp.n_max + 1)))
      res.nlev_bounds = false;
  }
  for (std::size_t i = 1; i < tr.size(); ++i)
    if (tr[i].n_max < tr[i - 1].n_max) res.nmax_monotone = false;

  // level(s) > slope*q + intercept and level(t) <= q for grid q up to the
  // maximal level would violate the radial condition.  The earliest
  // grid point at or above level(t) is the critical q.
  const std::int64_t grid = 4 * kLevelCellConstant;
  const Rat q_cap = trace_max + Rat(1);
  Rat prefix_max = tr.empty() ? Rat(0) : tr.front().lev;
  for (std::size_t t = 1; t < tr.size(); ++t) {
    const Rat q = tr[t].lev.ceil_to_grid(grid);
    if (q <= q_cap && prefix_max > slope * q + intercept) res.level_condition = false;
    if (prefix_max < tr[t].lev) prefix_max = tr[t].lev;
  }
}

std::vector<TracePoint> vertex_trace(const TreePair& v, CombingContext& ctx) {
  std::vector<PointRef> refs;
  spell_vertex_path(v, ctx.etas().get(v), refs);
  std::vector<TracePoint> out;
  out.reserve(refs.size());
  for (PointRef& r : refs) {
    TracePoint tp;
    tp.lev = level(r);
    const auto [mx, mn] = nmax_nmin(r);
    tp.n_max = mx;
    tp.n_min = mn;
    tp.ref = std::move(r);
    out.push_back(std::move(tp));
  }
  return out;
}

}  // namespace

TameCheck check_tame(const EdgeId& e, const Rat& slope, const Rat& intercept,
                     CombingContext& ctx) {
  auto diagram = ctx.comb_edge(e);
  TameCheck res;
  res.good = diagram->good;
  res.cells_used = diagram->distinct_cells;
  res.max_level = Rat(0);
  // One trace for the interior class and one per endpoint.
  run_trace_checks(trace(e, ctx), slope, intercept, res);
  run_trace_checks(vertex_trace(e.base, ctx), slope, intercept, res);
  run_trace_checks(vertex_trace(e.other_endpoint(), ctx), slope, intercept, res);
  res.pass = res.level_condition && res.nmax_monotone && res.nlev_bounds;
  return res;
}

}  // namespace tamecomb::thompson
