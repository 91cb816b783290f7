#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "tamecomb/cells.hpp"
#include "tamecomb/rational.hpp"

namespace tamecomb::thompson {

/// Denominator constant of cell-interior levels: 4 * 10 * 14 + 1.
inline constexpr std::int64_t kLevelCellConstant = 561;

/// A point class of the Cayley complex: a vertex, the interior of an
/// edge, or the interior of a 2-cell.  All interior points of one cell
/// share their level and caret statistics.
using PointRef = std::variant<TreePair, EdgeId, CellId>;

Rat level(const PointRef& p);
std::pair<int, int> nmax_nmin(const PointRef& p);
std::string point_key(const PointRef& p);

/// How a good edge's traversal words extend each other: either
/// eta(w x_a^-1) = eta(w) x_a^-1 or eta(w) = eta(w x_a^-1) x_a.
enum class GoodDirection { AppendInverse, DropLast };

struct CombingDiagram {
  EdgeId edge;
  bool good = false;
  GoodDirection direction = GoodDirection::AppendInverse;  // good edges
  CellId cell;                                             // bad edges
  // Sub-diagrams for the other three e_1 boundary edges of the cell.
  std::vector<std::shared_ptr<const CombingDiagram>> children;
  // The boundary's index-0 edges; always good, kept as leaves.
  std::vector<EdgeId> x0_leaves;
  int distinct_cells = 0;  // cells used by this diagram, children included
};

class CombingContext {
public:
  explicit CombingContext(int max_depth = 4096) : max_depth_(max_depth) {}
  EtaCache& etas() { return etas_; }

  std::shared_ptr<const CombingDiagram> comb_edge(const EdgeId& e);

private:
  std::shared_ptr<const CombingDiagram> comb_edge_rec(const EdgeId& e, int depth);
  EtaCache etas_;
  std::map<std::string, std::shared_ptr<const CombingDiagram>> memo_;
  int max_depth_;
};

/// The combing path of a vertex is spelled by eta(w).
GenWord comb_vertex(const TreePair& w, EtaCache& cache);

struct TracePoint {
  PointRef ref;
  Rat lev;
  int n_max = 0;
  int n_min = 0;
};

/// Discretized combing path of a representative interior point of e:
/// carrier cells from the identity vertex outward.  Bad edges route
/// through the bottom e_1 edge of their cell, then the cell interior.
std::vector<TracePoint> trace(const EdgeId& e, CombingContext& ctx);

struct TameCheck {
  bool pass = true;
  bool level_condition = true;   // the radial condition at the q-grid
  bool nmax_monotone = true;
  bool nlev_bounds = true;       // N_min - 2 <= lev < 4 N_max + 1 pointwise
  Rat max_level;
  int cells_used = 0;
  bool good = true;
};

/// Radial tameness on the trace of e: for all trace positions s < t and
/// every q on the grid of denominator 4 * 561 up to the maximal level,
/// level(s) > slope*q + intercept implies level(t) > q.  Also checks the
/// caret-count chain that the linear bound rests on.
TameCheck check_tame(const EdgeId& e, const Rat& slope, const Rat& intercept,
                     CombingContext& ctx);

}  // namespace tamecomb::thompson
