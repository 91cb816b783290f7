#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamecomb/edges.hpp"

namespace tamecomb::thompson {

/// Single step toward the minimal right vine: rotates at right-spine
/// caret 1 or 2 depending on the parity of s_r and on whether the hung
/// subtree there is empty.  Pre: d is not a right vine.
Tree right_step(const Tree& d);

/// true iff d1 = right_step^m(d2) for some m >= 1 (equal caret counts
/// required).
bool less_r(const Tree& d1, const Tree& d2);

/// Mirror-dual step toward the left vine.  Pre: a is not a left vine.
Tree left_step(const Tree& a);
bool less_l(const Tree& a1, const Tree& a2);

/// Spinal tree with k carets, none interior, whose root has infix
/// number j+1.  Pre: 1 <= j <= k-1 for k >= 2 (make_B(k-1, k) = L_k).
Tree make_B(int j, int k);

/// The j-indexed left orders: plain less_l for j in {1, k-1, k} or
/// k <= 2; otherwise membership of a1 in the unique undirected path
/// from a2 to B_j(k) in the left-step tree.
bool less_l_j(int j, const Tree& a1, const Tree& a2);

/// Generating comparisons of the partial order on bad edges.  Both
/// edges must be bad; the checked variant verifies this definitionally
/// and throws std::domain_error otherwise.
bool edge_less(const EdgeId& z, const EdgeId& w);
bool edge_less_checked(const EdgeId& z, const EdgeId& w, EtaCache& cache);

enum class CellKind { Rr1, Rr1Inv, Rl1, Rl1Inv, Rr2, Rr2Inv, Rl2, Rl2Inv };
const char* to_string(CellKind k);
std::optional<CellKind> cell_kind_from_string(const std::string& name);

/// A 2-cell named by the base vertex of its top e_1 edge.
struct CellId {
  CellKind kind = CellKind::Rr1;
  TreePair base;
  std::string key() const { return std::string(to_string(kind)) + "(" + base.key() + ")"; }
};

/// Boundary data of a named cell: the loop read from the base vertex
/// (last letter crosses the top e_1 edge into the base), the vertices
/// along it, the three marked vertices, and the four e_1 boundary edges.
struct CellGeometry {
  GenWord boundary_word;
  std::vector<TreePair> vertices;  // vertices[i] = base * prefix_i; size = |word|
  TreePair z_l, z_r, z_b;
  EdgeId top_edge, left_edge, right_edge, bottom_edge;
};

CellGeometry cell_geometry(const CellId& c);

/// Which of the eight cells the collapse assigns to a bad edge.  Throws
/// std::domain_error when no case matches (surfaced, never guessed).
CellId cell_map(const EdgeId& e);

/// Geometric identity of the cell: (relator index, base vertex of the
/// unique forward reading of that relator around the boundary).
std::string canonical_cell_key(const CellId& c);

struct BoundaryReport {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> checks;  // (description, passed)
  std::vector<std::string> failures;
  CellId cell;
  void record(const std::string& what, bool passed) {
    checks.push_back({what, passed});
    if (!passed) {
      ok = false;
      failures.push_back(what);
    }
  }
  void fail(const std::string& what) { record(what, false); }
  /// One `pass`/`fail` line per check.
  std::string lines() const {
    std::string out;
    for (const auto& [what, passed] : checks)
      out += std::string(passed ? "pass" : "fail") + " " + what + "\n";
    return out;
  }
};

/// For a bad edge: the chosen cell's boundary closes up, every boundary
/// vertex has N(z) <= N(w), the negative tree of the bottom vertex is a
/// single rotation of the negative tree of w (before reduction), and
/// each other e_1 boundary edge is good or precedes e_1(w).
BoundaryReport verify_boundary(const EdgeId& e, EtaCache& cache);

}  // namespace tamecomb::thompson
