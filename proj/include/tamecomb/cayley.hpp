#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamecomb/genword.hpp"
#include "tamecomb/tree_pair.hpp"

namespace tamecomb::cayley {

/// Raised when a BFS would exceed its element budget; carries the last
/// radius that finished.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(int radius)
      : std::runtime_error("ball budget exceeded after radius " +
                           std::to_string(radius)),
        completed_radius(radius) {}
  int completed_radius;
};

struct OutOfBall : std::domain_error {
  using std::domain_error::domain_error;
};

struct BallConfig {
  std::size_t max_elements = 5'000'000;
};

/// Breadth-first ball of a group.  The adapter G provides:
///   using Element;
///   Element identity() const;
///   int generator_count() const;                 // positive generators
///   Element apply(const Element&, int dir) const;  // dir in [0, 2g)
///   std::string key(const Element&) const;
///   std::string direction_name(int dir) const;
/// Directions g..2g-1 are the inverses of 0..g-1.
template <class G>
class Ball {
public:
  struct Entry {
    typename G::Element element;
    int distance = 0;
    std::string parent;  // empty for the identity
    int parent_dir = -1;
  };

  int radius() const { return radius_; }
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

  bool contains(const std::string& key) const { return entries_.count(key) != 0; }

  int distance(const typename G::Element& w, const G& group) const {
    auto it = entries_.find(group.key(w));
    if (it == entries_.end()) throw OutOfBall("element outside the computed ball");
    return it->second.distance;
  }

  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> out(radius_ + 1, 0);
    for (const auto& [k, e] : entries_) ++out[e.distance];
    return out;
  }

  /// Geodesic word from the identity to the entry, via BFS parents.
  GenWord geodesic(const std::string& key, const G& group) const {
    GenWord out;
    std::string cur = key;
    while (true) {
      auto it = entries_.find(cur);
      if (it == entries_.end()) throw OutOfBall("element outside the computed ball");
      if (it->second.parent.empty()) break;
      const int dir = it->second.parent_dir;
      const int g = group.generator_count();
      out.push_back(Letter{dir % g, dir < g ? +1 : -1});
      cur = it->second.parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  template <class H>
  friend Ball<H> ball(const H& group, int radius, const BallConfig& config);

private:
  int radius_ = 0;
  std::map<std::string, Entry> entries_;
};

template <class G>
Ball<G> ball(const G& group, int radius, const BallConfig& config = {}) {
  Ball<G> b;
  b.radius_ = radius;
  const int dirs = 2 * group.generator_count();
  typename G::Element id = group.identity();
  b.entries_.emplace(group.key(id), typename Ball<G>::Entry{id, 0, "", -1});
  // Frontier keys come out of the ordered map, so expansion order is
  // deterministic.
  std::vector<std::string> frontier{group.key(id)};
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::string> next;
    for (const std::string& k : frontier) {
      const auto& entry = b.entries_.at(k);
      for (int d = 0; d < dirs; ++d) {
        typename G::Element img = group.apply(entry.element, d);
        std::string key = group.key(img);
        if (b.entries_.count(key)) continue;
        if (b.entries_.size() >= config.max_elements) throw BudgetExceeded(r - 1);
        b.entries_.emplace(key, typename Ball<G>::Entry{std::move(img), r, k, d});
        next.push_back(std::move(key));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return b;
}

/// Deterministic DOT rendering: vertices in key order, one edge record
/// per positive-generator action staying inside the ball.
template <class G>
std::string export_dot(const Ball<G>& b, const G& group, const std::string& name = "ball") {
  std::string out = "graph " + name + " {\n";
  for (const auto& [k, e] : b.entries())
    out += "  \"" + k + "\" [dist=" + std::to_string(e.distance) + "];\n";
  for (const auto& [k, e] : b.entries()) {
    for (int d = 0; d < group.generator_count(); ++d) {
      std::string target = group.key(group.apply(e.element, d));
      if (!b.contains(target)) continue;
      out += "  \"" + k + "\" -- \"" + target + "\" [label=\"" +
             group.direction_name(d) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

/// Line-oriented persistence: `key<TAB>distance`, sorted by key.
template <class G>
void save_ball(const Ball<G>& b, std::ostream& os) {
  for (const auto& [k, e] : b.entries()) os << k << '\t' << e.distance << '\n';
}

/// Reads the format save_ball writes.
std::map<std::string, int> load_ball_distances(std::istream& is);

/// Loop null-homotopy in the Cayley graph: the word must evaluate to the
/// identity (checked through `is_identity`), and the loop contracts in
/// the graph iff it freely reduces to the empty word.
inline bool is_graph_null_homotopic(const GenWord& y,
                                    const std::function<bool(const GenWord&)>& is_identity) {
  if (!is_identity(y)) throw std::domain_error("is_graph_null_homotopic: word is not a loop");
  return free_reduce(y).empty();
}

/// Adapter for Thompson's group F over {x0, x1}.
struct FGroup {
  using Element = thompson::TreePair;
  Element identity() const { return thompson::TreePair(); }
  int generator_count() const { return 2; }
  Element apply(const Element& e, int dir) const {
    const Letter l{dir % 2, dir < 2 ? +1 : -1};
    return thompson::apply_generator(e, l).first;
  }
  std::string key(const Element& e) const { return e.key(); }
  std::string direction_name(int dir) const {
    static const char* names[] = {"x0", "x1", "x0^-1", "x1^-1"};
    return names[dir];
  }
};

}  // namespace tamecomb::cayley
