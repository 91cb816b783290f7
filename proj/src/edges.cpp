#include "tamecomb/edges.hpp"

#include <stdexcept>

namespace tamecomb::thompson {

namespace {

// s = smallest index with every later spine caret's hung subtree empty;
// C = carets up to and including spine caret s.
struct SpineProfile {
  int s = 0;
  int c = 0;
};

SpineProfile right_profile(const Tree& t) {
  const std::vector<Tree> subs = right_spine_left_subtrees(t);
  SpineProfile p;
  for (int i = static_cast<int>(subs.size()); i >= 1; --i) {
    if (!subs[i - 1].is_leaf()) { p.s = i; break; }
  }
  // carets numbered up to spine caret s: all of T minus the spine tail
  // and the (empty) subtrees past s.
  int after = 0;
  for (int i = p.s; i < static_cast<int>(subs.size()); ++i) after += 1 + subs[i].carets();
  if (p.s > 0) p.c = t.carets() - after;
  return p;
}

SpineProfile left_profile(const Tree& t) { return right_profile(mirror(t)); }

}  // namespace

EdgeStats edge_stats(const TreePair& w) {
  EdgeStats st;
  st.n_carets = w.carets();
  const Tree& tn = w.negative();
  st.right_carets = static_cast<int>(right_spine_left_subtrees(tn).size());
  st.j = first_exposed_caret_infix(w.positive());

  // n(w): infix number of the deepest right-spine caret with a nonempty
  // left subtree; 0 when the negative tree is a right vine.
  {
    const SpineProfile p = right_profile(tn);
    st.n_caret = p.s == 0 ? 0 : p.c;
  }

  if (st.right_carets < 3) return st;
  st.has_subtrees = true;
  st.a = tn.left();
  st.b = tn.right().left();
  st.c = tn.right().right().left();
  st.d = tn.right().right().right();
  st.n_a = st.a.carets();
  st.n_d = st.d.carets();
  const SpineProfile rp = right_profile(st.d);
  st.s_r = rp.s;
  st.c_r = rp.c;
  const SpineProfile lp = left_profile(st.a);
  st.s_l = lp.s;
  st.c_l = lp.c;

  // A caret cancels in w x1^-1 iff B and C are empty and the positive
  // tree has an exposed caret at number N_A + 2.
  if (st.b.is_leaf() && st.c.is_leaf()) {
    const auto table = caret_table(w.positive());
    const int target = st.n_a + 2;
    if (target >= 1 && target <= static_cast<int>(table.size()))
      st.ddagger = table[target - 1].exposed;
  }
  return st;
}

const GenWord& EtaCache::get(const TreePair& w) {
  auto [it, inserted] = cache_.try_emplace(w.key());
  if (inserted) it->second = eta(w);
  return it->second;
}

bool is_good(const EdgeId& e, EtaCache& cache) {
  const GenWord& head = cache.get(e.base);
  const GenWord& tail = cache.get(e.other_endpoint());
  GenWord loop = head;
  loop.push_back(Letter{e.gen, -1});
  return free_reduce(loop) == tail;
}

bool is_good(const EdgeId& e) {
  EtaCache cache;
  return is_good(e, cache);
}

std::optional<GoodCondition> goodness_certificate(const EdgeId& e) {
  if (e.gen == 0) return GoodCondition::T1;
  const EdgeStats st = edge_stats(e.base);
  if (st.right_carets <= 2) return GoodCondition::T2;
  if (!st.ddagger && st.s_r == 0) return GoodCondition::T3;
  if (st.ddagger && !has_interior_caret(e.base.negative()) && st.j &&
      *st.j == st.n_a + 2)
    return GoodCondition::T4;
  return std::nullopt;
}

std::optional<BadCase> bad_case(const EdgeId& e) {
  if (e.gen != 1) return std::nullopt;
  const EdgeStats st = edge_stats(e.base);
  if (!st.has_subtrees) return std::nullopt;
  if (st.s_r > 0) return BadCase::C1;
  if (!st.ddagger) return std::nullopt;
  if (st.s_l == 0) {  // A is a left vine
    if (st.j && 2 <= *st.j && *st.j <= st.n_a) return BadCase::C2;
    return std::nullopt;
  }
  return BadCase::C3;
}

const char* to_string(GoodCondition c) {
  switch (c) {
    case GoodCondition::T1: return "T1";
    case GoodCondition::T2: return "T2";
    case GoodCondition::T3: return "T3";
    case GoodCondition::T4: return "T4";
  }
  return "?";
}

const char* to_string(BadCase c) {
  switch (c) {
    case BadCase::C1: return "C1";
    case BadCase::C2: return "C2";
    case BadCase::C3: return "C3";
  }
  return "?";
}

}  // namespace tamecomb::thompson
