#pragma once

// Rulings of a front by a left-to-right sweep, plus an independent
// exhaustive checker working directly from the definition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "frontkit/front.hpp"
#include "frontkit/poly.hpp"

namespace frontkit {

/// A set of switches, as sorted crossing ordinals (0-based, in word order).
struct Ruling {
  std::vector<int> switches;

  int size() const { return static_cast<int>(switches.size()); }
  friend auto operator<=>(const Ruling&, const Ruling&) = default;
};

/// Eye structure of the current sweep slice: partner[p] is the position
/// paired with p (0-based, top to bottom).
struct SweepState {
  std::vector<int> partner;
  int switches = 0;
  std::vector<Direction> dirs;  // only maintained in oriented mode

  int strands() const { return static_cast<int>(partner.size()); }
  friend bool operator==(const SweepState&, const SweepState&) = default;
};

namespace detail {

inline bool interleaved(int a1, int b1, int a2, int b2) {
  int x1 = std::min(a1, b1), y1 = std::max(a1, b1);
  int x2 = std::min(a2, b2), y2 = std::max(a2, b2);
  return (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1);
}

}  // namespace detail

/// One letter of the sweep. `switch_here` is only consulted at crossings;
/// `new_upper` gives the direction of the upper strand of a new left cusp
/// in oriented mode. Returns nullopt when the branch dies.
inline std::optional<SweepState> sweep_step(const SweepState& state, const TangleLetter& letter, bool switch_here,
                                            bool oriented, Direction new_upper = Direction::Right) {
  SweepState next = state;
  auto& pr = next.partner;
  const int i = letter.index - 1;
  switch (letter.kind) {
    case LetterKind::LeftCusp: {
      for (int& q : pr)
        if (q >= i) q += 2;
      pr.insert(pr.begin() + i, {i + 1, i});
      if (oriented) next.dirs.insert(next.dirs.begin() + i, {new_upper, reversed(new_upper)});
      return next;
    }
    case LetterKind::RightCusp: {
      if (pr[static_cast<std::size_t>(i)] != i + 1) return std::nullopt;
      pr.erase(pr.begin() + i, pr.begin() + i + 2);
      for (int& q : pr)
        if (q > i + 1) q -= 2;
      if (oriented) next.dirs.erase(next.dirs.begin() + i, next.dirs.begin() + i + 2);
      return next;
    }
    case LetterKind::Crossing: {
      const int j = i + 1;
      const int a = pr[static_cast<std::size_t>(i)], b = pr[static_cast<std::size_t>(j)];
      if (a == j) return std::nullopt;  // both strands belong to one eye
      if (switch_here) {
        if (detail::interleaved(i, a, j, b)) return std::nullopt;
        if (oriented && next.dirs[static_cast<std::size_t>(i)] != next.dirs[static_cast<std::size_t>(j)])
          return std::nullopt;
        ++next.switches;
        return next;
      }
      pr[static_cast<std::size_t>(i)] = b;
      pr[static_cast<std::size_t>(j)] = a;
      pr[static_cast<std::size_t>(a)] = j;
      pr[static_cast<std::size_t>(b)] = i;
      if (oriented) std::swap(next.dirs[static_cast<std::size_t>(i)], next.dirs[static_cast<std::size_t>(j)]);
      return next;
    }
  }
  return std::nullopt;
}

namespace detail {

inline void enumerate_from(const FrontWord& w, const OrientedFront* of, std::size_t k, const SweepState& state,
                           std::vector<int>& chosen, int& ordinal, std::vector<Ruling>& out) {
  if (k == w.size()) {
    out.push_back(Ruling{chosen});
    return;
  }
  const auto& t = w[k];
  const bool oriented = of != nullptr;
  Direction up = oriented && t.kind == LetterKind::LeftCusp ? of->dir(k + 1, t.index) : Direction::Right;
  if (t.kind != LetterKind::Crossing) {
    if (auto next = sweep_step(state, t, false, oriented, up))
      enumerate_from(w, of, k + 1, *next, chosen, ordinal, out);
    return;
  }
  const int here = ordinal++;
  if (auto next = sweep_step(state, t, false, oriented)) enumerate_from(w, of, k + 1, *next, chosen, ordinal, out);
  if (auto next = sweep_step(state, t, true, oriented)) {
    chosen.push_back(here);
    enumerate_from(w, of, k + 1, *next, chosen, ordinal, out);
    chosen.pop_back();
  }
  --ordinal;
}

}  // namespace detail

/// All rulings by depth-first search, the non-switch branch explored first.
inline std::vector<Ruling> enumerate_rulings(const FrontWord& w) {
  std::vector<Ruling> out;
  std::vector<int> chosen;
  int ordinal = 0;
  detail::enumerate_from(w, nullptr, 0, SweepState{}, chosen, ordinal, out);
  return out;
}

/// Rulings whose switches are all positive crossings of the oriented front.
inline std::vector<Ruling> enumerate_oriented_rulings(const OrientedFront& of) {
  std::vector<Ruling> out;
  std::vector<int> chosen;
  int ordinal = 0;
  detail::enumerate_from(of.word, &of, 0, SweepState{}, chosen, ordinal, out);
  return out;
}

/// Checks the ruling conditions directly: resolve the switches, trace the
/// components of the resolved front, and test every switch.
inline bool is_ruling(const FrontWord& w, const Ruling& candidate, const OrientedFront* orientation = nullptr) {
  const auto crossing_at = w.crossing_positions();
  std::set<std::size_t> switched;
  for (int c : candidate.switches) {
    if (c < 0 || static_cast<std::size_t>(c) >= crossing_at.size()) return false;
    switched.insert(crossing_at[static_cast<std::size_t>(c)]);
  }

  // Union-find over segments of the resolved front.
  std::vector<std::size_t> base(w.size() + 2, 0);
  for (std::size_t s = 0; s <= w.size(); ++s) base[s + 1] = base[s] + static_cast<std::size_t>(w.strands(s));
  auto seg = [&](std::size_t s, int p) { return base[s] + static_cast<std::size_t>(p - 1); };
  detail::UnionFind uf(base.back());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    const int m = t.index;
    const bool resolved = switched.count(k) > 0;
    for (int p = 1; p <= w.strands(k); ++p) {
      switch (t.kind) {
        case LetterKind::Crossing:
          uf.unite(seg(k, p), seg(k + 1, resolved || (p != m && p != m + 1) ? p : (p == m ? m + 1 : m)));
          break;
        case LetterKind::LeftCusp:
          uf.unite(seg(k, p), seg(k + 1, p < m ? p : p + 2));
          break;
        case LetterKind::RightCusp:
          if (p < m) uf.unite(seg(k, p), seg(k + 1, p));
          if (p > m + 1) uf.unite(seg(k, p), seg(k + 1, p - 2));
          break;
      }
    }
    if (t.kind == LetterKind::LeftCusp) uf.unite(seg(k + 1, m), seg(k + 1, m + 1));
    if (t.kind == LetterKind::RightCusp) uf.unite(seg(k, m), seg(k, m + 1));
  }

  // (i) each component has one left cusp, one right cusp and no self crossings.
  std::map<std::size_t, int> left, right, self;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    if (t.kind == LetterKind::LeftCusp) ++left[uf.find(seg(k + 1, t.index))];
    if (t.kind == LetterKind::RightCusp) ++right[uf.find(seg(k, t.index))];
    if (t.kind == LetterKind::Crossing && !switched.count(k)) {
      std::size_t a = uf.find(seg(k, t.index)), b = uf.find(seg(k, t.index + 1));
      if (a == b) ++self[a];
    }
  }
  for (std::size_t s = 0; s <= w.size(); ++s) {
    for (int p = 1; p <= w.strands(s); ++p) {
      std::size_t c = uf.find(seg(s, p));
      if (left[c] != 1 || right[c] != 1 || self[c] != 0) return false;
    }
  }

  for (std::size_t k : switched) {
    const int m = w[k].index;
    const std::size_t p_comp = uf.find(seg(k, m)), q_comp = uf.find(seg(k, m + 1));
    // (ii) the strands meeting at a switch belong to different components.
    if (p_comp == q_comp) return false;
    // Upper and lower strand positions of each component at this slice.
    auto span = [&](std::size_t comp) {
      int upper = 0, lower = 0;
      for (int p = 1; p <= w.strands(k); ++p) {
        if (uf.find(seg(k, p)) != comp) continue;
        if (upper == 0) upper = p;
        lower = p;
      }
      return std::pair{upper, lower};
    };
    auto [u1, l1] = span(p_comp);
    auto [u2, l2] = span(q_comp);
    const bool p_is_upper = u1 == m, q_is_upper = u2 == m + 1;
    bool normal = false;
    if (!p_is_upper && q_is_upper) normal = true;                  // (a)
    else if (p_is_upper && q_is_upper) normal = l1 > l2;          // (b): L_{j1} lower than L_{j2}
    else if (!p_is_upper && !q_is_upper) normal = u1 > u2;        // (c): U_{j1} lower than U_{j2}
    if (!normal) return false;
    if (orientation && orientation->dir(k, m) != orientation->dir(k, m + 1)) return false;
  }
  return true;
}

/// Exhaustive oracle: every subset of crossings accepted by is_ruling, in
/// increasing bitmask order.
inline std::vector<Ruling> brute_force_rulings(const FrontWord& w, const OrientedFront* orientation = nullptr) {
  const int n = w.crossings();
  if (n > 24) throw std::length_error("too many crossings for exhaustive enumeration");
  std::vector<Ruling> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Ruling r;
    for (int c = 0; c < n; ++c)
      if ((mask >> c) & 1u) r.switches.push_back(c);
    if (is_ruling(w, r, orientation)) out.push_back(std::move(r));
  }
  return out;
}

/// Sum of z^(s - c + 1) over a list of rulings.
inline LaurentPoly1 generating_polynomial(const std::vector<Ruling>& rulings, int left_cusps) {
  LaurentPoly1 p;
  for (const auto& r : rulings) p += zpow(r.size() - left_cusps + 1);
  return p;
}

struct SweepOptions {
  bool memoize = true;  // merge branches with identical eye structure
};

namespace detail {

inline LaurentPoly1 sweep_polynomial(const FrontWord& w, const OrientedFront* of, SweepOptions opts) {
  const bool oriented = of != nullptr;
  if (!opts.memoize) {
    auto rulings = oriented ? enumerate_oriented_rulings(*of) : enumerate_rulings(w);
    return generating_polynomial(rulings, w.left_cusps());
  }
  // Live states keyed by (pairing, directions), with switch-count tallies.
  using Key = std::pair<std::vector<int>, std::vector<Direction>>;
  std::map<Key, std::map<int, Integer>> live;
  live[{{}, {}}][0] = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    Direction up = oriented && t.kind == LetterKind::LeftCusp ? of->dir(k + 1, t.index) : Direction::Right;
    std::map<Key, std::map<int, Integer>> next;
    for (const auto& [key, tally] : live) {
      SweepState st{key.first, 0, key.second};
      for (bool sw : {false, true}) {
        if (sw && t.kind != LetterKind::Crossing) break;
        auto out = sweep_step(st, t, sw, oriented, up);
        if (!out) continue;
        auto& dest = next[{out->partner, out->dirs}];
        for (const auto& [s, count] : tally) dest[s + out->switches] += count;
      }
    }
    live = std::move(next);
  }
  LaurentPoly1 p;
  for (const auto& [key, tally] : live)
    for (const auto& [s, count] : tally) p += LaurentPoly1::monomial({s - w.left_cusps() + 1}, count);
  return p;
}

}  // namespace detail

/// Sum over rulings of z^(s - c + 1).
inline LaurentPoly1 ruling_polynomial(const FrontWord& w, SweepOptions opts = {}) {
  return detail::sweep_polynomial(w, nullptr, opts);
}

/// As ruling_polynomial, restricted to rulings whose switches are positive crossings.
inline LaurentPoly1 oriented_ruling_polynomial(const OrientedFront& of, SweepOptions opts = {}) {
  return detail::sweep_polynomial(of.word, &of, opts);
}

}  // namespace frontkit
