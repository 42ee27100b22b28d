#pragma once

// Word-level Legendrian moves: the planar-isotopy commutations between
// elementary tangles and the three Legendrian Reidemeister moves.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frontkit/front.hpp"

namespace frontkit {

/// Results of commuting the adjacent pair `a b` into `b' a'`. Empty when
/// the letters do not commute; two entries when a right cusp followed by a
/// left cusp at the same gap can be slid either way.
inline std::vector<std::pair<TangleLetter, TangleLetter>> commute_results(const TangleLetter& a,
                                                                          const TangleLetter& b) {
  using K = LetterKind;
  std::vector<std::pair<TangleLetter, TangleLetter>> out;
  const int p = a.index, q = b.index;
  if (a.kind == K::Crossing && b.kind == K::Crossing) {
    if (std::abs(p - q) >= 2) out.push_back({X(q), X(p)});
  } else if (a.kind == K::LeftCusp && b.kind == K::Crossing) {
    if (p > q + 1) out.push_back({X(q), L(p)});
    else if (q > p + 1) out.push_back({X(q - 2), L(p)});
  } else if (a.kind == K::Crossing && b.kind == K::LeftCusp) {
    if (q >= p + 2) out.push_back({L(q), X(p)});
    else if (p >= q) out.push_back({L(q), X(p + 2)});
  } else if (a.kind == K::Crossing && b.kind == K::RightCusp) {
    if (q > p + 1) out.push_back({R(q), X(p)});
    else if (p > q + 1) out.push_back({R(q), X(p - 2)});
  } else if (a.kind == K::RightCusp && b.kind == K::Crossing) {
    if (p >= q + 2) out.push_back({X(q), R(p)});
    else if (q >= p) out.push_back({X(q + 2), R(p)});
  } else if (a.kind == K::LeftCusp && b.kind == K::LeftCusp) {
    if (q >= p + 2) out.push_back({L(q - 2), L(p)});
    else if (p >= q) out.push_back({L(q), L(p + 2)});
  } else if (a.kind == K::RightCusp && b.kind == K::RightCusp) {
    if (p >= q + 2) out.push_back({R(q), R(p - 2)});
    else if (q >= p) out.push_back({R(q + 2), R(p)});
  } else if (a.kind == K::RightCusp && b.kind == K::LeftCusp) {
    if (p >= q) out.push_back({L(q), R(p + 2)});
    if (q >= p) out.push_back({L(q + 2), R(p)});
  } else {  // left cusp then right cusp
    if (q >= p + 2) out.push_back({R(q - 2), L(p)});
    else if (p >= q + 2) out.push_back({R(q), L(p - 2)});
  }
  return out;
}

enum class MoveKind { Commute, Type1Remove, Type1Insert, Type2Remove, Type2Insert, Type3 };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Commute: return "commute";
    case MoveKind::Type1Remove: return "t1-";
    case MoveKind::Type1Insert: return "t1+";
    case MoveKind::Type2Remove: return "t2-";
    case MoveKind::Type2Insert: return "t2+";
    case MoveKind::Type3: return "t3";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::Commute, MoveKind::Type1Remove, MoveKind::Type1Insert, MoveKind::Type2Remove,
                 MoveKind::Type2Insert, MoveKind::Type3}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

/// A relation applied at an explicit site.
///  - Commute: swap letters site, site+1; variant selects among commute_results.
///  - Type1Remove: delete `l_m x_{m-1} r_m` or `l_m x_{m+1} r_m` starting at site.
///  - Type1Insert: insert `l_m x_{m-1} r_m` (variant 0) or `l_m x_{m+1} r_m`
///    (variant 1) at slot `site`, with m = index.
///  - Type2Remove: `l_{m-1} x_m x_{m-1}` or `l_{m+1} x_m x_{m+1}` -> `l_m`, and
///    the mirrored `x_{m-1} x_m r_{m-1}` or `x_{m+1} x_m r_{m+1}` -> `r_m`.
///  - Type2Insert: the inverse; variant 0 picks the m-1 form, 1 the m+1 form.
///  - Type3: `x_{m+1} x_m x_{m+1}` <-> `x_m x_{m+1} x_m` starting at site.
struct Move {
  MoveKind kind = MoveKind::Commute;
  std::size_t site = 0;
  int variant = 0;
  int index = 0;

  std::string str() const {
    std::string s = std::string(to_string(kind)) + "@" + std::to_string(site);
    if (kind == MoveKind::Type1Insert) s += ":" + std::to_string(index);
    if (kind == MoveKind::Commute || kind == MoveKind::Type1Insert || kind == MoveKind::Type2Insert)
      s += "/" + std::to_string(variant);
    return s;
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Parses `kind@site[:index][/variant]`.
inline Move parse_move(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) throw std::invalid_argument("move must look like kind@site: " + text);
  auto kind = move_kind_from_string(text.substr(0, at));
  if (!kind) throw std::invalid_argument("unknown move kind: " + text.substr(0, at));
  Move m;
  m.kind = *kind;
  std::string rest = text.substr(at + 1);
  auto slash = rest.find('/');
  if (slash != std::string::npos) {
    m.variant = std::stoi(rest.substr(slash + 1));
    rest = rest.substr(0, slash);
  }
  auto colon = rest.find(':');
  if (colon != std::string::npos) {
    m.index = std::stoi(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  m.site = static_cast<std::size_t>(std::stoul(rest));
  return m;
}

class MoveError : public std::runtime_error {
 public:
  explicit MoveError(const std::string& what) : std::runtime_error("MOVE_NOT_APPLICABLE: " + what) {}
};

namespace detail {

struct Rewrite {
  std::size_t old_length;                  // letters replaced starting at the site
  std::vector<TangleLetter> replacement;
};

inline bool is(const TangleLetter& t, LetterKind k, int m) { return t.kind == k && t.index == m; }

inline std::optional<Rewrite> rewrite_for(const FrontWord& w, const Move& mv) {
  using K = LetterKind;
  const auto& ls = w.letters();
  const std::size_t n = ls.size();
  const std::size_t s = mv.site;
  switch (mv.kind) {
    case MoveKind::Commute: {
      if (s + 1 >= n) return std::nullopt;
      auto res = commute_results(ls[s], ls[s + 1]);
      if (mv.variant < 0 || static_cast<std::size_t>(mv.variant) >= res.size()) return std::nullopt;
      auto [b, a] = res[static_cast<std::size_t>(mv.variant)];
      return Rewrite{2, {b, a}};
    }
    case MoveKind::Type1Remove: {
      if (s + 2 >= n) return std::nullopt;
      const auto& a = ls[s];
      if (a.kind != K::LeftCusp || !is(ls[s + 2], K::RightCusp, a.index)) return std::nullopt;
      if (!is(ls[s + 1], K::Crossing, a.index - 1) && !is(ls[s + 1], K::Crossing, a.index + 1)) return std::nullopt;
      return Rewrite{3, {}};
    }
    case MoveKind::Type1Insert: {
      if (s > n) return std::nullopt;
      int strands = w.strands(s), m = mv.index;
      if (m < 1 || m > strands + 1) return std::nullopt;
      if (mv.variant == 0 && m < 2) return std::nullopt;
      if (mv.variant == 1 && m > strands) return std::nullopt;
      if (mv.variant != 0 && mv.variant != 1) return std::nullopt;
      return Rewrite{0, {L(m), X(mv.variant == 0 ? m - 1 : m + 1), R(m)}};
    }
    case MoveKind::Type2Remove: {
      if (s + 2 >= n) return std::nullopt;
      const auto &a = ls[s], &b = ls[s + 1], &c = ls[s + 2];
      if (a.kind == K::LeftCusp && b.kind == K::Crossing && is(c, K::Crossing, a.index)) {
        int m = b.index;
        if (a.index == m - 1 || a.index == m + 1) return Rewrite{3, {L(m)}};
      }
      if (a.kind == K::Crossing && b.kind == K::Crossing && is(c, K::RightCusp, a.index)) {
        int m = b.index;
        if (a.index == m - 1 || a.index == m + 1) return Rewrite{3, {R(m)}};
      }
      return std::nullopt;
    }
    case MoveKind::Type2Insert: {
      if (s >= n) return std::nullopt;
      const auto& a = ls[s];
      int m = a.index;
      if (mv.variant != 0 && mv.variant != 1) return std::nullopt;
      if (a.kind == K::LeftCusp) {
        int after = w.strands(s + 1);
        if (mv.variant == 0 && m >= 2) return Rewrite{1, {L(m - 1), X(m), X(m - 1)}};
        if (mv.variant == 1 && m + 1 <= after - 1) return Rewrite{1, {L(m + 1), X(m), X(m + 1)}};
      } else if (a.kind == K::RightCusp) {
        int before = w.strands(s);
        if (mv.variant == 0 && m >= 2) return Rewrite{1, {X(m - 1), X(m), R(m - 1)}};
        if (mv.variant == 1 && m + 1 <= before - 1) return Rewrite{1, {X(m + 1), X(m), R(m + 1)}};
      }
      return std::nullopt;
    }
    case MoveKind::Type3: {
      if (s + 2 >= n) return std::nullopt;
      const auto &a = ls[s], &b = ls[s + 1], &c = ls[s + 2];
      if (a.kind != K::Crossing || b.kind != K::Crossing || c != a) return std::nullopt;
      if (b.index == a.index - 1 || b.index == a.index + 1) return Rewrite{3, {b, a, b}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_applicable(const FrontWord& w, const Move& mv) { return detail::rewrite_for(w, mv).has_value(); }

/// Applies the move; throws MoveError when the relation's pattern is absent at the site.
inline FrontWord apply_move(const FrontWord& w, const Move& mv) {
  auto rw = detail::rewrite_for(w, mv);
  if (!rw) throw MoveError(mv.str() + " on '" + w.str() + "'");
  std::vector<TangleLetter> out(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(mv.site));
  out.insert(out.end(), rw->replacement.begin(), rw->replacement.end());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(mv.site + rw->old_length),
             w.letters().end());
  return FrontWord(std::move(out));
}

/// Carries an orientation across a move: every segment outside the rewritten
/// window keeps its direction, which also covers components the window never
/// touches.
inline OrientedFront transport_orientation(const OrientedFront& before, const Move& mv, const FrontWord& after) {
  auto rw = detail::rewrite_for(before.word, mv);
  if (!rw) throw MoveError(mv.str());
  std::vector<std::pair<Segment, Direction>> seeds;
  const std::size_t s = mv.site;
  const std::size_t old_end = s + rw->old_length, new_end = s + rw->replacement.size();
  for (std::size_t k = 0; k <= s; ++k)
    for (int p = 1; p <= before.word.strands(k); ++p) seeds.push_back({{k, p}, before.dir(k, p)});
  for (std::size_t k = old_end; k <= before.word.size(); ++k)
    for (int p = 1; p <= before.word.strands(k); ++p)
      seeds.push_back({{k - old_end + new_end, p}, before.dir(k, p)});
  if (seeds.empty()) return orient(after, orientation_choices(before));
  return orient_from_segments(after, seeds);
}

/// Every applicable move on w. Insertions are enumerated over all sites and indices.
inline std::vector<Move> applicable_moves(const FrontWord& w, MoveKind kind) {
  std::vector<Move> out;
  const std::size_t n = w.size();
  auto consider = [&](Move m) {
    if (is_applicable(w, m)) out.push_back(m);
  };
  switch (kind) {
    case MoveKind::Commute:
      for (std::size_t s = 0; s + 1 < n; ++s)
        for (int v = 0; v < 2; ++v) consider({kind, s, v, 0});
      break;
    case MoveKind::Type1Insert:
      for (std::size_t s = 0; s <= n; ++s)
        for (int m = 1; m <= w.strands(s) + 1; ++m)
          for (int v = 0; v < 2; ++v) consider({kind, s, v, m});
      break;
    case MoveKind::Type2Insert:
      for (std::size_t s = 0; s < n; ++s)
        for (int v = 0; v < 2; ++v) consider({kind, s, v, 0});
      break;
    default:
      for (std::size_t s = 0; s < n; ++s) consider({kind, s, 0, 0});
      break;
  }
  return out;
}

/// Samples `length` moves: a move kind uniformly among those with an
/// applicable instance, then a site uniformly. Deterministic for a given seed.
class RandomMoveDriver {
 public:
  explicit RandomMoveDriver(std::uint64_t seed) : rng_(seed) {}

  std::optional<Move> sample(const FrontWord& w) {
    std::vector<std::vector<Move>> by_kind;
    for (auto k : {MoveKind::Commute, MoveKind::Type1Remove, MoveKind::Type1Insert, MoveKind::Type2Remove,
                   MoveKind::Type2Insert, MoveKind::Type3}) {
      auto moves = applicable_moves(w, k);
      if (!moves.empty()) by_kind.push_back(std::move(moves));
    }
    if (by_kind.empty()) return std::nullopt;
    const auto& pool = by_kind[pick(by_kind.size())];
    return pool[pick(pool.size())];
  }

  /// Applies up to `length` random moves, transporting the orientation.
  OrientedFront walk(OrientedFront of, std::size_t length, std::vector<Move>* log = nullptr) {
    for (std::size_t k = 0; k < length; ++k) {
      auto mv = sample(of.word);
      if (!mv) break;
      FrontWord next = apply_move(of.word, *mv);
      of = transport_orientation(of, *mv, next);
      if (log) log->push_back(*mv);
    }
    return of;
  }

 private:
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::mt19937_64 rng_;
};

}  // namespace frontkit
