#pragma once

// Helpers shared by the test binaries: random closed fronts and corpus access.

#include <algorithm>
#include <array>
#include <filesystem>
#include <random>
#include <vector>

#include "frontkit/frontkit.hpp"

namespace frontkit::testing {

inline std::filesystem::path corpus_dir() { return FRONTKIT_CORPUS_DIR; }

// A random closed front with roughly `len` letters and at most `max_strands`
// strands. Cusps open in the first half, close in the second; crossings are
// weighted double so the words are not cusp-dominated.
inline FrontWord random_front(std::mt19937_64& g, int len, int max_strands) {
  for (;;) {
    std::vector<TangleLetter> w;
    int n = 0;
    for (int k = 0; k < len || n > 0; ++k) {
      if (k > len + 30) break;
      std::vector<TangleLetter> opts;
      if (n + 2 <= max_strands)
        for (int m = 1; m <= n + 1; ++m) opts.push_back(L(m));
      if (k < len)
        for (int m = 1; m < n; ++m) {
          opts.push_back(X(m));
          opts.push_back(X(m));
        }
      if (k >= len / 2)
        for (int m = 1; m < n; ++m) opts.push_back(R(m));
      if (opts.empty()) break;
      auto t = opts[g() % opts.size()];
      w.push_back(t);
      n = *apply_count(n, t);
    }
    if (!w.empty() && FrontWord::is_valid(w)) return FrontWord(w);
  }
}

// Random fronts with a bounded crossing count, for the slower evaluators.
inline FrontWord random_small_front(std::mt19937_64& g, int max_crossings, int len = 10, int max_strands = 6) {
  for (;;) {
    FrontWord w = random_front(g, len, max_strands);
    if (w.crossings() <= max_crossings) return w;
  }
}

// A diagram with arbitrary crossing choices: Top of a random front with
// random under-strands.
struct Framed {
  OrientedFront of;
  std::vector<std::uint8_t> rots;
  PlanarDiagram diagram() const { return planar_with_rot(of, rots); }
};

inline Framed random_framed(std::mt19937_64& g, int max_crossings) {
  const FrontWord w = random_small_front(g, max_crossings);
  const auto choices = all_orientations(components(w).count);
  Framed f{orient(w, choices[g() % choices.size()]), {}};
  for (int k = 0; k < w.crossings(); ++k) f.rots.push_back(static_cast<std::uint8_t>(g() % 2));
  return f;
}

inline int crossings_before(const FrontWord& w, std::size_t pos) {
  int n = 0;
  for (std::size_t k = 0; k < pos; ++k) n += w[k].kind == LetterKind::Crossing;
  return n;
}

// A Type 2 removal or Type 3 move read as a Reidemeister II / III move on
// the diagram. The window's bits are first made consistent with the move
// (the RII pair shares one bit, the RIII triangle follows a random total
// over-order); returns the adjusted diagram and its image.
inline std::pair<Framed, Framed> reidemeister(std::mt19937_64& g, Framed f, const Move& m) {
  const FrontWord& w = f.of.word;
  const int first = crossings_before(w, m.site);
  if (m.kind == MoveKind::Type3) {
    // Strands a, b, c top to bottom; x_{m+1} x_m x_{m+1} crosses (b,c), (a,c),
    // (a,b), and the other side the reverse. rot 1 puts the lower strand on top.
    std::array<int, 3> over{0, 1, 2};
    std::shuffle(over.begin(), over.end(), g);
    auto bit = [&](int upper, int lower) { return static_cast<std::uint8_t>(over[lower] > over[upper]); };
    const bool up_first = w[m.site].index > w[m.site + 1].index;
    const std::array<std::uint8_t, 3> window = up_first ? std::array{bit(1, 2), bit(0, 2), bit(0, 1)}
                                                        : std::array{bit(0, 1), bit(0, 2), bit(1, 2)};
    for (int k = 0; k < 3; ++k) f.rots[static_cast<std::size_t>(first + k)] = window[static_cast<std::size_t>(k)];
    Framed out{transport_orientation(f.of, m, apply_move(w, m)), f.rots};
    std::reverse(out.rots.begin() + first, out.rots.begin() + first + 3);
    return {f, out};
  }
  const std::uint8_t b = static_cast<std::uint8_t>(g() % 2);
  f.rots[static_cast<std::size_t>(first)] = f.rots[static_cast<std::size_t>(first + 1)] = b;
  Framed out{transport_orientation(f.of, m, apply_move(w, m)), f.rots};
  out.rots.erase(out.rots.begin() + first, out.rots.begin() + first + 2);
  return {f, out};
}

inline LaurentPoly1 P1(const char* s) { return LaurentPoly1::parse(s); }
inline LaurentPoly2 P2(const char* s) { return LaurentPoly2::parse(s); }

}  // namespace frontkit::testing
