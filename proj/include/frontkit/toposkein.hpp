#pragma once

// Dubrovnik (D) and regular-isotopy HOMFLY (H) polynomials of planar
// diagrams by skein trees, and the front invariants read off from them.
//
//   D(X) - D(X') = z (D(A) - D(B))       A: smoothing along the under strand's
//                                           left turn, B: the other one
//   H(L+) - H(L-) = z H(L0)
//   curls: a^{+1} / a^{-1};  D(O) = H(O) = 1
//   split unions: delta_D = (a - a^{-1})/z + 1,  delta_H = (a - a^{-1})/z

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontkit/front.hpp"
#include "frontkit/planar.hpp"
#include "frontkit/poly.hpp"

namespace frontkit {

enum class SkeinKind { Dubrovnik, Homfly };

enum class CrossingHeuristic {
  Forward,   // traverse from the lowest port, take the first bad crossing
  Backward,  // traverse from the highest port, take the first bad crossing
};

struct SkeinStats {
  long long nodes = 0;
  long long memo_hits = 0;
};

struct SkeinOptions {
  bool memoize = true;
  CrossingHeuristic heuristic = CrossingHeuristic::Forward;
  SkeinStats* stats = nullptr;
};

/// One summand of a skein expansion.
struct SkeinTerm {
  PlanarDiagram diagram;
  LaurentPoly2 coefficient;
};

inline LaurentPoly2 split_factor(SkeinKind kind) {
  LaurentPoly2 d = monomial2(-1, 1) - monomial2(-1, -1);
  return kind == SkeinKind::Dubrovnik ? d + 1 : d;
}

/// Rewrites d at crossing c by the skein relation: the value of d equals the
/// coefficient-weighted sum of the values of the returned diagrams. For H,
/// d must carry a consistent orientation.
inline std::vector<SkeinTerm> skein_expand(const PlanarDiagram& d, int c, SkeinKind kind) {
  const LaurentPoly2 z = monomial2(1, 0);
  PlanarDiagram switched = d;
  switched.switch_crossing(c);
  const int a = d.rot[static_cast<std::size_t>(c)];
  if (kind == SkeinKind::Dubrovnik) {
    return {{switched, 1}, {smooth(d, c, a), z}, {smooth(d, c, 1 - a), -z}};
  }
  int u = a;
  if (!d.is_in(4 * c + u)) u += 2;
  int o = (u + 1) % 4;
  if (!d.is_in(4 * c + o)) o = (o + 2) % 4;
  PlanarDiagram oriented = resolve(d, c, {u, (o + 2) % 4}, {o, (u + 2) % 4});
  return {{switched, 1}, {oriented, d.sign(c) * z}};
}

namespace detail {

// First crossing met from below along a based traversal, or nullopt when the
// diagram is descending. Basepoints depend only on arcs and orientation.
inline std::optional<int> first_bad_crossing(const PlanarDiagram& d, CrossingHeuristic h) {
  const int ports = static_cast<int>(d.next.size());
  std::vector<char> visited(static_cast<std::size_t>(ports), 0), met(static_cast<std::size_t>(d.crossings()), 0);
  for (int k = 0; k < ports; ++k) {
    const int s = h == CrossingHeuristic::Forward ? k : ports - 1 - k;
    if (visited[static_cast<std::size_t>(s)]) continue;
    int p = d.is_in(s) ? s : PlanarDiagram::turn(s, 2);
    while (!visited[static_cast<std::size_t>(p)]) {
      const int c = PlanarDiagram::crossing_of(p), out = PlanarDiagram::turn(p, 2);
      visited[static_cast<std::size_t>(p)] = visited[static_cast<std::size_t>(out)] = 1;
      if (!met[static_cast<std::size_t>(c)]) {
        met[static_cast<std::size_t>(c)] = 1;
        if (d.is_under(p)) return c;
      }
      p = d.next[static_cast<std::size_t>(out)];
    }
  }
  return std::nullopt;
}

class SkeinEvaluator {
 public:
  SkeinEvaluator(SkeinKind kind, const SkeinOptions& opts) : kind_(kind), opts_(opts), delta_(split_factor(kind)) {}

  LaurentPoly2 value(PlanarDiagram d) {
    if (opts_.stats) ++opts_.stats->nodes;
    if (kind_ == SkeinKind::Dubrovnik) reorient(d);
    std::vector<int> key;
    if (opts_.memoize) {
      key = canonical_code(d, kind_ == SkeinKind::Homfly);
      if (auto it = memo_.find(key); it != memo_.end()) {
        if (opts_.stats) ++opts_.stats->memo_hits;
        return it->second;
      }
    }
    LaurentPoly2 v = compute(std::move(d));
    if (opts_.memoize) memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  LaurentPoly2 compute(PlanarDiagram d) {
    int curl_writhe = 0;
    while (auto c = find_curl(d)) {
      curl_writhe += d.sign(*c);
      d = erase_crossing(d, *c);
    }
    const LaurentPoly2 curls = monomial2(0, curl_writhe);

    if (d.crossings() == 0) {
      if (d.free_loops == 0) throw std::invalid_argument("empty diagram has no skein value");
      return curls * delta_.pow(static_cast<unsigned>(d.free_loops - 1));
    }
    auto pieces = connected_pieces(d);
    if (pieces.size() > 1 || d.free_loops > 0) {
      LaurentPoly2 v = curls * delta_.pow(static_cast<unsigned>(pieces.size()) + static_cast<unsigned>(d.free_loops) - 1);
      for (auto& piece : pieces) {
        v *= value(std::move(piece));
        if (v.is_zero()) break;
      }
      return v;
    }
    auto bad = first_bad_crossing(d, opts_.heuristic);
    if (!bad) {
      return curls * monomial2(0, d.writhe()) * delta_.pow(static_cast<unsigned>(d.link_components() - 1));
    }
    LaurentPoly2 v;
    for (auto& term : skein_expand(d, *bad, kind_)) v += term.coefficient * value(std::move(term.diagram));
    return curls * v;
  }

  SkeinKind kind_;
  const SkeinOptions& opts_;
  LaurentPoly2 delta_;
  std::map<std::vector<int>, LaurentPoly2> memo_;
};

}  // namespace detail

/// Dubrovnik polynomial, D(unknot) = 1. Orientation is ignored.
inline LaurentPoly2 kauffman_D(const PlanarDiagram& d, const SkeinOptions& opts = {}) {
  return detail::SkeinEvaluator(SkeinKind::Dubrovnik, opts).value(d);
}

/// Regular-isotopy HOMFLY polynomial, H(unknot) = 1.
inline LaurentPoly2 homfly_H(const PlanarDiagram& d, const SkeinOptions& opts = {}) {
  return detail::SkeinEvaluator(SkeinKind::Homfly, opts).value(d);
}

inline LaurentPoly2 kauffman_F(const OrientedFront& of, const SkeinOptions& opts = {}) {
  const PlanarDiagram d = to_planar_diagram(of);
  return monomial2(0, -d.writhe()) * kauffman_D(d, opts);
}

inline LaurentPoly2 homfly_P(const OrientedFront& of, const SkeinOptions& opts = {}) {
  const PlanarDiagram d = to_planar_diagram(of);
  return monomial2(0, -d.writhe()) * homfly_H(d, opts);
}

class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error("INTERNAL_INCONSISTENCY: " + what) {}
};

/// Coefficient of a^{c-1} in D(Top(K)); checked against the coefficient of
/// a^{-1} in a^beta F.
inline LaurentPoly1 B_of(const FrontWord& w, const SkeinOptions& opts = {}) {
  const OrientedFront of = orient(w);
  const FrontInvariants inv = invariants(of);
  const PlanarDiagram d = to_planar_diagram(of);
  const LaurentPoly2 D = kauffman_D(d, opts);
  const LaurentPoly1 direct = coeff_a(D, inv.c - 1);
  const LaurentPoly2 F = monomial2(0, -d.writhe()) * D;
  const LaurentPoly1 via_f = coeff_a(monomial2(0, inv.beta) * F, -1);
  if (!(direct == via_f)) throw InternalInconsistency("B from D and from F differ");
  return direct;
}

/// Coefficient of a^{c-1} in H(Top(K)).
inline LaurentPoly1 Q_of(const OrientedFront& of, const SkeinOptions& opts = {}) {
  return coeff_a(homfly_H(to_planar_diagram(of), opts), of.word.left_cusps() - 1);
}

struct SharpnessReport {
  int beta = 0;
  int c = 0;
  ADegree deg_a_D = ADegree::neg_infinity();
  ADegree deg_a_H = ADegree::neg_infinity();
  ADegree deg_a_F = ADegree::neg_infinity();
  ADegree deg_a_P = ADegree::neg_infinity();
  LaurentPoly1 B, Q;
  bool kauffman_sharp = false;
  bool homfly_sharp = false;
  bool homfly_bound_stronger = false;  // deg_a P > deg_a F: the P bound on beta is the tighter one
};

inline SharpnessReport sharpness(const OrientedFront& of, const SkeinOptions& opts = {}) {
  const FrontInvariants inv = invariants(of);
  const PlanarDiagram d = to_planar_diagram(of);
  const LaurentPoly2 D = kauffman_D(d, opts), H = homfly_H(d, opts);
  SharpnessReport r;
  r.beta = inv.beta;
  r.c = inv.c;
  r.deg_a_D = deg_a(D);
  r.deg_a_H = deg_a(H);
  r.deg_a_F = deg_a(monomial2(0, -d.writhe()) * D);
  r.deg_a_P = deg_a(monomial2(0, -d.writhe()) * H);
  r.B = coeff_a(D, inv.c - 1);
  r.Q = coeff_a(H, inv.c - 1);

  const bool by_coefficient = !r.B.is_zero();
  const bool by_degree = r.deg_a_D == inv.c - 1;
  const bool by_beta = !r.deg_a_F.is_neg_infinity() && inv.beta == -r.deg_a_F.value() - 1;
  if (by_coefficient != by_degree || by_degree != by_beta) {
    throw InternalInconsistency("Kauffman sharpness tests disagree (B != 0: " + std::to_string(by_coefficient) +
                                ", deg_a D = c-1: " + std::to_string(by_degree) +
                                ", beta = -deg_a F - 1: " + std::to_string(by_beta) + ")");
  }
  r.kauffman_sharp = by_coefficient;
  r.homfly_sharp = !r.Q.is_zero();
  r.homfly_bound_stronger = r.deg_a_P > r.deg_a_F;
  return r;
}

}  // namespace frontkit
