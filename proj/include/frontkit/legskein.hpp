#pragma once

// Direct evaluation of the ruling polynomial by the Legendrian skein
// calculus: planar isotopy, the three move types, the crossing-change
// relation and the split rule. Nothing here consults the rulings module.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontkit/front.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/poly.hpp"

namespace frontkit {

// ---------------------------------------------------------------------------
// Canonical representatives under the commutation relations.

namespace detail {

using Letters = std::vector<TangleLetter>;

// Right cusps rank first so that any l r pair that can be slid apart is.
struct CanonicalOrder {
  static int rank(LetterKind k) { return k == LetterKind::RightCusp ? 0 : k == LetterKind::Crossing ? 1 : 2; }
  bool operator()(const TangleLetter& a, const TangleLetter& b) const {
    return std::pair(rank(a.kind), a.index) < std::pair(rank(b.kind), b.index);
  }
  bool operator()(const Letters& a, const Letters& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), *this);
  }
  bool operator()(const std::pair<TangleLetter, Letters>& a, const std::pair<TangleLetter, Letters>& b) const {
    if ((*this)(a.first, b.first)) return true;
    if ((*this)(b.first, a.first)) return false;
    return (*this)(a.second, b.second);
  }
};
using Candidates = std::set<std::pair<TangleLetter, Letters>, CanonicalOrder>;

// Every (letter, rest) obtainable by sliding w[j] to the front.
inline void front_candidates(const Letters& w, Candidates& out) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::set<Letters> frontier{w};
    for (std::size_t k = j; k > 0; --k) {
      std::set<Letters> next;
      for (const auto& v : frontier) {
        for (const auto& [moved, displaced] : commute_results(v[k - 1], v[k])) {
          Letters u = v;
          u[k - 1] = moved;
          u[k] = displaced;
          next.insert(std::move(u));
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    for (const auto& v : frontier) out.emplace(v.front(), Letters(v.begin() + 1, v.end()));
  }
}

// Distinct suffixes explored per pass before ties are broken by first
// occurrence only; beyond it the result is still in the class, but two
// members of a class may map to different representatives.
inline constexpr std::size_t kCanonicalBudget = 512;

// Smallest reachable letter to the front, then the smallest canonical rest
// among the ways of getting it there. Never increases the word.
inline const Letters& greedy_pass(const Letters& w, std::map<Letters, Letters>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Letters best;
  if (!w.empty()) {
    Candidates cands;
    front_candidates(w, cands);
    const TangleLetter first = cands.begin()->first;
    bool have = false;
    for (const auto& [t, rest] : cands) {
      if (t != first) break;
      Letters c{t};
      const Letters& tail = greedy_pass(rest, memo);
      c.insert(c.end(), tail.begin(), tail.end());
      if (!have || CanonicalOrder{}(c, best)) best = std::move(c);
      have = true;
      if (memo.size() > kCanonicalBudget) break;
    }
  }
  return memo.emplace(w, std::move(best)).first->second;
}

// Commutation classes up to this size are enumerated outright.
inline constexpr std::size_t kClassBudget = 512;

// The least member of w's commutation class, or nullopt when the class has
// more than kClassBudget members. Whether the budget is exceeded depends only
// on the class, so all members agree on which branch they take.
inline std::optional<Letters> class_minimum(const Letters& w) {
  std::set<Letters> seen{w};
  std::vector<const Letters*> todo{&*seen.begin()};
  while (!todo.empty()) {
    const Letters& v = *todo.back();
    todo.pop_back();
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      for (const auto& [first, second] : commute_results(v[k], v[k + 1])) {
        Letters u = v;
        u[k] = first;
        u[k + 1] = second;
        auto [it, fresh] = seen.insert(std::move(u));
        if (!fresh) continue;
        if (seen.size() > kClassBudget) return std::nullopt;
        todo.push_back(&*it);
      }
    }
  }
  return *std::min_element(seen.begin(), seen.end(), CanonicalOrder{});
}

}  // namespace detail

/// Representative of the word's commutation class: the least member when the
/// class is small enough to enumerate, otherwise greedy passes iterated to a
/// fixed point. The greedy result is in the class and idempotent, but two
/// members of a large class may get different representatives; the reducer
/// only needs determinism, so that costs memo hits, never correctness.
inline FrontWord canonicalize(const FrontWord& word) {
  if (auto least = detail::class_minimum(word.letters())) return FrontWord(std::move(*least));
  detail::Letters cur = word.letters();
  while (true) {
    std::map<detail::Letters, detail::Letters> memo;
    detail::Letters next = detail::greedy_pass(cur, memo);
    if (next == cur) return FrontWord(std::move(cur));
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Linear combinations of words.

class WordExpr {
 public:
  using TermMap = std::map<FrontWord, LaurentPoly1>;

  WordExpr() = default;
  explicit WordExpr(const FrontWord& w) { add(w, 1); }

  void add(const FrontWord& w, const LaurentPoly1& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const WordExpr& e, const LaurentPoly1& c = 1) {
    for (const auto& [w, k] : e.terms_) add(w, k * c);
  }

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Sum of coeff * f(word).
  LaurentPoly1 evaluate(const std::function<LaurentPoly1(const FrontWord&)>& f) const {
    LaurentPoly1 total;
    for (const auto& [w, c] : terms_) total += c * f(w);
    return total;
  }

  friend bool operator==(const WordExpr&, const WordExpr&) = default;

 private:
  TermMap terms_;
};

class SkeinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Crossing-change relation at word position `site`, which must hold either
/// l_{k+1} x_k or l_k x_{k+1}. Returns the equivalent three-term expression.
inline WordExpr skein_expand(const FrontWord& word, std::size_t site) {
  if (site + 1 >= word.size() || word[site].kind != LetterKind::LeftCusp ||
      word[site + 1].kind != LetterKind::Crossing || std::abs(word[site].index - word[site + 1].index) != 1) {
    throw SkeinError("PATTERN_MISMATCH: no l/x skein pair at position " + std::to_string(site + 1));
  }
  const auto& w = word.letters();
  const int cusp = word[site].index, cross = word[site + 1].index;
  const int k = std::min(cusp, cross);
  auto with = [&](const detail::Letters& mid) {
    detail::Letters out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(site));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(site) + 2, w.end());
    return FrontWord(std::move(out));
  };
  const LaurentPoly1 z = zpow(1);
  // value(l_{k+1} x_k) - value(l_k x_{k+1}) = z (value(l_{k+1}) - value(l_k))
  const LaurentPoly1 sign = cusp == k + 1 ? 1 : -1;
  WordExpr e;
  e.add(with({cusp == k + 1 ? L(k) : L(k + 1), cusp == k + 1 ? X(k + 1) : X(k)}), 1);
  e.add(with({L(k + 1)}), sign * z);
  e.add(with({L(k)}), -sign * z);
  return e;
}

// ---------------------------------------------------------------------------
// Reduction procedure.

struct ReductionMeasure {
  int L = 0;   // left cusps
  int M = 0;   // strands right of the active cusp plus crossings still ahead
  int N1 = 0;  // length of the upper run
  int N2 = 0;  // length of the lower run

  friend bool operator==(const ReductionMeasure&, const ReductionMeasure&) = default;
};

struct ReductionStep {
  int frame = 0;  // one frame per word on which the procedure was started
  std::string rule;
  std::size_t site = 0;  // 1-based letter position in the word being rewritten
  ReductionMeasure measure;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(long long fuel)
      : std::runtime_error("FUEL_EXHAUSTED: reduction exceeded " + std::to_string(fuel) + " steps") {}
};

struct EvaluateOptions {
  bool memoize = true;
  long long fuel = 0;  // 0: FRONTKIT_FUEL from the environment, else 1'000'000
  ReductionTrace* trace = nullptr;
  // Called after every step of a frame with the frame's current expression,
  // which is equal in value to the word the frame started from.
  std::function<void(const FrontWord& start, const WordExpr& current)> observe;
};

namespace detail {

inline long long default_fuel() {
  if (const char* env = std::getenv("FRONTKIT_FUEL")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1'000'000;
}

inline bool has_zero_pattern(const Letters& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const auto &a = w[k], &b = w[k + 1];
    if (a.kind == LetterKind::LeftCusp && b.kind == LetterKind::RightCusp && std::abs(a.index - b.index) == 1)
      return true;
    if (a.kind == LetterKind::Crossing && b.kind == LetterKind::RightCusp && a.index == b.index) return true;
    if (a.kind == LetterKind::LeftCusp && b.kind == LetterKind::Crossing && a.index == b.index) return true;
  }
  return false;
}

class Reducer {
 public:
  explicit Reducer(const EvaluateOptions& opts)
      : opts_(opts), fuel_(opts.fuel > 0 ? opts.fuel : default_fuel()) {}

  LaurentPoly1 evaluate(const FrontWord& w) {
    burn();
    std::optional<FrontWord> key;
    if (opts_.memoize) {
      key = canonicalize(w);
      if (auto it = memo_.find(*key); it != memo_.end()) return it->second;
    }
    LaurentPoly1 v = compute(w, key);
    if (key) memo_.emplace(*key, v);
    return v;
  }

 private:
  // The active configuration X l_m (x_{m-1}..x_{m-N1}) (x_{m+1}..x_{m+N2}) Y.
  struct State {
    Letters x;
    int m = 0, n1 = 0, n2 = 0;
    Letters y;
    std::size_t yi = 0;  // next unread letter of y

    Letters upper(int from = 1) const {
      Letters r;
      for (int j = from; j <= n1; ++j) r.push_back(X(m - j));
      return r;
    }
    Letters lower(int from = 1) const {
      Letters r;
      for (int j = from; j <= n2; ++j) r.push_back(X(m + j));
      return r;
    }
    Letters tail(std::size_t skip = 0) const {
      return Letters(y.begin() + static_cast<std::ptrdiff_t>(yi + skip), y.end());
    }
  };

  static Letters cat(std::initializer_list<Letters> parts) {
    Letters out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }
  static Letters up(int from, int to) {  // x_from, x_{from+1}, ..., x_to
    Letters r;
    for (int j = from; j <= to; ++j) r.push_back(X(j));
    return r;
  }
  static Letters down(int from, int to) {  // x_from, x_{from-1}, ..., x_to
    Letters r;
    for (int j = from; j >= to; --j) r.push_back(X(j));
    return r;
  }

  void burn() {
    if (++spent_ > fuel_) throw FuelExhausted(fuel_);
  }

  void log(const char* rule, std::size_t site, ReductionMeasure m) {
    if (opts_.trace) opts_.trace->steps.push_back({frame_, rule, site, m});
  }

  static ReductionMeasure measure(const FrontWord& w, const State& s) {
    int cr = 0;
    for (std::size_t k = s.yi; k < s.y.size(); ++k) cr += s.y[k].kind == LetterKind::Crossing;
    return {w.left_cusps(), w.strands(s.x.size() + 1) + cr, s.n1, s.n2};
  }

  static Letters render(const State& s) {
    return cat({s.x, {L(s.m)}, s.upper(), s.lower(), s.tail()});
  }

  LaurentPoly1 compute(const FrontWord& w, const std::optional<FrontWord>& canon) {
    const LaurentPoly1 z = zpow(1), zinv = zpow(-1);
    const int frame = next_frame_++;
    frame_ = frame;
    const auto& letters = w.letters();

    if (w.empty()) {
      log("empty", 0, {});
      return z;
    }
    if (has_zero_pattern(letters) || has_zero_pattern((canon ? *canon : canonicalize(w)).letters())) {
      log("zero-pattern", 0, {});
      return 0;
    }
    if (w == FrontWord({L(1), R(1)})) {
      log("unknot", 0, {});
      return 1;
    }
    for (std::size_t k = 1; k < letters.size(); ++k) {
      if (w.strands(k) == 0) {
        log("split", k, {});
        FrontWord a(Letters(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k)));
        FrontWord b(Letters(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end()));
        LaurentPoly1 va = evaluate(a);
        if (va.is_zero()) return 0;
        return zinv * va * evaluate(b);
      }
    }
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (letters[k].kind == LetterKind::LeftCusp && letters[k + 1].kind == LetterKind::RightCusp &&
          letters[k].index == letters[k + 1].index) {
        log("eye", k + 1, {});
        Letters rest = letters;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k), rest.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        return zinv * evaluate(FrontWord(std::move(rest)));
      }
    }

    WordExpr expr = reduce(w, frame);
    return expr.evaluate([this](const FrontWord& t) { return evaluate(t); });
  }

  // Runs the procedure on one word until it is rewritten into terms that are
  // each smaller in (crossings, left cusps).
  WordExpr reduce(const FrontWord& w, int frame) {
    const LaurentPoly1 z = zpow(1), zinv = zpow(-1);
    const auto& letters = w.letters();
    std::size_t k = letters.size();
    while (letters[--k].kind != LetterKind::LeftCusp) {
    }
    State s;
    s.x.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
    s.m = letters[k].index;
    s.y.assign(letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, letters.end());

    WordExpr side;
    auto current = [&] {
      WordExpr e = side;
      e.add(FrontWord(render(s)), 1);
      return e;
    };
    auto observe = [&](const WordExpr& e) {
      if (opts_.observe) opts_.observe(w, e);
    };
    auto finish = [&](const char* rule, std::optional<Letters> main, const LaurentPoly1& c = 1) {
      frame_ = frame;
      log(rule, s.x.size() + 1, measure(FrontWord(render(s)), s));
      WordExpr e = side;
      if (main) e.add(FrontWord(*main), c);
      observe(e);
      return e;
    };

    // Crossing change on l_m x_{m-1}: the upper run moves to the lower run.
    auto shift_up = [&] {
      Letters rest = cat({s.upper(2), s.lower(), s.tail()});
      side.add(FrontWord(cat({s.x, {L(s.m)}, rest})), z);
      side.add(FrontWord(cat({s.x, {L(s.m - 1)}, rest})), -z);
      --s.m, --s.n1, ++s.n2;
    };
    // Crossing change on l_m x_{m+1}: the lower run moves to the upper run.
    auto shift_down = [&] {
      Letters rest = cat({s.upper(), s.lower(2), s.tail()});
      side.add(FrontWord(cat({s.x, {L(s.m + 1)}, rest})), -z);
      side.add(FrontWord(cat({s.x, {L(s.m)}, rest})), z);
      ++s.m, ++s.n1, --s.n2;
    };

    observe(current());
    while (true) {
      burn();
      frame_ = frame;
      if (s.yi >= s.y.size()) throw std::logic_error("reduction ran past the end of the word");
      const TangleLetter t = s.y[s.yi];
      const int i = t.index, m = s.m;
      const int u = m - s.n1, d = m + s.n2 + 1;
      const std::size_t site = s.x.size() + 2 + static_cast<std::size_t>(s.n1 + s.n2);
      const ReductionMeasure before = measure(FrontWord(render(s)), s);
      auto step = [&](const char* rule) {
        log(rule, site, before);
        ++s.yi;
        observe(current());
      };

      if (t.kind == LetterKind::Crossing) {
        if (i == m) {
          if (s.n1 == 0 && s.n2 == 0) return finish("zero-kink", std::nullopt);
          if (s.n1 == 0)
            return finish("type2", cat({s.x, {L(m + 1)}, up(m + 2, m + s.n2), s.tail(1)}));
          if (s.n2 == 0)
            return finish("type2", cat({s.x, {L(m - 1)}, down(m - 2, m - s.n1), s.tail(1)}));
          // Crossing change on l_m x_{m-1}, then a Type 3 move carries
          // x_{m-1} out into X.
          Letters rest = cat({{X(m + 1), X(m)}, down(m - 2, m - s.n1), up(m + 2, m + s.n2), s.tail(1)});
          side.add(FrontWord(cat({s.x, {L(m)}, rest})), z);
          side.add(FrontWord(cat({s.x, {L(m - 1)}, rest})), -z);
          s.x.push_back(X(m - 1));
          --s.m, --s.n1, ++s.n2;
          step("skein-type3");
        } else if (i <= u - 2) {
          s.x.push_back(t);
          step("commute");
        } else if (i >= d + 1) {
          s.x.push_back(X(i - 2));
          step("commute");
        } else if (i == u - 1) {
          ++s.n1;
          step("extend-upper");
        } else if (i == d) {
          ++s.n2;
          step("extend-lower");
        } else if (i == u) {  // n1 >= 1
          while (s.n1 > 0) shift_up();
          return finish("skein-type2", cat({s.x, {L(s.m + 1)}, up(s.m + 2, s.m + s.n2), s.tail(1)}));
        } else if (i == d - 1) {  // n2 >= 1
          while (s.n2 > 0) shift_down();
          return finish("skein-type2", cat({s.x, {L(s.m - 1)}, down(s.m - 2, s.m - s.n1), s.tail(1)}));
        } else {  // strictly inside one of the runs
          s.x.push_back(X(i - 1));
          step("type3");
        }
        continue;
      }

      // Right cusp.
      if (i == m) {
        if (s.n1 == 0 && s.n2 == 0) return finish("eye", cat({s.x, s.tail(1)}), zinv);
        if (s.n1 == 0) return finish("type1", cat({s.x, up(m, m + s.n2 - 2), s.tail(1)}));
        if (s.n2 == 0) return finish("type1", cat({s.x, down(m - 2, m - s.n1), s.tail(1)}));
        // Crossing change on l_m x_{m-1}, then Type 1 / Type 2 on what remains.
        Letters rest = cat({down(m - 2, m - s.n1), up(m, m + s.n2 - 2), s.tail(1)});
        side.add(FrontWord(cat({s.x, {L(m), X(m + 1), R(m)}, rest})), z);
        side.add(FrontWord(cat({s.x, {L(m - 1), X(m + 1), R(m)}, rest})), -z);
        return finish("skein-type2", cat({s.x, {L(m - 1), R(m + 1)}, rest}));
      }
      if (i <= u - 2) {
        s.x.push_back(t);
        s.m -= 2;
        step("commute");
      } else if (i >= d + 1) {
        s.x.push_back(R(i - 2));
        step("commute");
      } else if (i == u - 1) {
        while (s.n1 > 0) shift_up();
        return finish("zigzag", std::nullopt);
      } else if (i == d) {
        while (s.n2 > 0) shift_down();
        return finish("zigzag", std::nullopt);
      } else if (i == u || i == d - 1) {
        return finish("zero-kink", std::nullopt);
      } else if (i < m) {
        return finish("type2", cat({s.x, {L(m)}, down(m - 1, i + 1), {R(i - 1)}, down(i - 2, u),
                                    up(m - 1, m + s.n2 - 2), s.tail(1)}));
      } else {
        return finish("type2", cat({s.x, {L(m)}, s.upper(), up(m + 1, i - 1), {R(i + 1)}, up(i, m + s.n2 - 2),
                                    s.tail(1)}));
      }
    }
  }

  const EvaluateOptions& opts_;
  long long fuel_;
  long long spent_ = 0;
  int next_frame_ = 0;
  int frame_ = 0;
  std::map<FrontWord, LaurentPoly1> memo_;
};

}  // namespace detail

/// The ruling polynomial computed by the skein reduction.
inline LaurentPoly1 evaluate_B(const FrontWord& word, const EvaluateOptions& opts = {}) {
  detail::Reducer r(opts);
  return r.evaluate(word);
}

}  // namespace frontkit
