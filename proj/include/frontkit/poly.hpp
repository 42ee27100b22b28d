#pragma once

// Exact sparse Laurent polynomials with arbitrary-precision integer
// coefficients. Laurent<1> is a polynomial in z, Laurent<2> in (z, a).

#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace frontkit {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

template <std::size_t Vars>
constexpr std::array<const char*, Vars> variable_names() {
  if constexpr (Vars == 1) {
    return {"z"};
  } else {
    static_assert(Vars == 2, "only z and (z, a) polynomials are supported");
    return {"z", "a"};
  }
}

// Rendering order: last variable most significant, descending.
template <std::size_t Vars>
struct RenderOrder {
  bool operator()(const std::array<int, Vars>& x, const std::array<int, Vars>& y) const {
    for (std::size_t k = Vars; k-- > 0;) {
      if (x[k] != y[k]) return x[k] > y[k];
    }
    return false;
  }
};

}  // namespace detail

template <std::size_t Vars>
class Laurent {
 public:
  using Exponent = std::array<int, Vars>;
  using TermMap = std::map<Exponent, Integer, detail::RenderOrder<Vars>>;

  Laurent() = default;
  Laurent(long long constant) {  // NOLINT: implicit from integers is intended
    if (constant != 0) terms_.emplace(Exponent{}, Integer(constant));
  }

  static Laurent monomial(const Exponent& e, Integer c = 1) {
    Laurent p;
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Laurent& operator+=(const Laurent& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& q) { return *this = *this * q; }

  friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
  friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }
  friend Laurent operator-(Laurent p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent r;
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : q.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < Vars; ++k) e[k] = e1[k] + e2[k];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }
  friend bool operator==(const Laurent& p, const Laurent& q) { return p.terms_ == q.terms_; }

  // Multiplies by the monomial with exponent e.
  Laurent shifted(const Exponent& e) const {
    Laurent r;
    for (const auto& [e1, c] : terms_) {
      Exponent s;
      for (std::size_t k = 0; k < Vars; ++k) s[k] = e1[k] + e[k];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  Laurent pow(unsigned n) const {
    Laurent r = 1;
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    static constexpr auto names = detail::variable_names<Vars>();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool constant = true;
      for (int x : e) constant = constant && x == 0;
      bool wrote = false;
      if (constant || mag != 1) {
        out << mag;
        wrote = true;
      }
      for (std::size_t k = 0; k < Vars; ++k) {
        if (e[k] == 0) continue;
        if (wrote) out << '*';
        out << names[k];
        if (e[k] != 1) out << '^' << e[k];
        wrote = true;
      }
    }
    return out.str();
  }

  // Parses the grammar produced by str(): signed sum of terms, each an
  // optional integer followed by '*'-joined powers of the variables.
  static Laurent parse(std::string_view text) {
    static constexpr auto names = detail::variable_names<Vars>();
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* what) {
      throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) +
                                  ": " + what + " in '" + std::string(text) + "'");
    };
    auto read_int = [&]() -> Integer {
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) fail("expected integer");
      return Integer(std::string(text.substr(start, i - start)));
    };

    Laurent result;
    skip();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip();
      if (i == text.size()) break;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Integer coeff = 1;
      Exponent e{};
      bool have_factor = false;
      while (true) {
        skip();
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          coeff *= read_int();
        } else {
          bool matched = false;
          for (std::size_t k = 0; k < Vars; ++k) {
            std::string_view n = names[k];
            if (text.substr(i, n.size()) == n) {
              i += n.size();
              skip();
              int power = 1;
              if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                power = static_cast<int>(read_int());
              }
              e[k] += power;
              matched = true;
              break;
            }
          }
          if (!matched) fail("expected factor");
        }
        have_factor = true;
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          continue;
        }
        break;
      }
      if (!have_factor) fail("empty term");
      result.add_term(e, sign * coeff);
    }
    return result;
  }

 private:
  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

using LaurentPoly1 = Laurent<1>;
using LaurentPoly2 = Laurent<2>;

template <std::size_t Vars>
std::ostream& operator<<(std::ostream& os, const Laurent<Vars>& p) {
  return os << p.str();
}

inline LaurentPoly1 zpow(int n) { return LaurentPoly1::monomial({n}); }
inline LaurentPoly2 monomial2(int z_exp, int a_exp, Integer c = 1) {
  return LaurentPoly2::monomial({z_exp, a_exp}, std::move(c));
}

/// Degree in a, with an explicit negative-infinity value for the zero polynomial.
class ADegree {
 public:
  static ADegree neg_infinity() { return ADegree(); }
  static ADegree of(int d) { return ADegree(d); }

  bool is_neg_infinity() const { return !value_; }
  int value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend bool operator==(const ADegree&, const ADegree&) = default;
  friend std::strong_ordering operator<=>(const ADegree& x, const ADegree& y) {
    if (!x.value_ || !y.value_) return bool(x.value_) <=> bool(y.value_);
    return *x.value_ <=> *y.value_;
  }
  friend bool operator==(const ADegree& x, int d) { return x.value_ && *x.value_ == d; }

  std::string str() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  ADegree() = default;
  explicit ADegree(int d) : value_(d) {}
  std::optional<int> value_;
};

/// The z-polynomial multiplying a^n.
inline LaurentPoly1 coeff_a(const LaurentPoly2& p, int n) {
  LaurentPoly1 r;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] == n) r += LaurentPoly1::monomial({e[0]}, c);
  }
  return r;
}

inline ADegree deg_a(const LaurentPoly2& p) {
  if (p.is_zero()) return ADegree::neg_infinity();
  // Terms are ordered by a-exponent descending.
  return ADegree::of(p.terms().begin()->first[1]);
}

/// p(z) * a^n as a two-variable polynomial.
inline LaurentPoly2 times_a_power(const LaurentPoly1& p, int n) {
  LaurentPoly2 r;
  for (const auto& [e, c] : p.terms()) r += monomial2(e[0], n, c);
  return r;
}

}  // namespace frontkit
