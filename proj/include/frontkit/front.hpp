#pragma once

// Front diagrams as words in the elementary tangles:
//   l<m>  a left cusp opening between strands m-1 and m (new strands m, m+1)
//   x<m>  a crossing of strands m and m+1
//   r<m>  a right cusp closing strands m and m+1
// Strand positions are numbered 1..N from the top (position 1 has the
// highest z-coordinate).

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frontkit {

enum class LetterKind : char { LeftCusp = 'l', Crossing = 'x', RightCusp = 'r' };

struct TangleLetter {
  LetterKind kind;
  int index;

  friend auto operator<=>(const TangleLetter&, const TangleLetter&) = default;

  std::string str() const { return std::string(1, static_cast<char>(kind)) + std::to_string(index); }
};

inline TangleLetter L(int m) { return {LetterKind::LeftCusp, m}; }
inline TangleLetter X(int m) { return {LetterKind::Crossing, m}; }
inline TangleLetter R(int m) { return {LetterKind::RightCusp, m}; }

enum class FrontErrorCode { UnknownToken, IndexOutOfRange, NotClosed, EmptyFront, BadHeader };

inline const char* to_string(FrontErrorCode c) {
  switch (c) {
    case FrontErrorCode::UnknownToken: return "UNKNOWN_TOKEN";
    case FrontErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case FrontErrorCode::NotClosed: return "NOT_CLOSED";
    case FrontErrorCode::EmptyFront: return "EMPTY_FRONT";
    case FrontErrorCode::BadHeader: return "BAD_HEADER";
  }
  return "?";
}

class FrontError : public std::runtime_error {
 public:
  FrontError(FrontErrorCode code, const std::string& detail, int line = 0, int column = 0)
      : std::runtime_error(format(code, detail, line, column)),
        code_(code),
        detail_(detail),
        line_(line),
        column_(column) {}

  FrontErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(FrontErrorCode code, const std::string& detail, int line, int column) {
    std::string s = to_string(code);
    if (line > 0) s += " at " + std::to_string(line) + ":" + std::to_string(column);
    return s + ": " + detail;
  }
  FrontErrorCode code_;
  std::string detail_;
  int line_;
  int column_;
};

/// Strand count after applying `letter` to `n` strands, or nullopt if the
/// index is out of range.
inline std::optional<int> apply_count(int n, const TangleLetter& letter) {
  switch (letter.kind) {
    case LetterKind::LeftCusp:
      if (letter.index < 1 || letter.index > n + 1) return std::nullopt;
      return n + 2;
    case LetterKind::Crossing:
      if (letter.index < 1 || letter.index > n - 1) return std::nullopt;
      return n;
    case LetterKind::RightCusp:
      if (letter.index < 1 || letter.index > n - 1) return std::nullopt;
      return n - 2;
  }
  return std::nullopt;
}

/// A validated closed front: strand count starts and ends at zero.
class FrontWord {
 public:
  FrontWord() : counts_{0} {}

  /// Throws FrontError (IndexOutOfRange / NotClosed) for invalid input.
  explicit FrontWord(std::vector<TangleLetter> letters) : letters_(std::move(letters)) {
    counts_.reserve(letters_.size() + 1);
    counts_.push_back(0);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      auto next = apply_count(counts_.back(), letters_[k]);
      if (!next) {
        throw FrontError(FrontErrorCode::IndexOutOfRange,
                         "letter " + std::to_string(k + 1) + " (" + letters_[k].str() + ") on " +
                             std::to_string(counts_.back()) + " strands");
      }
      counts_.push_back(*next);
    }
    if (counts_.back() != 0) {
      throw FrontError(FrontErrorCode::NotClosed,
                       "front ends with " + std::to_string(counts_.back()) + " open strands");
    }
  }

  static bool is_valid(const std::vector<TangleLetter>& letters) {
    int n = 0;
    for (const auto& t : letters) {
      auto next = apply_count(n, t);
      if (!next) return false;
      n = *next;
    }
    return n == 0;
  }

  const std::vector<TangleLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const TangleLetter& operator[](std::size_t k) const { return letters_[k]; }

  /// Strand count in slot s, i.e. before letter s (slot size() is after the last).
  int strands(std::size_t slot) const { return counts_[slot]; }
  const std::vector<int>& strand_counts() const { return counts_; }

  int count(LetterKind kind) const {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [kind](const TangleLetter& t) { return t.kind == kind; }));
  }
  int left_cusps() const { return count(LetterKind::LeftCusp); }
  int crossings() const { return count(LetterKind::Crossing); }

  /// Word positions of the crossing letters, in order (crossing ordinal -> word position).
  std::vector<std::size_t> crossing_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (letters_[k].kind == LetterKind::Crossing) out.push_back(k);
    }
    return out;
  }

  std::string str() const {
    std::string s;
    for (const auto& t : letters_) {
      if (!s.empty()) s += ' ';
      s += t.str();
    }
    return s;
  }

  friend bool operator==(const FrontWord& a, const FrontWord& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const FrontWord& a, const FrontWord& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<TangleLetter> letters_;
  std::vector<int> counts_;
};

inline std::ostream& operator<<(std::ostream& os, const FrontWord& w) { return os << w.str(); }

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;
};

inline std::vector<Token> tokenize(std::string_view text, int first_line = 1) {
  std::vector<Token> out;
  int line = first_line, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
    } else {
      Token t{"", line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        t.text += text[i++];
        ++col;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline TangleLetter parse_letter(const Token& tok) {
  const std::string& s = tok.text;
  auto bad = [&] { return FrontError(FrontErrorCode::UnknownToken, "'" + s + "'", tok.line, tok.column); };
  if (s.size() < 2 || (s[0] != 'l' && s[0] != 'x' && s[0] != 'r')) throw bad();
  if (!std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw bad();
  if (s.size() > 9) throw bad();
  return {static_cast<LetterKind>(s[0]), std::stoi(s.substr(1))};
}

inline FrontWord build_word(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw FrontError(FrontErrorCode::EmptyFront, "no letters");
  std::vector<TangleLetter> letters;
  int n = 0;
  for (const auto& tok : tokens) {
    TangleLetter t = parse_letter(tok);
    auto next = apply_count(n, t);
    if (!next) {
      throw FrontError(FrontErrorCode::IndexOutOfRange, t.str() + " on " + std::to_string(n) + " strands",
                       tok.line, tok.column);
    }
    n = *next;
    letters.push_back(t);
  }
  if (n != 0) {
    const auto& last = tokens.back();
    throw FrontError(FrontErrorCode::NotClosed, "front ends with " + std::to_string(n) + " open strands",
                     last.line, last.column);
  }
  return FrontWord(std::move(letters));
}

}  // namespace detail

/// Parses a whitespace-separated token stream `l<m> | x<m> | r<m>`.
inline FrontWord parse_front(std::string_view text) { return detail::build_word(detail::tokenize(text)); }

/// Per-component orientation choice: true reverses the default orientation.
using OrientationChoices = std::map<int, bool>;

struct FrontFile {
  FrontWord word;
  OrientationChoices orientation;  // component id (0-based) -> reversed
  std::vector<std::string> comments;
};

/// `.front` files: `#` comment lines, an optional `orient: 1=+,2=-` header
/// (1-based component ids; '-' reverses the default), then the token stream.
inline FrontFile parse_front_file(std::string_view text) {
  FrontFile file;
  std::string body;
  int body_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    std::string_view trimmed = first == std::string_view::npos ? std::string_view{} : line.substr(first);
    if (body_line == 0 && (trimmed.empty() || trimmed[0] == '#')) {
      if (!trimmed.empty()) file.comments.emplace_back(trimmed.substr(1));
    } else if (body_line == 0 && trimmed.substr(0, 7) == "orient:") {
      std::string spec(trimmed.substr(7));
      std::replace(spec.begin(), spec.end(), ',', ' ');
      std::istringstream in(spec);
      std::string item;
      while (in >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq + 2 != item.size() || (item[eq + 1] != '+' && item[eq + 1] != '-'))
          throw FrontError(FrontErrorCode::BadHeader, "orientation item '" + item + "'", line_no, 1);
        int id = 0;
        try {
          id = std::stoi(item.substr(0, eq));
        } catch (const std::exception&) {
          throw FrontError(FrontErrorCode::BadHeader, "orientation item '" + item + "'", line_no, 1);
        }
        if (id < 1) throw FrontError(FrontErrorCode::BadHeader, "component ids are 1-based", line_no, 1);
        file.orientation[id - 1] = item[eq + 1] == '-';
      }
    } else {
      if (body_line == 0) body_line = line_no;
      if (!trimmed.empty() && trimmed[0] == '#') {
        body += '\n';
      } else {
        body.append(line);
        body += '\n';
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  file.word = detail::build_word(detail::tokenize(body, body_line == 0 ? 1 : body_line));
  return file;
}

inline std::string render_front_file(const FrontWord& word, const OrientationChoices& orientation = {},
                                     const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) out += "#" + c + "\n";
  if (!orientation.empty()) {
    out += "orient:";
    bool first = true;
    for (const auto& [id, rev] : orientation) {
      out += first ? " " : ",";
      first = false;
      out += std::to_string(id + 1) + "=" + (rev ? "-" : "+");
    }
    out += "\n";
  }
  return out + word.str() + "\n";
}

// ---------------------------------------------------------------------------
// Strand segments, components, orientation.

/// A strand segment: position (1-based) within a slot between letters.
struct Segment {
  std::size_t slot;
  int position;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Dense per-slot table indexed by (slot, position).
template <typename T>
class SlotTable {
 public:
  SlotTable() = default;
  SlotTable(const FrontWord& w, T init) {
    rows_.reserve(w.size() + 1);
    for (int n : w.strand_counts()) rows_.emplace_back(static_cast<std::size_t>(n), init);
  }
  T& at(std::size_t slot, int position) { return rows_[slot][static_cast<std::size_t>(position - 1)]; }
  const T& at(std::size_t slot, int position) const { return rows_[slot][static_cast<std::size_t>(position - 1)]; }
  T& operator[](const Segment& s) { return at(s.slot, s.position); }
  const T& operator[](const Segment& s) const { return at(s.slot, s.position); }
  std::size_t slots() const { return rows_.size(); }
  const std::vector<T>& row(std::size_t slot) const { return rows_[slot]; }

 private:
  std::vector<std::vector<T>> rows_;
};

/// Calls f(from_position, to_position) for every strand passing through
/// `letter` without ending at a cusp; crossings report the swap.
template <typename F>
void for_each_through(const TangleLetter& t, int n_before, F&& f) {
  int m = t.index;
  switch (t.kind) {
    case LetterKind::Crossing:
      for (int p = 1; p <= n_before; ++p) f(p, p == m ? m + 1 : p == m + 1 ? m : p);
      break;
    case LetterKind::LeftCusp:
      for (int p = 1; p <= n_before; ++p) f(p, p < m ? p : p + 2);
      break;
    case LetterKind::RightCusp:
      for (int p = 1; p <= n_before; ++p) {
        if (p < m) f(p, p);
        else if (p > m + 1) f(p, p - 2);
      }
      break;
  }
}

struct ComponentPartition {
  SlotTable<int> component;  // component id of every segment
  int count = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Components of the front, numbered in order of their first left cusp.
inline ComponentPartition components(const FrontWord& w) {
  std::vector<std::size_t> offset(w.size() + 2, 0);
  for (std::size_t s = 0; s <= w.size(); ++s) offset[s + 1] = offset[s] + static_cast<std::size_t>(w.strands(s));
  auto id = [&](std::size_t slot, int p) { return offset[slot] + static_cast<std::size_t>(p - 1); };
  detail::UnionFind uf(offset.back());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    for_each_through(t, w.strands(k), [&](int from, int to) { uf.unite(id(k, from), id(k + 1, to)); });
    if (t.kind == LetterKind::LeftCusp) uf.unite(id(k + 1, t.index), id(k + 1, t.index + 1));
    if (t.kind == LetterKind::RightCusp) uf.unite(id(k, t.index), id(k, t.index + 1));
  }
  ComponentPartition out{SlotTable<int>(w, -1), 0};
  std::map<std::size_t, int> number;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].kind != LetterKind::LeftCusp) continue;
    std::size_t root = uf.find(id(k + 1, w[k].index));
    if (!number.count(root)) number.emplace(root, out.count++);
  }
  for (std::size_t s = 0; s <= w.size(); ++s)
    for (int p = 1; p <= w.strands(s); ++p) out.component.at(s, p) = number.at(uf.find(id(s, p)));
  return out;
}

enum class Direction : signed char { Left = -1, Right = 1 };

inline Direction reversed(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }

struct OrientedFront {
  FrontWord word;
  ComponentPartition parts;
  SlotTable<Direction> direction;

  int component_count() const { return parts.count; }
  Direction dir(std::size_t slot, int position) const { return direction.at(slot, position); }
  int component(std::size_t slot, int position) const { return parts.component.at(slot, position); }
};

namespace detail {

/// Propagates directions from seeded segments; direction is constant along
/// a strand and reverses through every cusp.
inline SlotTable<Direction> propagate(const FrontWord& w, const std::vector<std::pair<Segment, Direction>>& seeds) {
  SlotTable<std::optional<Direction>> dir(w, std::nullopt);
  for (const auto& [seg, d] : seeds) dir[seg] = d;
  bool changed = true;
  auto assign = [&](std::size_t s, int p, Direction d) {
    auto& slot = dir.at(s, p);
    if (!slot) {
      slot = d;
      changed = true;
    } else if (*slot != d) {
      throw std::logic_error("inconsistent orientation");
    }
  };
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto& t = w[k];
      for_each_through(t, w.strands(k), [&](int from, int to) {
        if (auto d = dir.at(k, from)) assign(k + 1, to, *d);
        if (auto d = dir.at(k + 1, to)) assign(k, from, *d);
      });
      std::size_t s = t.kind == LetterKind::LeftCusp ? k + 1 : k;
      if (t.kind != LetterKind::Crossing) {
        if (auto d = dir.at(s, t.index)) assign(s, t.index + 1, reversed(*d));
        if (auto d = dir.at(s, t.index + 1)) assign(s, t.index, reversed(*d));
      }
    }
  }
  SlotTable<Direction> out(w, Direction::Right);
  for (std::size_t s = 0; s <= w.size(); ++s) {
    for (int p = 1; p <= w.strands(s); ++p) {
      if (!dir.at(s, p)) throw std::logic_error("segment left unoriented");
      out.at(s, p) = *dir.at(s, p);
    }
  }
  return out;
}

}  // namespace detail

/// Orients every component. By default the upper strand at a component's
/// first left cusp travels right; `choices[c] == true` reverses component c.
inline OrientedFront orient(const FrontWord& w, const OrientationChoices& choices = {}) {
  ComponentPartition parts = components(w);
  std::vector<std::pair<Segment, Direction>> seeds;
  std::vector<bool> seeded(static_cast<std::size_t>(parts.count), false);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].kind != LetterKind::LeftCusp) continue;
    int c = parts.component.at(k + 1, w[k].index);
    if (seeded[static_cast<std::size_t>(c)]) continue;
    seeded[static_cast<std::size_t>(c)] = true;
    auto it = choices.find(c);
    bool rev = it != choices.end() && it->second;
    seeds.push_back({{k + 1, w[k].index}, rev ? Direction::Left : Direction::Right});
  }
  SlotTable<Direction> dirs = detail::propagate(w, seeds);
  return OrientedFront{w, std::move(parts), std::move(dirs)};
}

/// Orients from explicit segment directions (one or more per component).
inline OrientedFront orient_from_segments(const FrontWord& w,
                                          const std::vector<std::pair<Segment, Direction>>& seeds) {
  ComponentPartition parts = components(w);
  SlotTable<Direction> dirs = detail::propagate(w, seeds);
  return OrientedFront{w, std::move(parts), std::move(dirs)};
}

/// Orientation flags (relative to the default) that reproduce `of`.
inline OrientationChoices orientation_choices(const OrientedFront& of) {
  OrientationChoices out;
  std::vector<bool> seen(static_cast<std::size_t>(of.parts.count), false);
  const auto& w = of.word;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].kind != LetterKind::LeftCusp) continue;
    int c = of.component(k + 1, w[k].index);
    if (seen[static_cast<std::size_t>(c)]) continue;
    seen[static_cast<std::size_t>(c)] = true;
    out[c] = of.dir(k + 1, w[k].index) == Direction::Left;
  }
  return out;
}

/// Every combination of orientation choices for a link with `components` components.
inline std::vector<OrientationChoices> all_orientations(int components) {
  std::vector<OrientationChoices> out;
  for (unsigned mask = 0; mask < (1u << components); ++mask) {
    OrientationChoices c;
    for (int k = 0; k < components; ++k) c[k] = (mask >> k) & 1u;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical invariants.

struct FrontInvariants {
  int c = 0;     // left cusps
  int cr = 0;    // crossings
  int w = 0;     // writhe
  int beta = 0;  // Bennequin number, w - c
  int r = 0;     // rotation number

  friend bool operator==(const FrontInvariants&, const FrontInvariants&) = default;
};

/// +1 when the two strands at crossing letter k travel the same horizontal direction.
inline int crossing_sign(const OrientedFront& of, std::size_t k) {
  int m = of.word[k].index;
  return of.dir(k, m) == of.dir(k, m + 1) ? 1 : -1;
}

inline FrontInvariants invariants(const OrientedFront& of) {
  FrontInvariants inv;
  int down = 0, up = 0;
  const auto& w = of.word;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    switch (t.kind) {
      case LetterKind::LeftCusp:
        ++inv.c;
        // Upper strand travelling right leaves the cusp upward.
        (of.dir(k + 1, t.index) == Direction::Right ? up : down) += 1;
        break;
      case LetterKind::RightCusp:
        (of.dir(k, t.index) == Direction::Right ? down : up) += 1;
        break;
      case LetterKind::Crossing:
        ++inv.cr;
        inv.w += crossing_sign(of, k);
        break;
    }
  }
  inv.beta = inv.w - inv.c;
  inv.r = (down - up) / 2;
  return inv;
}

// ---------------------------------------------------------------------------
// Stabilization.

enum class StabilizationFlavor { Up, Down };

/// Adds a zig-zag on the strand at (slot, position). Down inserts
/// `l<p+1> r<p>` (the strand continues along the lower edge of the new
/// cusp pair); Up inserts `l<p> r<p+1>`.
inline FrontWord stabilize(const FrontWord& w, Segment site, StabilizationFlavor flavor) {
  if (site.slot > w.size() || site.position < 1 || site.position > w.strands(site.slot))
    throw std::out_of_range("stabilization site is not a strand segment");
  auto letters = w.letters();
  int p = site.position;
  std::vector<TangleLetter> zig = flavor == StabilizationFlavor::Down
                                      ? std::vector<TangleLetter>{L(p + 1), R(p)}
                                      : std::vector<TangleLetter>{L(p), R(p + 1)};
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(site.slot), zig.begin(), zig.end());
  return FrontWord(std::move(letters));
}

}  // namespace frontkit
