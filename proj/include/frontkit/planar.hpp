#pragma once

// Planar diagrams: crossings with four ports in counter-clockwise order,
// joined pairwise by arcs. Built from fronts by smoothing cusps.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frontkit/front.hpp"

namespace frontkit {

/// Port 4c+k is the k-th port (counter-clockwise) of crossing c. The strands
/// through a crossing are ports {0,2} and {1,3}; the under strand is the one
/// whose ports have parity rot[c]. Switching a crossing flips rot only, so
/// port labels (and therefore traversals) do not move.
struct PlanarDiagram {
  std::vector<int> next;                // arc partner of each port
  std::vector<std::uint8_t> rot;        // per crossing
  std::vector<std::uint8_t> incoming;   // per port; consistent orientation when oriented
  int free_loops = 0;

  int crossings() const { return static_cast<int>(rot.size()); }
  static int crossing_of(int port) { return port / 4; }
  static int turn(int port, int k) { return port / 4 * 4 + (port % 4 + k) % 4; }
  bool is_under(int port) const { return port % 2 == rot[static_cast<std::size_t>(port / 4)]; }
  bool is_in(int port) const { return incoming[static_cast<std::size_t>(port)] != 0; }

  void switch_crossing(int c) { rot[static_cast<std::size_t>(c)] ^= 1; }

  /// +1 or -1 by the right-hand rule; needs a consistent orientation.
  int sign(int c) const {
    int u = 4 * c + rot[static_cast<std::size_t>(c)];
    if (!is_in(u)) u = turn(u, 2);
    int o = turn(u, 1);
    if (!is_in(o)) o = turn(o, 2);
    return o == turn(u, 3) ? 1 : -1;
  }

  int writhe() const {
    int w = 0;
    for (int c = 0; c < crossings(); ++c) w += sign(c);
    return w;
  }

  /// Arcs pair ports, and each strand through a crossing has one end in.
  bool valid() const {
    const int n = crossings();
    if (next.size() != static_cast<std::size_t>(4 * n) || incoming.size() != next.size()) return false;
    for (int p = 0; p < 4 * n; ++p) {
      int q = next[static_cast<std::size_t>(p)];
      if (q < 0 || q >= 4 * n || q == p || next[static_cast<std::size_t>(q)] != p) return false;
      if (is_in(p) == is_in(q)) return false;
      if (is_in(p) == is_in(turn(p, 2))) return false;
    }
    return free_loops >= 0;
  }

  /// Number of link components, free loops included.
  int link_components() const {
    std::vector<char> seen(next.size(), 0);
    int k = free_loops;
    for (std::size_t s = 0; s < next.size(); ++s) {
      if (seen[s]) continue;
      ++k;
      int p = static_cast<int>(s);
      while (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(turn(p, 2))] = 1;
        p = next[static_cast<std::size_t>(turn(p, 2))];
      }
    }
    return k;
  }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
};

/// Orients every strand afresh: from the lowest unvisited port, inward.
inline void reorient(PlanarDiagram& d) {
  std::vector<char> seen(d.next.size(), 0);
  for (std::size_t s = 0; s < d.next.size(); ++s) {
    if (seen[s]) continue;
    int p = static_cast<int>(s);
    while (!seen[static_cast<std::size_t>(p)]) {
      const int out = PlanarDiagram::turn(p, 2);
      seen[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(out)] = 1;
      d.incoming[static_cast<std::size_t>(p)] = 1;
      d.incoming[static_cast<std::size_t>(out)] = 0;
      p = d.next[static_cast<std::size_t>(out)];
    }
  }
}

/// Removes crossing c, joining its ports in the two given pairs (each pair
/// becomes a through-connection). Orientation flags of the remaining ports
/// are kept; they stay consistent when each pair joins an in to an out.
inline PlanarDiagram resolve(const PlanarDiagram& d, int c, std::pair<int, int> a, std::pair<int, int> b) {
  const int base = 4 * c;
  int partner[4];
  partner[a.first] = a.second;
  partner[a.second] = a.first;
  partner[b.first] = b.second;
  partner[b.second] = b.first;

  PlanarDiagram r = d;
  std::vector<char> used(4, 0);
  for (int k = 0; k < 4; ++k) {
    if (used[static_cast<std::size_t>(k)]) continue;
    // Chase outward from both ends of the through-connection k - partner[k].
    auto chase = [&](int from) -> int {
      int cur = from;
      while (true) {
        used[static_cast<std::size_t>(cur)] = 1;
        int o = d.next[static_cast<std::size_t>(base + cur)];
        if (PlanarDiagram::crossing_of(o) != c) return o;
        int inside = o - base;
        used[static_cast<std::size_t>(inside)] = 1;
        cur = partner[inside];
        if (used[static_cast<std::size_t>(cur)]) return -1;  // closed up inside c
      }
    };
    used[static_cast<std::size_t>(k)] = 1;
    int x = chase(partner[k]);
    if (x < 0) {
      ++r.free_loops;
      continue;
    }
    int y = chase(k);
    r.next[static_cast<std::size_t>(x)] = y;
    r.next[static_cast<std::size_t>(y)] = x;
  }

  // Drop crossing c by moving the last crossing into its slot.
  const int last = d.crossings() - 1;
  if (c != last) {
    for (int k = 0; k < 4; ++k) {
      int from = 4 * last + k, to = base + k;
      int o = r.next[static_cast<std::size_t>(from)];
      if (PlanarDiagram::crossing_of(o) == last) o = o - 4 * last + base;
      r.next[static_cast<std::size_t>(to)] = o;
      r.next[static_cast<std::size_t>(o)] = to;
      r.incoming[static_cast<std::size_t>(to)] = r.incoming[static_cast<std::size_t>(from)];
    }
    r.rot[static_cast<std::size_t>(c)] = r.rot[static_cast<std::size_t>(last)];
  }
  r.next.resize(static_cast<std::size_t>(4 * last));
  r.incoming.resize(static_cast<std::size_t>(4 * last));
  r.rot.resize(static_cast<std::size_t>(last));
  return r;
}

/// Smoothing that pairs port k with k+1 and k+2 with k+3 (k = 0 or 1).
inline PlanarDiagram smooth(const PlanarDiagram& d, int c, int k) {
  return resolve(d, c, {k, k + 1}, {(k + 2) % 4, (k + 3) % 4});
}

/// Erases crossing c, keeping both strands (used for curls).
inline PlanarDiagram erase_crossing(const PlanarDiagram& d, int c) { return resolve(d, c, {0, 2}, {1, 3}); }

/// A crossing two of whose adjacent ports are joined by an arc.
inline std::optional<int> find_curl(const PlanarDiagram& d) {
  for (int p = 0; p < static_cast<int>(d.next.size()); ++p) {
    const int q = d.next[static_cast<std::size_t>(p)];
    if (q == PlanarDiagram::turn(p, 1) || q == PlanarDiagram::turn(p, 3)) return PlanarDiagram::crossing_of(p);
  }
  return std::nullopt;
}

/// Splits a diagram into its connected pieces; free loops are not included.
inline std::vector<PlanarDiagram> connected_pieces(const PlanarDiagram& d) {
  const int n = d.crossings();
  detail::UnionFind uf(static_cast<std::size_t>(n));
  for (int p = 0; p < 4 * n; ++p)
    uf.unite(static_cast<std::size_t>(p / 4), static_cast<std::size_t>(d.next[static_cast<std::size_t>(p)] / 4));
  std::map<std::size_t, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[uf.find(static_cast<std::size_t>(c))].push_back(c);
  std::vector<PlanarDiagram> out;
  for (const auto& [root, members] : groups) {
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    PlanarDiagram piece;
    for (int c : members) {
      piece.rot.push_back(d.rot[static_cast<std::size_t>(c)]);
      for (int k = 0; k < 4; ++k) {
        int o = d.next[static_cast<std::size_t>(4 * c + k)];
        piece.next.push_back(4 * index[static_cast<std::size_t>(o / 4)] + o % 4);
        piece.incoming.push_back(d.incoming[static_cast<std::size_t>(4 * c + k)]);
      }
    }
    out.push_back(std::move(piece));
  }
  return out;
}

/// A code equal for diagrams that differ only by crossing numbering and by
/// rotating port labels. Orientation is included when `oriented`.
inline std::vector<int> canonical_code(const PlanarDiagram& d, bool oriented) {
  std::vector<std::vector<int>> pieces;
  for (const auto& piece : connected_pieces(d)) {
    const int n = piece.crossings();
    std::vector<int> best;
    for (int start = 0; start < 4 * n; ++start) {
      std::vector<int> id(static_cast<std::size_t>(n), -1), offset(static_cast<std::size_t>(n), 0), order;
      auto visit = [&](int port) {
        const int c = port / 4;
        if (id[static_cast<std::size_t>(c)] < 0) {
          id[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
          offset[static_cast<std::size_t>(c)] = port % 4;
          order.push_back(c);
        }
      };
      visit(start);
      std::vector<int> code;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const int c = order[i], e = offset[static_cast<std::size_t>(c)];
        code.push_back((piece.rot[static_cast<std::size_t>(c)] ^ (e & 1)) & 1);
        for (int k = 0; k < 4; ++k) {
          const int p = 4 * c + (e + k) % 4;
          const int o = piece.next[static_cast<std::size_t>(p)];
          visit(o);
          const int oc = o / 4;
          code.push_back(id[static_cast<std::size_t>(oc)]);
          code.push_back((o % 4 - offset[static_cast<std::size_t>(oc)] + 4) % 4);
          if (oriented) code.push_back(piece.incoming[static_cast<std::size_t>(p)]);
        }
        if (!best.empty() && code.size() <= best.size() &&
            std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(code.size()),
                                         code.begin(), code.end()))
          break;  // already worse than the best on a common prefix
      }
      if (best.empty() || code < best) best = std::move(code);
    }
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end());
  std::vector<int> out;
  for (const auto& p : pieces) {
    out.push_back(static_cast<int>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  out.push_back(-1);
  out.push_back(d.free_loops);
  return out;
}

// ---------------------------------------------------------------------------
// Top(K)

/// Top(K) with the stated under-strand choice per crossing (rot bits in word
/// order). At a front crossing x_m the ports are 0 = lower-left, 1 =
/// lower-right, 2 = upper-right, 3 = upper-left, so rot = 0 puts the strand
/// from the upper left to the lower right on top, as in a front.
inline PlanarDiagram planar_with_rot(const OrientedFront& of, const std::vector<std::uint8_t>& rots) {
  const FrontWord& w = of.word;
  const int n = w.crossings();
  if (rots.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("one rot bit per crossing expected");
  // Nodes: ports first, then one node per cusp; edges join dangling ends.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(4 * n));
  auto new_node = [&] {
    incident.emplace_back();
    return static_cast<int>(incident.size()) - 1;
  };
  auto join = [&](int a, int b) {
    incident[static_cast<std::size_t>(a)].push_back(static_cast<int>(edges.size()));
    incident[static_cast<std::size_t>(b)].push_back(static_cast<int>(edges.size()));
    edges.emplace_back(a, b);
  };

  PlanarDiagram d;
  d.rot = rots;
  d.incoming.assign(static_cast<std::size_t>(4 * n), 0);
  std::vector<int> pos;  // dangling node at each position (0-based)
  int c = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& t = w[k];
    const std::size_t i = static_cast<std::size_t>(t.index - 1);
    switch (t.kind) {
      case LetterKind::LeftCusp: {
        int v = new_node();
        pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(i), {v, v});
        break;
      }
      case LetterKind::RightCusp: {
        int v = new_node();
        join(v, pos[i]);
        join(v, pos[i + 1]);
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(i), pos.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
      case LetterKind::Crossing: {
        const int b = 4 * c;
        join(b + 3, pos[i]);
        join(b + 0, pos[i + 1]);
        pos[i] = b + 2;
        pos[i + 1] = b + 1;
        const bool upper_right = of.dir(k, t.index) == Direction::Right;
        const bool lower_right = of.dir(k, t.index + 1) == Direction::Right;
        d.incoming[static_cast<std::size_t>(b + 3)] = upper_right;
        d.incoming[static_cast<std::size_t>(b + 1)] = !upper_right;
        d.incoming[static_cast<std::size_t>(b + 0)] = lower_right;
        d.incoming[static_cast<std::size_t>(b + 2)] = !lower_right;
        ++c;
        break;
      }
    }
  }

  // Contract the cusp nodes away.
  d.next.assign(static_cast<std::size_t>(4 * n), -1);
  std::vector<char> seen(incident.size(), 0);
  for (int p = 0; p < 4 * n; ++p) {
    int cur = p, e = incident[static_cast<std::size_t>(p)][0];
    while (true) {
      auto [x, y] = edges[static_cast<std::size_t>(e)];
      int other = x == cur ? y : x;
      seen[static_cast<std::size_t>(other)] = 1;
      if (other < 4 * n) {
        d.next[static_cast<std::size_t>(p)] = other;
        break;
      }
      const auto& inc = incident[static_cast<std::size_t>(other)];
      e = inc[0] == e ? inc[1] : inc[0];
      cur = other;
    }
  }
  for (std::size_t v = static_cast<std::size_t>(4 * n); v < incident.size(); ++v) {
    if (seen[v]) continue;
    ++d.free_loops;
    // Mark the whole cusp cycle.
    std::size_t cur = v;
    int e = incident[v][0];
    while (!seen[cur]) {
      seen[cur] = 1;
      auto [x, y] = edges[static_cast<std::size_t>(e)];
      std::size_t other = static_cast<std::size_t>(static_cast<std::size_t>(x) == cur ? y : x);
      const auto& inc = incident[other];
      e = inc[0] == e ? inc[1] : inc[0];
      cur = other;
    }
  }
  return d;
}

/// Top(K): cusps smoothed, lesser slope on top.
inline PlanarDiagram to_planar_diagram(const OrientedFront& of) {
  return planar_with_rot(of, std::vector<std::uint8_t>(static_cast<std::size_t>(of.word.crossings()), 0));
}

// ---------------------------------------------------------------------------
// PD codes: X[i,j,k,l] lists arc labels counter-clockwise from the incoming
// under port; each free loop is written O[n] with its own label.

inline std::string to_pd(const PlanarDiagram& d) {
  const int n = d.crossings();
  std::vector<int> label(static_cast<std::size_t>(4 * n), 0);
  int next_label = 1;
  // Label arcs along the orientation, one component at a time, starting
  // with the arc into the component's first crossing. A component that is
  // over at exactly two crossings then still reads back with its direction.
  for (int s = 0; s < 4 * n; ++s) {
    if (label[static_cast<std::size_t>(s)] || !d.is_in(s)) continue;
    label[static_cast<std::size_t>(s)] = label[static_cast<std::size_t>(d.next[static_cast<std::size_t>(s)])] =
        next_label++;
    for (int out = PlanarDiagram::turn(s, 2); !label[static_cast<std::size_t>(out)];) {
      const int in = d.next[static_cast<std::size_t>(out)];
      label[static_cast<std::size_t>(out)] = label[static_cast<std::size_t>(in)] = next_label++;
      out = PlanarDiagram::turn(in, 2);
    }
  }
  std::ostringstream os;
  bool first = true;
  for (int c = 0; c < n; ++c) {
    int u = 4 * c + d.rot[static_cast<std::size_t>(c)];
    if (!d.is_in(u)) u = PlanarDiagram::turn(u, 2);
    os << (first ? "" : " ") << "X[";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[static_cast<std::size_t>(PlanarDiagram::turn(u, k))];
    os << ']';
    first = false;
  }
  for (int k = 0; k < d.free_loops; ++k) os << (first && k == 0 ? "" : " ") << "O[" << next_label++ << ']';
  return os.str();
}

class PdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PlanarDiagram parse_pd(const std::string& text) {
  static const std::regex item(R"(([XO])\s*[\[<]\s*([-0-9,\s]*?)\s*[\]>])");
  PlanarDiagram d;
  std::vector<std::array<int, 4>> quads;
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), item); it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    std::string gap = text.substr(consumed, static_cast<std::size_t>(mt.position()) - consumed);
    if (gap.find_first_not_of(" \t\r\n,;") != std::string::npos) throw PdError("PD parse error near '" + gap + "'");
    consumed = static_cast<std::size_t>(mt.position() + mt.length());
    std::vector<int> nums;
    std::string body = mt[2];
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream is(body);
    for (int v; is >> v;) nums.push_back(v);
    if (mt[1] == "O") {
      if (nums.size() > 1) throw PdError("O record takes at most one label");
      ++d.free_loops;
      continue;
    }
    if (nums.size() != 4) throw PdError("X record needs four labels");
    quads.push_back({nums[0], nums[1], nums[2], nums[3]});
  }
  if (text.substr(consumed).find_first_not_of(" \t\r\n,;") != std::string::npos)
    throw PdError("PD parse error: trailing input");

  const int n = static_cast<int>(quads.size());
  d.rot.assign(static_cast<std::size_t>(n), 0);
  d.next.assign(static_cast<std::size_t>(4 * n), -1);
  d.incoming.assign(static_cast<std::size_t>(4 * n), 0);
  std::map<int, std::vector<int>> ports_of;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) ports_of[quads[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]].push_back(4 * c + k);
  for (const auto& [lab, ps] : ports_of) {
    if (ps.size() != 2) throw PdError("arc label " + std::to_string(lab) + " must occur exactly twice");
    d.next[static_cast<std::size_t>(ps[0])] = ps[1];
    d.next[static_cast<std::size_t>(ps[1])] = ps[0];
  }

  // Orientation: port 0 of each quad is an incoming under port; the rest
  // follows along strands. Over-only strands fall back to label order.
  std::vector<int> known(static_cast<std::size_t>(4 * n), -1);
  auto propagate = [&](int port, bool in) {
    std::vector<std::pair<int, bool>> stack{{port, in}};
    while (!stack.empty()) {
      auto [p, v] = stack.back();
      stack.pop_back();
      int& slot = known[static_cast<std::size_t>(p)];
      if (slot >= 0) {
        if (slot != static_cast<int>(v)) throw PdError("PD orientation is inconsistent");
        continue;
      }
      slot = v;
      stack.push_back({PlanarDiagram::turn(p, 2), !v});
      stack.push_back({d.next[static_cast<std::size_t>(p)], !v});
    }
  };
  for (int c = 0; c < n; ++c) propagate(4 * c, true);
  for (int c = 0; c < n; ++c) {
    if (known[static_cast<std::size_t>(4 * c + 1)] >= 0) continue;
    const int j = quads[static_cast<std::size_t>(c)][1], l = quads[static_cast<std::size_t>(c)][3];
    const bool one_in = std::abs(j - l) == 1 ? j < l : j > l;
    propagate(4 * c + 1, one_in);
  }
  for (int p = 0; p < 4 * n; ++p) d.incoming[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(known[static_cast<std::size_t>(p)]);
  if (!d.valid()) throw PdError("PD code does not describe a valid diagram");
  return d;
}

}  // namespace frontkit
