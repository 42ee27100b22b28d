#pragma once

// Corpus checks: every evaluator run independently on each front, with
// results compared exactly and against the fixture lines in the file.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "frontkit/front.hpp"
#include "frontkit/legskein.hpp"
#include "frontkit/poly.hpp"
#include "frontkit/rulings.hpp"
#include "frontkit/toposkein.hpp"

namespace frontkit {

struct CorpusEntry {
  std::string id;  // file stem
  std::filesystem::path path;
  FrontFile file;
  std::map<std::string, std::string> expect;  // fixture key -> value text
};

/// Fixture lines look like `# expect R: 2 + z^2` or `# expect OR[1=+,2=-]: z^-1`.
inline std::map<std::string, std::string> parse_fixtures(const std::vector<std::string>& comments) {
  std::map<std::string, std::string> out;
  for (const auto& line : comments) {
    auto start = line.find_first_not_of(' ');
    if (start == std::string::npos || line.compare(start, 7, "expect ") != 0) continue;
    auto colon = line.find(':', start);
    if (colon == std::string::npos) continue;
    std::string key = line.substr(start + 7, colon - start - 7);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(' '));
    if (auto bracket = value.find("  ["); bracket != std::string::npos) value.erase(bracket);
    value.erase(value.find_last_not_of(' ') + 1);
    out[key] = value;
  }
  return out;
}

inline CorpusEntry load_front(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  CorpusEntry e;
  e.id = path.stem().string();
  e.path = path;
  e.file = parse_front_file(ss.str());
  e.expect = parse_fixtures(e.file.comments);
  return e;
}

/// All `.front` files of a directory, ordered by id.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> out;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".front") out.push_back(load_front(f.path()));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

/// "1=+,2=-" style text for orientation choices (1-based ids).
inline std::string orientation_label(const OrientationChoices& ch) {
  std::string s;
  for (const auto& [id, rev] : ch) s += (s.empty() ? "" : ",") + std::to_string(id + 1) + (rev ? "=-" : "=+");
  return s;
}

struct OrientedCheck {
  std::string orientation;
  LaurentPoly1 OR, Q;
  bool agree = false;
};

struct VerificationRecord {
  std::string id;
  std::string word;
  FrontInvariants inv;
  LaurentPoly1 R, B_leg, B_topo;
  bool agree_R_Bleg = false, agree_R_Btopo = false;
  std::vector<OrientedCheck> oriented;  // one per orientation choice
  bool kauffman_sharp = false, homfly_sharp = false, homfly_bound_stronger = false;
  ADegree deg_a_D = ADegree::neg_infinity(), deg_a_H = ADegree::neg_infinity();
  bool degree_bounds = false;       // deg_a D <= c-1 and deg_a H <= c-1
  bool sharpness_implication = false;  // homfly_sharp implies kauffman_sharp
  std::vector<std::string> fixture_mismatches;
  double seconds = 0;

  bool ok() const {
    bool all = agree_R_Bleg && agree_R_Btopo && degree_bounds && sharpness_implication && fixture_mismatches.empty();
    for (const auto& o : oriented) all = all && o.agree;
    return all;
  }
};

struct VerificationReport {
  std::vector<VerificationRecord> records;
  bool ok() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
  }
};

inline VerificationRecord verify_front(const CorpusEntry& e) {
  const auto t0 = std::chrono::steady_clock::now();
  const FrontWord& w = e.file.word;
  VerificationRecord r;
  r.id = e.id;
  r.word = w.str();
  const OrientedFront of = orient(w, e.file.orientation);
  r.inv = invariants(of);

  r.R = ruling_polynomial(w);
  r.B_leg = evaluate_B(w);
  r.B_topo = B_of(w);
  r.agree_R_Bleg = r.R == r.B_leg;
  r.agree_R_Btopo = r.R == r.B_topo;

  for (const auto& ch : all_orientations(of.parts.count)) {
    const OrientedFront o = orient(w, ch);
    OrientedCheck c{orientation_label(ch), oriented_ruling_polynomial(o), Q_of(o)};
    c.agree = c.OR == c.Q;
    r.oriented.push_back(std::move(c));
  }

  const SharpnessReport s = sharpness(of);
  r.kauffman_sharp = s.kauffman_sharp;
  r.homfly_sharp = s.homfly_sharp;
  r.homfly_bound_stronger = s.homfly_bound_stronger;
  r.deg_a_D = s.deg_a_D;
  r.deg_a_H = s.deg_a_H;
  r.degree_bounds = s.deg_a_D <= ADegree::of(r.inv.c - 1) && s.deg_a_H <= ADegree::of(r.inv.c - 1);
  r.sharpness_implication = !s.homfly_sharp || s.kauffman_sharp;

  auto check = [&](const std::string& key, const std::string& actual) {
    auto it = e.expect.find(key);
    if (it != e.expect.end() && it->second != actual)
      r.fixture_mismatches.push_back(key + ": expected " + it->second + ", got " + actual);
  };
  check("R", r.R.str());
  check("beta", std::to_string(r.inv.beta));
  for (const auto& o : r.oriented) check("OR[" + o.orientation + "]", o.OR.str());

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline VerificationReport verify_corpus(const std::vector<CorpusEntry>& corpus) {
  VerificationReport rep;
  for (const auto& e : corpus) rep.records.push_back(verify_front(e));
  return rep;
}

/// Fixture lines computed by the exhaustive ruling checker.
inline std::vector<std::string> oracle_fixtures(const FrontWord& w, const OrientationChoices& orientation = {}) {
  const std::string tag = "  [exhaustive is_ruling over all crossing subsets]";
  std::vector<std::string> out;
  const int c = w.left_cusps();
  out.push_back(" expect R: " + generating_polynomial(brute_force_rulings(w), c).str() + tag);
  const OrientedFront of = orient(w, orientation);
  out.push_back(" expect beta: " + std::to_string(invariants(of).beta) + "  [writhe minus left cusps]");
  for (const auto& ch : all_orientations(of.parts.count)) {
    const OrientedFront o = orient(w, ch);
    out.push_back(" expect OR[" + orientation_label(ch) + "]: " +
                  generating_polynomial(brute_force_rulings(w, &o), c).str() + tag);
  }
  return out;
}

}  // namespace frontkit
