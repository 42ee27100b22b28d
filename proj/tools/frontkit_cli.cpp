// frontkit: command-line front for the invariant evaluators.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frontkit/frontkit.hpp"

using namespace frontkit;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kCrossingCap = 14;

// Exit codes: 0 ok, 1 verification disagreement, 2 bad input, 3 internal error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FrontFile load(const std::string& path) {
  try {
    return parse_front_file(slurp(path));
  } catch (const FrontError& e) {
    throw FrontError(e.code(), path + ": " + e.detail(), e.line(), e.column());
  }
}

OrientationChoices parse_orientation(const std::string& text, OrientationChoices base) {
  if (text.empty()) return base;
  return parse_front_file("orient: " + text + "\nl1 r1\n").orientation;
}

void check_cap(int crossings, bool force) {
  if (crossings > kCrossingCap && !force)
    throw UsageError("diagram has " + std::to_string(crossings) + " crossings (cap " + std::to_string(kCrossingCap) +
                     "); pass --force to evaluate anyway");
}

Json rulings_json(const std::vector<Ruling>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) {
    Json s = Json::array();
    for (int c : r.switches) s.push_back(c + 1);
    a.push_back(s);
  }
  return a;
}

Json invariants_json(const FrontInvariants& inv, int components) {
  return Json{{"schema", 1}, {"c", inv.c}, {"cr", inv.cr}, {"w", inv.w},
              {"beta", inv.beta}, {"r", inv.r}, {"components", components}};
}

Json record_json(const VerificationRecord& r, const std::string& theorem) {
  Json j{{"id", r.id}, {"word", r.word}, {"beta", r.inv.beta}, {"c", r.inv.c}, {"cr", r.inv.cr}};
  if (theorem == "3.1" || theorem == "all") {
    j["R"] = r.R.str();
    j["B_legskein"] = r.B_leg.str();
    j["B_toposkein"] = r.B_topo.str();
    j["agree_R_B_legskein"] = r.agree_R_Bleg;
    j["agree_R_B_toposkein"] = r.agree_R_Btopo;
  }
  if (theorem == "4.1" || theorem == "all") {
    Json o = Json::array();
    for (const auto& c : r.oriented)
      o.push_back(Json{{"orientation", c.orientation}, {"OR", c.OR.str()}, {"Q", c.Q.str()}, {"agree", c.agree}});
    j["oriented"] = o;
  }
  if (theorem == "corollaries" || theorem == "all") {
    j["deg_a_D"] = r.deg_a_D.str();
    j["deg_a_H"] = r.deg_a_H.str();
    j["kauffman_sharp"] = r.kauffman_sharp;
    j["homfly_sharp"] = r.homfly_sharp;
    j["homfly_bound_stronger"] = r.homfly_bound_stronger;
    j["degree_bounds"] = r.degree_bounds;
    j["homfly_sharp_implies_kauffman_sharp"] = r.sharpness_implication;
  }
  j["fixture_mismatches"] = r.fixture_mismatches;
  return j;
}

bool record_ok(const VerificationRecord& r, const std::string& theorem) {
  bool ok = r.fixture_mismatches.empty();
  if (theorem == "3.1" || theorem == "all") ok = ok && r.agree_R_Bleg && r.agree_R_Btopo;
  if (theorem == "4.1" || theorem == "all")
    for (const auto& c : r.oriented) ok = ok && c.agree;
  if (theorem == "corollaries" || theorem == "all") ok = ok && r.degree_bounds && r.sharpness_implication;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian front invariants: rulings, skein evaluators, theorem checks"};
  app.require_subcommand(1);

  std::string path, orient_text, which = "ruling", theorem = "all", apply_text, site_text, flavor = "down";
  bool oriented = false, list = false, force = false, trace = false, no_memo = false, write = false;
  std::size_t random_n = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> paths;

  auto* validate = app.add_subcommand("validate", "Parse and validate a .front file");
  validate->add_option("file", path)->required();

  auto* inv = app.add_subcommand("invariants", "Classical invariants as JSON");
  inv->add_option("file", path)->required();
  inv->add_option("--orient", orient_text, "orientation, e.g. 1=+,2=-");

  auto* rul = app.add_subcommand("rulings", "Rulings and the ruling polynomial");
  rul->add_option("file", path)->required();
  rul->add_flag("--oriented", oriented, "only oriented rulings");
  rul->add_flag("--list", list, "list the switch sets");
  rul->add_option("--orient", orient_text, "orientation, e.g. 1=+,2=-");

  auto* poly = app.add_subcommand("poly", "One polynomial of a front (or of a .pd diagram)");
  poly->add_option("file", path)->required();
  poly->add_option("--which", which, "ruling|oruling|B-leg|B-topo|Q|kauffman|homfly")
      ->check(CLI::IsMember({"ruling", "oruling", "B-leg", "B-topo", "Q", "kauffman", "homfly"}));
  poly->add_option("--orient", orient_text, "orientation, e.g. 1=+,2=-");
  poly->add_flag("--force", force, "evaluate diagrams above the crossing cap");
  poly->add_flag("--trace", trace, "B-leg: reduction steps as JSON lines on stderr");
  poly->add_flag("--no-memo", no_memo, "disable memoization");

  auto* ver = app.add_subcommand("verify", "Check the evaluators against each other over a corpus");
  ver->add_option("dir", path)->required();
  ver->add_option("--theorem", theorem, "3.1|4.1|corollaries|all")
      ->check(CLI::IsMember({"3.1", "4.1", "corollaries", "all"}));
  ver->add_flag("--force", force, "allow fronts above the crossing cap");

  auto* mov = app.add_subcommand("moves", "Apply Legendrian moves");
  mov->add_option("file", path)->required();
  mov->add_option("--apply", apply_text, "kind@site[:index][/variant], comma separated");
  mov->add_option("--random", random_n, "number of random moves");
  mov->add_option("--seed", seed, "seed for --random");
  mov->add_flag("--list", list, "list applicable moves instead");

  auto* stab = app.add_subcommand("stabilize", "Insert a zig-zag");
  stab->add_option("file", path)->required();
  stab->add_option("--site", site_text, "slot:position (slot 0 is before the first letter)")->required();
  stab->add_option("--flavor", flavor, "up|down")->check(CLI::IsMember({"up", "down"}));

  auto* pd = app.add_subcommand("pd", "PD code of the topological diagram");
  pd->add_option("file", path)->required();
  pd->add_option("--orient", orient_text, "orientation, e.g. 1=+,2=-");

  auto* fix = app.add_subcommand("fixtures", "Expected values from the exhaustive ruling checker");
  fix->add_option("files", paths)->required();
  fix->add_flag("--write", write, "rewrite the files with fresh fixture lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      FrontFile f = load(path);
      const FrontWord& w = f.word;
      std::cout << "ok: " << w.size() << " letters, " << w.crossings() << " crossings, " << w.left_cusps()
                << " left cusps, " << components(w).count << " components\n";
      return 0;
    }

    if (*inv) {
      FrontFile f = load(path);
      OrientedFront of = orient(f.word, parse_orientation(orient_text, f.orientation));
      std::cout << invariants_json(invariants(of), of.parts.count).dump(2) << "\n";
      return 0;
    }

    if (*rul) {
      FrontFile f = load(path);
      OrientedFront of = orient(f.word, parse_orientation(orient_text, f.orientation));
      auto rs = oriented ? enumerate_oriented_rulings(of) : enumerate_rulings(f.word);
      Json j{{"schema", 1},
             {"oriented", oriented},
             {"count", rs.size()},
             {"polynomial", generating_polynomial(rs, f.word.left_cusps()).str()}};
      if (list) j["rulings"] = rulings_json(rs);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*poly) {
      SkeinOptions sk;
      sk.memoize = !no_memo;
      if (fs::path(path).extension() == ".pd") {
        if (which != "kauffman" && which != "homfly") throw UsageError("a .pd file supports --which kauffman|homfly");
        PlanarDiagram d = parse_pd(slurp(path));
        check_cap(d.crossings(), force);
        std::cout << (which == "kauffman" ? kauffman_D(d, sk) : homfly_H(d, sk)).str() << "\n";
        return 0;
      }
      FrontFile f = load(path);
      OrientedFront of = orient(f.word, parse_orientation(orient_text, f.orientation));
      if (which == "ruling") {
        std::cout << ruling_polynomial(f.word, {!no_memo}).str() << "\n";
      } else if (which == "oruling") {
        std::cout << oriented_ruling_polynomial(of, {!no_memo}).str() << "\n";
      } else if (which == "B-leg") {
        ReductionTrace tr;
        EvaluateOptions eo;
        eo.memoize = !no_memo;
        if (trace) eo.trace = &tr;
        LaurentPoly1 b = evaluate_B(f.word, eo);
        for (std::size_t k = 0; k < tr.steps.size(); ++k) {
          const auto& s = tr.steps[k];
          std::cerr << Json{{"step", k}, {"frame", s.frame}, {"rule", s.rule}, {"site", s.site},
                            {"measure", {s.measure.L, s.measure.M, s.measure.N1, s.measure.N2}}}
                           .dump()
                    << "\n";
        }
        std::cout << b.str() << "\n";
      } else {
        check_cap(f.word.crossings(), force);
        if (which == "B-topo") std::cout << B_of(f.word, sk).str() << "\n";
        if (which == "Q") std::cout << Q_of(of, sk).str() << "\n";
        if (which == "kauffman") std::cout << kauffman_D(to_planar_diagram(of), sk).str() << "\n";
        if (which == "homfly") std::cout << homfly_H(to_planar_diagram(of), sk).str() << "\n";
      }
      return 0;
    }

    if (*ver) {
      auto corpus = load_corpus(path);
      for (const auto& e : corpus) check_cap(e.file.word.crossings(), force);
      Json recs = Json::array();
      bool ok = true;
      for (const auto& e : corpus) {
        VerificationRecord r = verify_front(e);
        ok = ok && record_ok(r, theorem);
        recs.push_back(record_json(r, theorem));
      }
      Json j{{"schema", 1}, {"theorem", theorem}, {"fronts", corpus.size()}, {"all_agree", ok}, {"records", recs}};
      std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*mov) {
      FrontFile f = load(path);
      OrientedFront of = orient(f.word, f.orientation);
      if (list) {
        for (auto k : {MoveKind::Commute, MoveKind::Type1Remove, MoveKind::Type1Insert, MoveKind::Type2Remove,
                       MoveKind::Type2Insert, MoveKind::Type3})
          for (const auto& m : applicable_moves(f.word, k)) std::cout << m.str() << "\n";
        return 0;
      }
      std::vector<Move> log;
      if (!apply_text.empty()) {
        std::stringstream ss(apply_text);
        for (std::string item; std::getline(ss, item, ',');) {
          Move m = parse_move(item);
          FrontWord next = apply_move(of.word, m);
          of = transport_orientation(of, m, next);
          log.push_back(m);
        }
      }
      if (random_n > 0) of = RandomMoveDriver(seed).walk(of, random_n, &log);
      std::vector<std::string> comments;
      std::string applied;
      for (const auto& m : log) applied += " " + m.str();
      if (!applied.empty()) comments.push_back(" moves:" + applied);
      std::cout << render_front_file(of.word, orientation_choices(of), comments);
      return 0;
    }

    if (*stab) {
      FrontFile f = load(path);
      auto colon = site_text.find(':');
      if (colon == std::string::npos) throw UsageError("--site expects slot:position");
      Segment s{static_cast<std::size_t>(std::stoul(site_text.substr(0, colon))), std::stoi(site_text.substr(colon + 1))};
      FrontWord w;
      try {
        w = stabilize(f.word, s, flavor == "up" ? StabilizationFlavor::Up : StabilizationFlavor::Down);
      } catch (const std::out_of_range& e) {
        throw UsageError(std::string(e.what()) + " (" + site_text + ")");
      }
      std::cout << render_front_file(w);
      return 0;
    }

    if (*pd) {
      FrontFile f = load(path);
      std::cout << to_pd(to_planar_diagram(orient(f.word, parse_orientation(orient_text, f.orientation)))) << "\n";
      return 0;
    }

    if (*fix) {
      for (const auto& p : paths) {
        FrontFile f = load(p);
        std::vector<std::string> comments;
        for (const auto& c : f.comments)
          if (c.find(" expect ") != 0) comments.push_back(c);
        for (auto& line : oracle_fixtures(f.word, f.orientation)) comments.push_back(line);
        if (write) {
          std::ofstream(p) << render_front_file(f.word, f.orientation, comments);
        } else {
          std::cout << "== " << p << "\n";
          for (const auto& c : comments) std::cout << "#" << c << "\n";
        }
      }
      return 0;
    }
  } catch (const FrontError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MoveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // FUEL_EXHAUSTED and INTERNAL_INCONSISTENCY land here verbatim.
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
