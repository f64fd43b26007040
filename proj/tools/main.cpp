#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "matchpow/io.hpp"
#include "matchpow/verify.hpp"

using namespace matchpow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;
constexpr int kExitCaps = 4;

struct CommonOpts {
  std::string field_spec = "q";
  bool json = false;
  int max_gens = 20;
  int max_vars = 64;
  unsigned long long seed = 1;
};

CoefficientField field_of(const CommonOpts& c) { return CoefficientField::parse(c.field_spec); }

BettiOptions betti_of(const CommonOpts& c) {
  BettiOptions b;
  b.max_gens = c.max_gens;
  return b;
}

MonomialIdeal load_ideal(const std::string& path, const CommonOpts& c) {
  auto parsed = parse_ideal_auto(read_input(path));
  if (parsed.changed_by_minimization)
    std::cerr << "note: input generators were not minimal; using G(I)\n";
  if (parsed.ideal.n() > c.max_vars)
    throw CapExceededError("ideal has more than --max-vars variables");
  return parsed.ideal;
}

ParsedGraph load_graph(const std::string& path, const CommonOpts& c) {
  auto g = parse_graph_auto(read_input(path));
  int n = 0;
  switch (g.kind) {
    case ParsedGraph::Kind::simple: n = g.simple->n(); break;
    case ParsedGraph::Kind::weighted_oriented: n = g.oriented->n(); break;
    case ParsedGraph::Kind::edge_weighted: n = g.edge_weighted->graph.n(); break;
  }
  if (n > c.max_vars) throw CapExceededError("graph has more than --max-vars vertices");
  return g;
}

void print_ideal(const MonomialIdeal& I, bool as_json) {
  if (as_json) {
    auto j = ideal_to_json(I);
    j["schema"] = 1;
    std::cout << j.dump() << "\n";
  } else if (I.is_zero()) {
    std::cout << "# zero ideal (no generators)\n";
  } else {
    std::cout << ideal_to_text(I);
  }
}

int emit_reports(const std::vector<CheckReport>& reports) {
  long holds = 0, violated = 0, hyp = 0, flagged = 0;
  for (const auto& r : reports) {
    std::cout << report_to_json(r).dump() << "\n";
    if (r.flagged) {
      ++flagged;
      std::cerr << "WARN " << r.check_id << ": " << r.detail << "\n";
    }
    switch (r.verdict) {
      case Verdict::holds: ++holds; break;
      case Verdict::violated: ++violated; break;
      case Verdict::hypothesis_not_met: ++hyp; break;
    }
  }
  std::cerr << "checks: " << reports.size() << "  holds: " << holds
            << "  violated: " << violated << "  hypothesis-not-met: " << hyp;
  if (flagged) std::cerr << "  flagged: " << flagged;
  std::cerr << "\n";
  return violated > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching powers of monomial ideals: invariants, structure tests, verification"};
  app.require_subcommand(1);
  CommonOpts common;

  // power
  auto* power = app.add_subcommand("power", "print G(I^[k]) in the ideal text format");
  std::string power_ideal;
  int power_k = 1;
  bool power_all = false;
  power->add_option("--ideal", power_ideal, "ideal file (text or JSON, - for stdin)")->required();
  power->add_option("-k", power_k, "which matching power");
  power->add_flag("--all-powers", power_all, "print every nonzero power");
  power->add_flag("--json", common.json);
  power->add_option("--max-vars", common.max_vars);

  // grade
  auto* grade = app.add_subcommand("grade", "print the monomial grade nu(I)");
  std::string grade_ideal;
  grade->add_option("--ideal", grade_ideal)->required();
  grade->add_flag("--json", common.json);
  grade->add_option("--max-vars", common.max_vars);

  // betti
  auto* betti = app.add_subcommand("betti", "Betti table, pd/depth/reg/indeg");
  std::string betti_ideal, betti_csv_path;
  bool betti_multigraded = false;
  betti->add_option("--ideal", betti_ideal)->required();
  betti->add_option("--field", common.field_spec, "q or fp:P (default q)");
  betti->add_flag("--multigraded", betti_multigraded, "include multigraded entries in JSON");
  betti->add_option("--csv", betti_csv_path, "also write the table as CSV");
  betti->add_flag("--json", common.json);
  betti->add_option("--max-gens", common.max_gens);
  betti->add_option("--max-vars", common.max_vars);

  // check
  auto* check = app.add_subcommand("check", "structure tests; exit code encodes the verdict");
  std::string check_ideal, check_test;
  bool check_witness = false;
  check->add_option("--ideal", check_ideal)->required();
  check->add_option("--test", check_test, "polymatroidal|matroidal|linquot|linres|linrel")
      ->required();
  check->add_flag("--witness", check_witness, "print certificate or counterexample");
  check->add_option("--field", common.field_spec);
  check->add_option("--max-gens", common.max_gens);
  check->add_option("--max-vars", common.max_vars);

  // graph
  auto* graph = app.add_subcommand("graph", "graph inputs: ideals and invariants");
  std::string graph_verb, graph_file;
  graph->add_option("verb", graph_verb, "ideal|nu|im|wim|blocks|lpath")->required();
  graph->add_option("--graph", graph_file, "graph JSON file")->required();
  graph->add_flag("--json", common.json);
  graph->add_option("--max-vars", common.max_vars);

  // verify
  auto* verify = app.add_subcommand("verify", "mechanical checks; JSON-line reports");
  std::string verify_what, verify_input;
  int verify_k = 0;
  verify->add_option("what", verify_what, "core|graph|linearity|examples")->required();
  verify->add_option("--input", verify_input, "ideal (core) or graph (graph/linearity) file");
  verify->add_option("-k", verify_k, "restrict to one k (default: all)");
  verify->add_option("--field", common.field_spec);
  verify->add_option("--seed", common.seed);
  verify->add_option("--max-gens", common.max_gens);
  verify->add_option("--max-vars", common.max_vars);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "run a family of instances through the checks");
  std::string scan_family = "random-monomial", scan_out;
  int scan_max_n = 6, scan_count = 100;
  scan_cmd->add_option("--family", scan_family,
                       "random-monomial|random-quadratic|random-weighted-oriented|"
                       "exhaustive-cactus|exhaustive-forest")
      ->required();
  scan_cmd->add_option("--max-n", scan_max_n);
  scan_cmd->add_option("--count", scan_count);
  scan_cmd->add_option("--seed", common.seed);
  scan_cmd->add_option("--out", scan_out, "directory for violation witnesses");
  scan_cmd->add_option("--field", common.field_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*power) {
      auto I = load_ideal(power_ideal, common);
      if (power_all) {
        if (I.is_zero()) {
          std::cout << "# zero ideal (no matching powers)\n";
          return kExitOk;
        }
        int nu = monomial_grade(I);
        for (int k = 1; k <= nu; ++k) {
          std::cout << "# k = " << k << "\n";
          print_ideal(matching_power(I, k), common.json);
        }
        return kExitOk;
      }
      if (I.is_zero()) {
        std::cout << "# zero ideal (no generators)\n";
        return kExitOk;
      }
      print_ideal(matching_power(I, power_k), common.json);
      return kExitOk;
    }

    if (*grade) {
      auto I = load_ideal(grade_ideal, common);
      int nu = I.is_zero() ? 0 : monomial_grade(I);
      if (common.json)
        std::cout << nlohmann::json{{"schema", 1}, {"nu", nu}}.dump() << "\n";
      else
        std::cout << nu << "\n";
      return kExitOk;
    }

    if (*betti) {
      auto I = load_ideal(betti_ideal, common);
      auto F = field_of(common);
      auto table = multigraded_betti(I, F, betti_of(common));
      auto inv = invariants_from_table(table, I);
      if (common.json) {
        auto j = betti_to_json(table, betti_multigraded);
        j["pd_quotient"] = inv.pd_quotient;
        j["depth_quotient"] = inv.depth_quotient;
        j["indeg"] = inv.indeg;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "field: " << F.label() << "\n" << betti_diagram(table);
        std::cout << "pd(I) = " << inv.pd_ideal << "   pd(S/I) = " << inv.pd_quotient
                  << "   depth(S/I) = " << inv.depth_quotient << "   reg(I) = " << inv.reg_ideal
                  << "   indeg(I) = " << inv.indeg << "\n";
        if (betti_multigraded)
          for (const auto& [key, dim] : table.multigraded) {
            std::cout << "beta_" << key.first << " @ " << to_string(Monomial(key.second), *I.ambient())
                      << " = " << dim << "\n";
          }
      }
      if (!betti_csv_path.empty()) {
        std::ofstream f(betti_csv_path);
        f << betti_csv(table);
      }
      return kExitOk;
    }

    if (*check) {
      auto I = load_ideal(check_ideal, common);
      if (I.is_zero()) throw InvalidArgumentError("check: zero ideal");
      bool verdict = false;
      std::string witness;
      if (check_test == "polymatroidal") {
        auto r = is_polymatroidal(I);
        verdict = r.value;
        witness = r.describe(I);
      } else if (check_test == "matroidal") {
        auto r = is_matroidal(I);
        verdict = r.value;
        witness = r.describe(I);
      } else if (check_test == "linrel") {
        auto r = is_linearly_related(I);
        verdict = r.value;
        witness = r.describe(I);
      } else if (check_test == "linres") {
        verdict = has_linear_resolution(I, field_of(common), betti_of(common));
        witness = verdict ? "reg equals the generating degree" : "reg exceeds the generating degree";
      } else if (check_test == "linquot") {
        auto r = has_linear_quotients(I);
        verdict = r.ordering.has_value();
        if (verdict) {
          witness = "ordering:";
          for (int i : *r.ordering) witness += " " + to_string(I.gens()[static_cast<size_t>(i)], *I.ambient());
          if (r.lex_certified) witness += " (lex)";
        } else {
          witness = "no admissible ordering";
        }
      } else {
        throw InvalidArgumentError("unknown --test: " + check_test);
      }
      std::cout << check_test << ": " << (verdict ? "true" : "false") << "\n";
      if (check_witness) std::cout << witness << "\n";
      return verdict ? kExitOk : kExitVerdictFalse;
    }

    if (*graph) {
      auto g = load_graph(graph_file, common);
      if (graph_verb == "ideal") {
        print_ideal(g.ideal(), common.json);
        return kExitOk;
      }
      auto simple = [&]() -> SimpleGraph {
        switch (g.kind) {
          case ParsedGraph::Kind::simple: return *g.simple;
          case ParsedGraph::Kind::weighted_oriented: return g.oriented->underlying();
          case ParsedGraph::Kind::edge_weighted: return g.edge_weighted->graph;
        }
        throw Error("unreachable");
      }();
      if (graph_verb == "nu") {
        std::cout << matching_number(simple) << "\n";
      } else if (graph_verb == "im") {
        std::cout << induced_matching_number(simple) << "\n";
      } else if (graph_verb == "wim") {
        if (g.kind != ParsedGraph::Kind::weighted_oriented)
          throw InvalidArgumentError("wim needs a directed graph");
        std::cout << weighted_induced_matching_number(*g.oriented) << "\n";
      } else if (graph_verb == "lpath") {
        std::cout << longest_induced_path(simple) << "\n";
      } else if (graph_verb == "blocks") {
        auto bs = block_structure(simple);
        if (common.json) {
          nlohmann::json j;
          j["schema"] = 1;
          j["has_even_cycle"] = bs.has_even_cycle;
          auto blocks = nlohmann::json::array();
          for (const auto& b : bs.blocks) {
            nlohmann::json bj;
            bj["kind"] = b.kind == Block::Kind::edge
                             ? "edge"
                             : b.kind == Block::Kind::odd_cycle ? "odd-cycle" : "other";
            std::vector<std::string> vs;
            for (int v : b.vertices) vs.push_back(simple.vertex_names()[static_cast<size_t>(v)]);
            bj["vertices"] = vs;
            blocks.push_back(bj);
          }
          j["blocks"] = blocks;
          std::cout << j.dump() << "\n";
        } else {
          for (const auto& b : bs.blocks) {
            std::cout << (b.kind == Block::Kind::edge
                              ? "edge"
                              : b.kind == Block::Kind::odd_cycle ? "odd-cycle" : "other")
                      << ":";
            for (int v : b.vertices) std::cout << " " << simple.vertex_names()[static_cast<size_t>(v)];
            std::cout << "\n";
          }
          std::cout << "even cycle: " << (bs.has_even_cycle ? "yes" : "no") << "\n";
        }
      } else {
        throw InvalidArgumentError("unknown graph verb: " + graph_verb);
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions vopt;
      vopt.field = field_of(common);
      vopt.betti = betti_of(common);
      vopt.seed = common.seed;
      std::vector<CheckReport> reports;
      if (verify_what == "examples") {
        reports = reproduce_examples(vopt);
      } else if (verify_what == "core") {
        if (verify_input.empty()) throw InvalidArgumentError("verify core needs --input");
        reports = verify_core(load_ideal(verify_input, common), vopt);
      } else if (verify_what == "graph" || verify_what == "linearity") {
        if (verify_input.empty()) throw InvalidArgumentError("verify needs --input");
        auto g = load_graph(verify_input, common);
        if (g.kind != ParsedGraph::Kind::weighted_oriented)
          throw InvalidArgumentError("verify " + verify_what + " needs a directed graph");
        int nu = matching_number(g.oriented->underlying());
        int klo = verify_k > 0 ? verify_k : 1;
        int khi = verify_k > 0 ? verify_k : nu;
        for (int k = klo; k <= khi; ++k) {
          auto batch = verify_what == "graph" ? verify_graph(*g.oriented, k, vopt)
                                              : verify_linearity(*g.oriented, k, vopt);
          reports.insert(reports.end(), batch.begin(), batch.end());
        }
      } else {
        throw InvalidArgumentError("unknown verify target: " + verify_what);
      }
      return emit_reports(reports);
    }

    if (*scan_cmd) {
      FamilySpec spec;
      spec.family = parse_family(scan_family);
      spec.max_n = scan_max_n;
      spec.count = scan_count;
      spec.seed = common.seed;
      spec.out_dir = scan_out;
      VerifyOptions vopt;
      vopt.field = field_of(common);
      vopt.seed = common.seed;
      auto sum = scan(spec, vopt);
      nlohmann::json j;
      j["schema"] = 1;
      j["family"] = family_name(spec.family);
      j["instances"] = sum.instances;
      j["checks"] = sum.checks;
      j["holds"] = sum.holds;
      j["violated"] = sum.violated;
      j["hypothesis_not_met"] = sum.hypothesis_not_met;
      j["flagged"] = sum.flagged;
      j["conjecture_checks"] = sum.conjecture_checks;
      j["conjecture_violations"] = sum.conjecture_violations;
      std::cout << j.dump() << "\n";
      if (sum.conjecture_violations > 0)
        std::cerr << "WARN conjecture-channel violations found: research findings, see --out\n";
      return sum.violated > 0 ? kExitViolation : kExitOk;
    }
  } catch (const CapExceededError& e) {
    std::cerr << "error (caps): " << e.what() << "\n";
    return kExitCaps;
  } catch (const ParseError& e) {
    std::cerr << "error (input): " << e.what() << "\n";
    return kExitUsage;
  } catch (const WeightError& e) {
    std::cerr << "error (weights): " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
