#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperdyn/reports.hpp"
#include "hyperdyn/space_json.hpp"

namespace {

using hyperdyn::Json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw hyperdyn::InputError("cannot open input file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw hyperdyn::InputError(std::string("invalid JSON: ") + e.what());
  }
}

bool looks_like_system(const Json& doc) { return doc.is_object() && doc.contains("limits"); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<hyperdyn::Rational> parse_rational_list(const std::string& text) {
  std::vector<hyperdyn::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(hyperdyn::Rational::parse(item));
  if (out.empty()) throw hyperdyn::InputError("expected a comma-separated list of rationals");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"hyperdyn: hyper-expansiveness analysis on countable compact subsets of the line"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "emit a catalog space or tree as JSON");
  build->require_subcommand(1);
  std::string limits_arg;
  auto* b_theorem2 = build->add_subcommand("theorem2", "fixed limit points with alternating gap chains");
  b_theorem2->add_option("--limits", limits_arg, "comma-separated increasing rationals")->required();
  auto* b_translation = build->add_subcommand("translation", "index translation on {0} u {1/m}");
  int adj_depth = 0;
  long long adj_tail = 8;
  auto* b_adjacent = build->add_subcommand("adjacent", "adjacent-gap refinement tree");
  b_adjacent->add_option("--depth", adj_depth, "number of refinement stages (0..6)")->required();
  b_adjacent->add_option("--tail", adj_tail, "materialized terms per sequence (1..64)");
  std::vector<std::string> cycle_args;
  auto* b_finite = build->add_subcommand("finite", "finite space of periodic cycles");
  b_finite->add_option("--cycle", cycle_args, "cycle as comma-separated rationals (repeatable)")
      ->required();

  // analyze
  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "verdict/classification for a system, admissibility for a tree");
  analyze->add_option("--input", analyze_input, "input file (default: stdin)");

  // oracle
  std::string oracle_input, horizon_arg = "auto", assert_delta, curve_arg;
  int window_m = 2;
  bool nested = false;
  auto* oracle = app.add_subcommand("oracle", "brute-force separation constants on windows");
  oracle->add_option("--input", oracle_input, "input file (default: stdin)");
  oracle->add_option("--window", window_m, "window parameter M");
  oracle->add_option("--horizon", horizon_arg, "iteration horizon N, or 'auto'");
  oracle->add_flag("--nested", nested, "scan only nested pairs A strictly inside B");
  oracle->add_option("--assert-delta", assert_delta, "exit 1 when c falls below this rational");
  oracle->add_option("--curve", curve_arg, "window range M1..M2: one report per window");

  // export
  std::string export_input, export_format = "dot";
  auto* exp = app.add_subcommand("export", "orbit graph of a system");
  exp->add_option("--input", export_input, "input file (default: stdin)");
  exp->add_option("--format", export_format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (build->parsed()) {
    if (b_theorem2->parsed()) {
      emit(hyperdyn::space_to_json(hyperdyn::build_theorem2_system(parse_rational_list(limits_arg))));
    } else if (b_translation->parsed()) {
      emit(hyperdyn::space_to_json(hyperdyn::build_translation_example()));
    } else if (b_adjacent->parsed()) {
      hyperdyn::AdjacentExample ex =
          hyperdyn::build_adjacent_example(adj_depth, hyperdyn::BigInt(adj_tail));
      Json j;
      j["depth"] = ex.depth;
      j["tail"] = ex.tail.convert_to<long long>();
      j["stage_windows"] = Json::array();
      for (const auto& [lo, hi] : ex.stage_windows)
        j["stage_windows"].push_back(Json::array({lo.str(), hi.str()}));
      Json tree = hyperdyn::tree_to_json(ex.tree);
      j["roots"] = std::move(tree.at("roots"));
      emit(j);
    } else {
      std::vector<std::vector<hyperdyn::Rational>> cycles;
      for (const std::string& c : cycle_args) cycles.push_back(parse_rational_list(c));
      emit(hyperdyn::space_to_json(hyperdyn::build_finite_system(cycles)));
    }
    return 0;
  }

  if (analyze->parsed()) {
    Json doc = parse_json(read_input(analyze_input));
    if (looks_like_system(doc))
      emit(hyperdyn::system_report(hyperdyn::parse_space(doc)));
    else
      emit(hyperdyn::tree_report(hyperdyn::tree_from_json(doc)));
    return 0;
  }

  if (oracle->parsed()) {
    Json doc = parse_json(read_input(oracle_input));
    if (!looks_like_system(doc)) throw hyperdyn::InputError("the oracle runs on systems, not trees");
    hyperdyn::SymbolicSystem system = hyperdyn::parse_space(doc);
    auto horizon_for = [&](int M) -> long long {
      if (horizon_arg == "auto") return hyperdyn::auto_horizon(system, M);
      try {
        size_t pos = 0;
        long long n = std::stoll(horizon_arg, &pos);
        if (pos != horizon_arg.size() || n < 0) throw std::invalid_argument("");
        return n;
      } catch (...) {
        throw hyperdyn::InputError("horizon must be 'auto' or a nonnegative integer");
      }
    };
    std::vector<hyperdyn::SeparationReport> reports;
    if (!curve_arg.empty()) {
      auto dots = curve_arg.find("..");
      if (dots == std::string::npos)
        throw hyperdyn::InputError("curve range must look like M1..M2");
      int m1 = 0, m2 = 0;
      try {
        size_t p1 = 0, p2 = 0;
        std::string lo = curve_arg.substr(0, dots), hi = curve_arg.substr(dots + 2);
        m1 = std::stoi(lo, &p1);
        m2 = std::stoi(hi, &p2);
        if (p1 != lo.size() || p2 != hi.size()) throw std::invalid_argument("");
      } catch (...) {
        throw hyperdyn::InputError("curve range must look like M1..M2");
      }
      if (m1 < 1 || m2 < m1) throw hyperdyn::InputError("curve range must be increasing and >= 1");
      std::vector<std::pair<int, long long>> schedule;
      for (int m = m1; m <= m2; ++m) schedule.emplace_back(m, horizon_for(m));
      reports = hyperdyn::separation_curve(system, schedule, nested);
    } else {
      reports.push_back(
          hyperdyn::separation_constant(system, window_m, horizon_for(window_m), nested));
    }
    if (reports.size() == 1) {
      emit(hyperdyn::separation_report_to_json(reports[0]));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(hyperdyn::separation_report_to_json(r));
      emit(arr);
    }
    if (!assert_delta.empty()) {
      hyperdyn::Rational d = hyperdyn::Rational::parse(assert_delta);
      for (const auto& r : reports)
        if (r.c < d) {
          std::cerr << "separation constant " << r.c.str() << " fell below " << d.str()
                    << " at M=" << r.M << "\n";
          return 1;
        }
    }
    return 0;
  }

  if (exp->parsed()) {
    Json doc = parse_json(read_input(export_input));
    if (!looks_like_system(doc)) throw hyperdyn::InputError("graphs are for systems");
    hyperdyn::SymbolicSystem system = hyperdyn::parse_space(doc);
    if (export_format == "dot") {
      std::cout << hyperdyn::system_to_dot(system);
    } else if (export_format == "json") {
      Json j;
      j["analysis"] = hyperdyn::system_report(system);
      Json adjacency = Json::array();
      for (int c = 0; c < static_cast<int>(system.chains().size()); ++c) {
        const auto& ch = system.chains()[c];
        Json e;
        e["chain"] = ch.id;
        if (ch.kind == hyperdyn::OrbitChain::Kind::BiInfinite) {
          e["alpha"] = ch.alpha_id;
          e["omega"] = ch.omega_id;
          e["routes_to"] = system.chains()[system.route(c)].id;
        } else {
          Json cyc = Json::array();
          for (const auto& v : ch.cycle) cyc.push_back(v.str());
          e["cycle"] = std::move(cyc);
        }
        adjacency.push_back(std::move(e));
      }
      j["adjacency"] = std::move(adjacency);
      Json lm = Json::object();
      for (const auto& lp : system.limits()) lm[lp.id] = system.limit_perm().at(lp.id);
      j["limit_map"] = std::move(lm);
      emit(j);
    } else {
      throw hyperdyn::InputError("format must be dot or json");
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hyperdyn::ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const hyperdyn::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
