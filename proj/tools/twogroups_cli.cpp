#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "twogroups/report.hpp"

using namespace twogroups;

namespace {

struct GroupArgs {
  std::string family;
  int n = 0;
  std::optional<int> r;
};

void add_group_args(CLI::App* cmd, GroupArgs& g) {
  cmd->add_option("--family", g.family, "Q1, Q2 or R3")->required();
  cmd->add_option("--n", g.n, "parameter n")->required();
  cmd->add_option("--r", g.r, "parameter r (Q1, Q2)");
}

FamilyGroup build(GroupArgs const& g) {
  auto const f = parse_family(g.family);
  if (!f) throw ParameterError(fmt::format("unknown family '{}'", g.family));
  return make_group(*f, g.n, g.r);
}

OutputFormat format_or(std::string const& s, OutputFormat fallback) {
  if (s.empty()) return fallback;
  if (auto f = parse_format(s)) return *f;
  throw ConfigError(fmt::format("unknown format '{}'", s));
}

void emit(std::string const& text, std::string const& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError(fmt::format("cannot write {}", out));
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phi-fixing involutions of 2-generator class-2 2-groups with cyclic center"};
  app.require_subcommand(1);

  std::string format;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  GroupArgs info_args;
  auto* info = app.add_subcommand("info", "invariants of one group");
  add_group_args(info, info_args);

  std::vector<std::string> families{"Q1", "Q2", "R3"};
  std::uint64_t max_order = 4096;
  std::string mode = "pruned";
  bool no_timing = false;
  auto* sweep = app.add_subcommand("sweep", "check (*) for every group up to an order");
  sweep->add_option("--family", families, "comma separated families")->delimiter(',');
  sweep->add_option("--max-order", max_order, "largest group order")->capture_default_str();
  sweep->add_option("--mode", mode, "pruned or brute")->check(CLI::IsMember({"pruned", "brute"}));
  sweep->add_flag("--no-timing", no_timing, "write runtime_ms as 0");

  GroupArgs witness_args;
  std::string case_id;
  int m = 0;
  int s = 0;
  auto* witness = app.add_subcommand("check-witness", "verify one listed witness");
  witness->add_option("case", case_id, "1i 1ii 1iii-a1 1iii-a2 2i 2ii 2iii 3i 3ii")->required();
  add_group_args(witness, witness_args);
  witness->add_option("--m", m, "m in {0,1}");
  witness->add_option("--s", s, "s in {0,1}");

  std::uint64_t oracle_max = 512;
  auto* oracle = app.add_subcommand("oracle", "engine and enumeration self-tests");
  oracle->add_option("--max-order", oracle_max, "largest group order")->capture_default_str();

  for (auto* cmd : {info, sweep, witness, oracle}) {
    cmd->add_option("--format", format, "json, csv or md");
    cmd->add_option("--out", out, "write the report here");
  }
  for (auto* cmd : {sweep, oracle}) {
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "seed for sampled checks");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      emit(render(group_info(build(info_args)), format_or(format, OutputFormat::Markdown)), out);
      return 0;
    }
    if (*sweep) {
      SweepConfig cfg;
      for (auto const& name : families) {
        auto const f = parse_family(name);
        if (!f) throw ConfigError(fmt::format("unknown family '{}'", name));
        cfg.families.push_back(*f);
      }
      cfg.max_order = max_order;
      cfg.mode = mode == "brute" ? EnumerationMode::Brute : EnumerationMode::Pruned;
      cfg.jobs = jobs;
      cfg.format = format_or(format, OutputFormat::Json);
      cfg.seed = seed;
      cfg.timing = !no_timing;
      auto const result = run_sweep(cfg);
      emit(render(result, cfg.format), out);
      for (auto const& d : result.discrepancies) std::cerr << "discrepancy: " << d << "\n";
      return result.consistent() ? 0 : 1;
    }
    if (*witness) {
      auto const id = parse_case(case_id);
      if (!id) throw ConfigError(fmt::format("unknown case '{}'", case_id));
      auto const G = build(witness_args);
      if (!case_applies(*id, G) || m < 0 || m > 1 || s < 0 || s > 1)
        throw InapplicableCase(fmt::format("case {} (m={}, s={}) does not apply to {}", case_id,
                                           m, s, G.name()));
      auto const verdict = verify_witness({*id, m, s}, G);
      emit(render(verdict, format_or(format, OutputFormat::Markdown)), out);
      return verdict.passed() ? 0 : 1;
    }
    if (*oracle) {
      OracleConfig cfg;
      cfg.max_order = oracle_max;
      cfg.seed = seed;
      cfg.jobs = jobs;
      auto const tests = run_oracle(cfg);
      emit(render(tests, format_or(format, OutputFormat::Markdown)), out);
      return std::all_of(tests.begin(), tests.end(), [](SelfTest const& t) { return t.passed; })
                 ? 0
                 : 1;
    }
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "discrepancy: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
