// Sweeps, single-group summaries and engine self-tests, plus their
// JSON / CSV / markdown renderings.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/automorphism.hpp"
#include "twogroups/constructions.hpp"

namespace twogroups {

enum class OutputFormat { Json, Csv, Markdown };

std::optional<OutputFormat> parse_format(std::string_view s);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
  std::vector<Family> families;
  std::uint64_t max_order = std::uint64_t{1} << 12;
  EnumerationMode mode = EnumerationMode::Pruned;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  // false writes runtime_ms as 0 so reruns compare byte for byte
  bool timing = true;
};

// Throws ConfigError.
void check_config(SweepConfig const& cfg);

struct WitnessRow {
  GenMap map;
  std::optional<WitnessCase> matched;
};

struct SweepRow {
  FamilyGroup group;
  std::uint64_t center_order = 0;
  bool center_cyclic = false;
  std::uint64_t frattini_order = 0;
  std::uint64_t derived_order = 0;
  int d_z_phi = 0;
  bool star = false;
  std::uint64_t total = 0;
  std::uint64_t inner = 0;
  std::vector<WitnessRow> witnesses;
  std::int64_t runtime_ms = 0;
};

// (*) is predicted exactly for Q1(n,r) with r >= 2.
bool star_predicted(FamilyGroup const& G);

SweepRow analyze(FamilyGroup const& G, EnumerationOptions const& opts, bool timing = true);

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::vector<std::string> discrepancies;

  bool consistent() const { return discrepancies.empty(); }
};

// Rows ordered by (family, n, r) whatever the worker count.
SweepResult run_sweep(SweepConfig const& cfg);

std::string render(SweepResult const& result, OutputFormat fmt);
std::string render_row_json(SweepRow const& row);

// "1ii:m=1", "1iii-a2:m=0,s=1", "3i"
std::string case_label(WitnessCase const& wc);

struct GroupInfo {
  FamilyGroup group;
  std::uint64_t center_order = 0;
  bool center_cyclic = false;
  std::uint64_t frattini_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t omega1_center_order = 0;
  std::uint64_t center_frattini_order = 0;
  bool center_frattini_cyclic = false;
  int d_g = 0;
  int d_z_phi = 0;
  // C_G(Z(Phi(G))) = Phi(G)
  bool centralizer_equality = false;
};

GroupInfo group_info(FamilyGroup const& G);
std::string render(GroupInfo const& info, OutputFormat fmt);

std::string render(WitnessVerdict const& verdict, OutputFormat fmt);

struct SelfTest {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;
};

struct OracleConfig {
  std::uint64_t max_order = 512;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  // exhaustive associativity up to this order, sampled beyond it
  std::uint64_t exhaustive_order = 512;
  std::uint64_t samples = 1'000'000;
  // pruned vs brute up to this order
  std::uint64_t brute_order = std::uint64_t{1} << 10;
};

std::vector<SelfTest> run_oracle(OracleConfig const& cfg);
std::string render(std::vector<SelfTest> const& tests, OutputFormat fmt);

}  // namespace twogroups
