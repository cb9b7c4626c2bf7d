#pragma once

#include "umac/polynomials.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace umac {

enum class Suite { orthogonality, norms, mass, duality, pieri, weyl, nondegeneracy, lemmas };
const char* to_string(Suite s);
Suite parse_suite(const std::string& s);
std::vector<Suite> all_suites();
// comma separated; "all" expands to every suite
std::vector<Suite> parse_suites(const std::string& list);

const char* to_string(Precision p);
Precision parse_precision(const std::string& s);

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  DualFlag pair = DualFlag::self;
  Rational g_short{7, 10};
  Rational g_long{11, 20};
  int c = 2;
  std::vector<Suite> suites = all_suites();
  Precision precision = Precision::double_precision;
  int threads = 1;
  std::string out;
  bool allow_degenerate = false;
  std::string golden;
  // negative control: Delta^ at this grid index is multiplied by perturb_factor
  std::optional<std::size_t> perturb_index;
  double perturb_factor = 1.0 + 1e-3;

  // rejects bad types, c <= 1, mixed simply-laced labels and the E7 exclusion
  void validate() const;
  UnitarySpec spec() const;
  std::string label() const;  // e.g. "B2/dual/g=7/10,11/20/c=3"

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

// the report of one run; "timings" holds wall-clock seconds per suite and is the only
// run-dependent field
nlohmann::json run_verification(const RunConfig& config);
bool report_passed(const nlohmann::json& report);

// report without timings and with floating values rounded to 2 significant digits;
// magnitudes below kGoldenNoiseFloor become 0
constexpr double kGoldenNoiseFloor = 1e-11;
nlohmann::json golden_form(const nlohmann::json& report);
// empty string when equal, else a description of the first difference
std::string golden_diff(const nlohmann::json& expected, const nlohmann::json& actual);

nlohmann::json sweep(const std::vector<RunConfig>& configs);
// classical types of rank <= 4 with G2 and F4, both pairs where distinct, three g pairs,
// c in {2, 3, 4}
std::vector<RunConfig> default_sweep(const std::vector<Suite>& suites);

}  // namespace umac
