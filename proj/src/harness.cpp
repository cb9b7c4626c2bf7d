#include "umac/harness.hpp"
#include "umac/mass_tables.hpp"
#include "umac/measure.hpp"
#include "umac/parallel.hpp"
#include "umac/weyl.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace umac {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "umac-report/1";
constexpr const char* kVersion = "1.0.0";

const std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::orthogonality, "orthogonality"}, {Suite::norms, "norms"},
    {Suite::mass, "mass"},                   {Suite::duality, "duality"},
    {Suite::pieri, "pieri"},                 {Suite::weyl, "weyl"},
    {Suite::nondegeneracy, "nondegeneracy"}, {Suite::lemmas, "lemmas"}};

// a finite double, or a string for inf/nan so the document stays valid JSON
json num(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

json labels_json(const Labels& l) { return json(l); }

struct Checker {
  json& out;
  bool ok = true;
  // value <= tol
  void at_most(const std::string& name, double value, double tol) {
    out[name] = num(value);
    out["tolerances"][name] = tol;
    if (!(value <= tol)) {
      ok = false;
      out["failed_checks"].push_back(name);
    }
  }
  void count_zero(const std::string& name, std::size_t value) {
    out[name] = value;
    if (value != 0) {
      ok = false;
      out["failed_checks"].push_back(name);
    }
  }
  void require(const std::string& name, bool value) {
    out[name] = value;
    if (!value) {
      ok = false;
      out["failed_checks"].push_back(name);
    }
  }
};

}  // namespace

const char* to_string(Suite s) {
  for (const auto& [k, n] : kSuiteNames)
    if (k == s) return n;
  return "?";
}

Suite parse_suite(const std::string& s) {
  for (const auto& [k, n] : kSuiteNames)
    if (s == n) return k;
  throw ConfigError("unknown suite '" + s + "'");
}

std::vector<Suite> all_suites() {
  std::vector<Suite> v;
  for (const auto& [k, n] : kSuiteNames) v.push_back(k);
  return v;
}

std::vector<Suite> parse_suites(const std::string& list) {
  std::vector<Suite> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item == "all") return all_suites();
    const Suite s = parse_suite(item);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  if (out.empty()) throw ConfigError("no suites selected");
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(Precision p) { return p == Precision::extended ? "extended" : "double"; }

Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::double_precision;
  if (s == "extended") return Precision::extended;
  throw ConfigError("precision must be 'double' or 'extended', got '" + s + "'");
}

void RunConfig::validate() const { (void)spec(); }

UnitarySpec RunConfig::spec() const {
  if (c <= 1) throw ConfigError("truncation level c must exceed 1, got " + std::to_string(c));
  if (threads < 1) throw ConfigError("threads must be positive");
  auto pair_ptr = AdmissiblePair::make(type, rank, pair);
  Multiplicity g{g_short, g_long};
  if (pair_ptr->R().simply_laced()) g.g_long = g.g_short;
  return UnitarySpec(pair_ptr, g, c, allow_degenerate);
}

std::string RunConfig::label() const {
  return type + std::to_string(rank) + "/" + umac::to_string(pair) + "/g=" + umac::to_string(g_short) +
         "," + umac::to_string(g_long) + "/c=" + std::to_string(c);
}

json RunConfig::to_json() const {
  json j;
  j["type"] = type;
  j["rank"] = rank;
  j["pair"] = umac::to_string(pair);
  j["g_short"] = umac::to_string(g_short);
  j["g_long"] = umac::to_string(g_long);
  j["c"] = c;
  j["suites"] = json::array();
  for (Suite s : suites) j["suites"].push_back(umac::to_string(s));
  j["precision"] = umac::to_string(precision);
  j["threads"] = threads;
  j["allow_degenerate"] = allow_degenerate;
  if (!out.empty()) j["out"] = out;
  if (!golden.empty()) j["golden"] = golden;
  if (perturb_index) {
    j["perturb_index"] = *perturb_index;
    j["perturb_factor"] = perturb_factor;
  }
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  try {
    c.type = j.at("type").get<std::string>();
    c.rank = j.at("rank").get<int>();
    c.pair = parse_dual_flag(j.at("pair").get<std::string>());
    c.g_short = parse_rational(j.at("g_short").get<std::string>());
    c.g_long = parse_rational(j.at("g_long").get<std::string>());
    c.c = j.at("c").get<int>();
    c.suites.clear();
    for (const auto& s : j.at("suites")) c.suites.push_back(parse_suite(s.get<std::string>()));
    c.precision = parse_precision(j.value("precision", "double"));
    c.threads = j.value("threads", 1);
    c.allow_degenerate = j.value("allow_degenerate", false);
    c.out = j.value("out", "");
    c.golden = j.value("golden", "");
    if (j.contains("perturb_index")) {
      c.perturb_index = j.at("perturb_index").get<std::size_t>();
      c.perturb_factor = j.value("perturb_factor", 1.0 + 1e-3);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad run configuration: ") + e.what());
  }
  return c;
}

namespace {

using Ext = boost::multiprecision::cpp_bin_float_50;

// state shared between the suites of one run
class Run {
 public:
  explicit Run(const RunConfig& cfg) : cfg_(cfg), spec_(cfg.spec()) {}

  const UnitarySpec& spec() const { return spec_; }

  const MacdonaldBasis& basis() {
    if (!basis_) basis_ = construct_macdonald(spec_);
    return *basis_;
  }
  const MacdonaldBasis& hat_basis() {
    if (!hat_basis_) hat_basis_ = construct_macdonald(spec_.swapped());
    return *hat_basis_;
  }
  const OrthogonalityData& data() {
    if (!data_) {
      data_ = orthogonality_data(spec_, cfg_.precision);
      if (cfg_.perturb_index) {
        if (*cfg_.perturb_index >= data_->delta_hat.size())
          throw ConfigError("perturbation index outside the grid");
        data_->delta_hat[*cfg_.perturb_index] *= cfg_.perturb_factor;
      }
    }
    return *data_;
  }

  bool mass(json& out);
  bool orthogonality(json& out);
  bool norms(json& out);
  bool duality(json& out);
  bool pieri(json& out);
  bool weyl(json& out);
  bool nondegeneracy(json& out);
  bool lemmas(json& out);

 private:
  const RunConfig& cfg_;
  UnitarySpec spec_;
  std::optional<MacdonaldBasis> basis_, hat_basis_;
  std::optional<OrthogonalityData> data_;
};

bool Run::mass(json& out) {
  Checker ck{out};
  const UnitarySpec& s = spec_;
  const RootSystem& R = s.R();
  const TruncatedCone primal = TruncatedCone::build(s, Side::primal);
  const TruncatedCone hat = TruncatedCone::build(s, Side::hat);
  const UnitarySpec sh = s.swapped();
  Ext n0(0), n0h(0);
  double min_delta = INFINITY;
  for (const auto& lam : primal.weights()) {
    const Ext v = delta_weight<Ext>(s, lam);
    n0 += v;
    min_delta = std::min(min_delta, static_cast<double>(v));
  }
  for (const auto& mu : hat.weights()) {
    const Ext v = delta_weight<Ext>(sh, mu);
    n0h += v;
    min_delta = std::min(min_delta, static_cast<double>(v));
  }
  double n0d = 0.0;
  for (const auto& lam : primal.weights()) n0d += delta_weight<double>(s, lam);
  const bool ext = cfg_.precision == Precision::extended;
  const double N0 = ext ? static_cast<double>(n0) : n0d;
  const Ext table_ext = Ext(R.index()) * table_Nc<Ext>(s);
  const double table = static_cast<double>(table_ext);
  out["N0"] = N0;
  out["N0_hat"] = static_cast<double>(n0h);
  out["N0_formula"] = table;
  out["index"] = R.index();
  out["min_delta"] = min_delta;
  const double rel = ext ? static_cast<double>(abs(n0 - table_ext) / table_ext)
                         : std::abs(n0d - table) / table;
  ck.at_most("mass_defect", rel, 1e-10);
  ck.at_most("dual_mass_defect", static_cast<double>(abs(n0 - n0h) / n0), 1e-10);
  ck.require("delta_positive", min_delta > 0);
  if (ncrhat_applies(s)) {
    const double nc = static_cast<double>(table_Nc<Ext>(s));
    ck.at_most("ncrhat_defect", std::abs(static_cast<double>(ncrhat_Nc<Ext>(s)) - nc) / nc, 1e-10);
    if (s.g().g_short == s.g().g_long)
      ck.at_most("exponent_defect", std::abs(static_cast<double>(exponent_Nc<Ext>(s)) - nc) / nc, 1e-10);
  }
  return ck.ok;
}

bool Run::orthogonality(json& out) {
  Checker ck{out};
  const MacdonaldBasis& b = basis();
  const OrthogonalityReport rep = orthogonality_check(b, data());
  out["condition"] = num(b.condition);
  out["min_gap"] = num(b.min_gap);
  out["operators"] = json::array();
  for (const auto& w : b.operators) out["operators"].push_back(labels_json(w));
  out["triangularity_defect"] = num(b.triangularity_defect);
  out["diagonal_defect"] = num(b.diagonal_defect);
  out["commutation_defect"] = num(b.commutation_defect);
  ck.count_zero("unresolved_pairs", b.unresolved.size());
  out["continued_pairs"] = b.continued.size();
  if (!b.continued.empty()) ck.at_most("continuation_error", b.continuation_error, 1e-9);
  ck.at_most("off_diagonal", rep.off_diagonal, 1e-8);
  ck.at_most("dual_off_diagonal", rep.dual_off_diagonal, 1e-8);
  ck.at_most("eigen_residual", b.eigen_residual, 1e-9);
  ck.at_most("specialization_defect", rep.specialization_defect, 1e-9);
  ck.require("specialization_positive", rep.min_specialization > 0);
  const MacdonaldBasis gs = gram_schmidt_macdonald(spec_);
  const double dev = max_coefficient_deviation(b, gs);
  if (spec_.R().rank() <= 3) ck.at_most("gram_schmidt_deviation", dev, 1e-8);
  else out["gram_schmidt_deviation"] = num(dev);
  return ck.ok;
}

bool Run::norms(json& out) {
  Checker ck{out};
  const OrthogonalityData& d = data();
  const OrthogonalityReport rep = orthogonality_check(basis(), d);
  out["N0"] = d.N0;
  ck.at_most("norm_residual", rep.norm_residual, 1e-8);
  ck.at_most("dual_norm_residual", rep.dual_norm_residual, 1e-8);
  const double table = static_cast<double>(Ext(spec_.R().index()) * table_Nc<Ext>(spec_));
  ck.at_most("N0_formula_defect", std::abs(d.N0 - table) / table, 1e-10);
  return ck.ok;
}

bool Run::duality(json& out) {
  Checker ck{out};
  const CMatrix S = s_matrix(basis(), data());
  const OrthogonalityData dh = orthogonality_data(spec_.swapped(), cfg_.precision);
  const CMatrix Sh = s_matrix(hat_basis(), dh);
  out["size"] = S.rows();
  ck.at_most("unitarity_defect", unitarity_defect(S), 1e-8);
  ck.at_most("dual_unitarity_defect", unitarity_defect(Sh), 1e-8);
  ck.at_most("duality_defect", duality_defect(S, Sh), 1e-8);
  return ck.ok;
}

bool Run::pieri(json& out) {
  Checker ck{out};
  const MacdonaldBasis& b = basis();
  double worst = 0.0;
  out["omegas"] = json::array();
  for (const auto& w : spec_.R().small_weights()) {
    const double r = pieri_residual(b, w);
    out["omegas"].push_back({{"omega", labels_json(w)},
                             {"class", to_string(spec_.R().classify(w))},
                             {"residual", num(r)}});
    worst = std::max(worst, r);
  }
  ck.at_most("pieri_residual", worst, 1e-8);
  std::size_t longest = 0;
  for (const auto& lam : b.primal.weights())
    longest = std::max(longest, quasi_minuscule_path(b.primal, lam).size());
  out["longest_path"] = longest;
  return ck.ok;
}

bool Run::weyl(json& out) {
  Checker ck{out};
  const WeylReport w = weyl_orthogonality_check(spec_.pair_ptr(), spec_.c());
  out["hbar"] = to_string(w.hbar);
  out["index"] = w.ind;
  out["index_pair"] = w.ind_pair;
  out["diagonal_expected"] = static_cast<double>(w.ind_pair) * w.norm;
  ck.at_most("off_diagonal", w.off_diagonal, 1e-8);
  ck.at_most("diagonal_defect", w.diagonal_defect, 1e-8);
  out["trig_identity_lhs"] = w.trig_identity_lhs;
  out["trig_identity_rhs"] = w.trig_identity_rhs;
  ck.at_most("trig_identity_defect", w.trig_identity_defect, 1e-8);
  out["trig_squared_defect"] = num(w.trig_squared_defect);
  return ck.ok;
}

bool Run::nondegeneracy(json& out) {
  Checker ck{out};
  const auto samples = regular_samples(spec_.pair_ptr(), spec_.c());
  out["samples"] = json::array();
  for (const auto& g : samples) out["samples"].push_back({to_string(g.g_short), to_string(g.g_long)});
  ck.require("three_samples", samples.size() == 3);
  const NondegeneracyReport rep =
      nondegeneracy_scan(spec_.pair_ptr(), spec_.c(), samples, cfg_.allow_degenerate);
  out["cone_size"] = rep.cone_size;
  out["min_gap"] = num(rep.min_gap);
  const RootSystem& R = spec_.R();
  if (R.family() == 'E' && R.rank() == 7 && spec_.c() % 6 == 0) {
    const E7LineReport e7 = e7_degeneration_check(rep, R, spec_.c());
    out["degenerate_pairs"] = e7.degenerate_pairs;
    out["c_tilde"] = e7.c_tilde;
    ck.count_zero("off_line", e7.off_line);
    ck.count_zero("inside_smaller_cone", e7.inside_smaller);
    ck.count_zero("below_level_bound", e7.below_bound);
  } else {
    ck.count_zero("separation_failures", rep.failures.size());
  }
  return ck.ok;
}

bool Run::lemmas(json& out) {
  Checker ck{out};
  const UnitarySpec& s = spec_;
  const TruncatedCone primal = TruncatedCone::build(s, Side::primal);
  const TruncatedCone hat = TruncatedCone::build(s, Side::hat);
  const UnitarySpec sh = s.swapped();
  std::size_t moment = 0;
  for (const auto& lam : primal.weights()) moment += !s.moment_bounds_hold(lam);
  for (const auto& mu : hat.weights()) moment += !sh.moment_bounds_hold(mu);
  ck.count_zero("moment_failures", moment);

  const bool regular = s.is_regular();
  out["regular"] = regular;
  double adj = 0.0, rec = 0.0, min_side = INFINITY;
  std::size_t boundary = 0, checked = 0, u_mismatch = 0, u_numerator = 0, omitted = 0, companion = 0;
  std::size_t omitted_regular = 0;
  double max_zero = 0.0, min_nonzero = INFINITY;
  for (const TruncatedCone* cone : {&hat, &primal}) {
    for (const auto& w : cone->R().small_weights()) {
      adj = std::max(adj, adjointness_residual(*cone, w));
      double side = 0.0;
      rec = std::max(rec, delta_recurrence_residual(*cone, w, &side));
      min_side = std::min(min_side, side);
      const BoundaryReport br = boundary_check(*cone, w);
      boundary += br.failures;
      checked += br.checked;
      max_zero = std::max(max_zero, br.max_zero_value);
      min_nonzero = std::min(min_nonzero, br.min_nonzero_value);
      const UVanishingReport ur = u_vanishing_check(*cone, w);
      u_mismatch += ur.criterion_mismatches;
      u_numerator += ur.numerator_failures;
      omitted += ur.denominator_zeros;
      if (cone->grid_spec().swapped().is_regular()) omitted_regular += ur.denominator_zeros;
      companion += ur.companion_cases;
    }
  }
  ck.at_most("adjointness_residual", adj, 1e-9);
  ck.at_most("recurrence_residual", rec, 1e-10);
  ck.require("recurrence_positive", min_side > 0);
  out["boundary_checked"] = checked;
  out["boundary_max_zero_factor"] = num(max_zero);
  out["boundary_min_nonzero_factor"] = num(min_nonzero);
  ck.count_zero("boundary_failures", boundary);
  out["u_omitted"] = omitted;
  out["u_companion_cases"] = companion;
  ck.count_zero("u_criterion_mismatches", u_mismatch);
  ck.count_zero("u_numerator_failures", u_numerator);
  out["regular_primal_side"] = sh.is_regular();
  ck.count_zero("u_omitted_at_regular_g", omitted_regular);
  return ck.ok;
}

}  // namespace

json run_verification(const RunConfig& config) {
  Run run(config);
  set_thread_count(config.threads);
  const UnitarySpec& s = run.spec();
  json report;
  report["schema"] = kSchema;
  report["version"] = kVersion;
  json cfg = config.to_json();
  cfg.erase("out");
  cfg.erase("golden");
  cfg["g_long"] = to_string(s.g().g_long);
  report["config"] = cfg;
  const TruncatedCone primal = TruncatedCone::build(s, Side::primal);
  const TruncatedCone hat = TruncatedCone::build(s, Side::hat);
  report["cone"] = {{"primal", primal.size()},
                    {"hat", hat.size()},
                    {"series", cone_size_series(cone_marks(s.pair()), s.c())}};
  report["spec"] = {{"h_g", to_string(s.h_g())},
                    {"period", to_string(s.period())},
                    {"regular", s.is_regular()},
                    {"truncation_defect", num(s.truncation_defect())}};

  const std::map<Suite, std::function<bool(json&)>> suites = {
      {Suite::mass, [&](json& o) { return run.mass(o); }},
      {Suite::orthogonality, [&](json& o) { return run.orthogonality(o); }},
      {Suite::norms, [&](json& o) { return run.norms(o); }},
      {Suite::duality, [&](json& o) { return run.duality(o); }},
      {Suite::pieri, [&](json& o) { return run.pieri(o); }},
      {Suite::weyl, [&](json& o) { return run.weyl(o); }},
      {Suite::nondegeneracy, [&](json& o) { return run.nondegeneracy(o); }},
      {Suite::lemmas, [&](json& o) { return run.lemmas(o); }}};

  bool all_ok = primal.size() == hat.size();
  report["suites"] = json::object();
  report["timings"] = json::object();
  for (Suite su : config.suites) {
    json out = json::object();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = suites.at(su)(out);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      out["error"] = e.what();
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out["status"] = ok ? "pass" : "fail";
    report["suites"][to_string(su)] = out;
    report["timings"][to_string(su)] = secs;
    all_ok = all_ok && ok;
  }
  report["status"] = all_ok ? "pass" : "fail";
  return report;
}

bool report_passed(const json& report) { return report.value("status", "fail") == "pass"; }

json sweep(const std::vector<RunConfig>& configs) {
  json agg;
  agg["schema"] = "umac-sweep/1";
  agg["runs"] = json::array();
  std::size_t passed = 0;
  for (const auto& cfg : configs) {
    json row;
    row["config"] = cfg.label();
    try {
      const json r = run_verification(cfg);
      row["status"] = r["status"];
      row["suites"] = json::object();
      for (const auto& [name, body] : r["suites"].items()) row["suites"][name] = body["status"];
    } catch (const std::exception& e) {
      row["status"] = "fail";
      row["error"] = e.what();
    }
    passed += row["status"] == "pass";
    agg["runs"].push_back(row);
  }
  agg["passed"] = passed;
  agg["failed"] = configs.size() - passed;
  agg["status"] = passed == configs.size() ? "pass" : "fail";
  return agg;
}

std::vector<RunConfig> default_sweep(const std::vector<Suite>& suites) {
  static const std::pair<const char*, int> types[] = {
      {"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"B", 4},
      {"C", 3}, {"C", 4}, {"D", 4}, {"G", 2}, {"F", 4}};
  static const std::pair<Rational, Rational> gs[] = {
      {Rational(7, 10), Rational(11, 20)}, {Rational(1), Rational(1)}, {Rational(1, 3), Rational(2, 5)}};
  std::vector<RunConfig> out;
  for (const auto& [t, n] : types) {
    const bool laced = RootSystem::build(t, n).simply_laced();
    for (DualFlag f : {DualFlag::self, DualFlag::dual}) {
      if (laced && f == DualFlag::dual) continue;
      for (const auto& [gsh, glo] : gs)
        for (int c = 2; c <= 4; ++c) {
          RunConfig cfg;
          cfg.type = t;
          cfg.rank = n;
          cfg.pair = f;
          cfg.g_short = gsh;
          cfg.g_long = laced ? gsh : glo;
          cfg.c = c;
          cfg.suites = suites;
          out.push_back(cfg);
        }
    }
  }
  return out;
}

}  // namespace umac
