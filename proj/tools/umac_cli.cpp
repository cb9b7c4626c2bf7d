#include "umac/harness.hpp"
#include "umac/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw umac::ConfigError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary Macdonald polynomials on truncated cones: construction and verification"};
  std::string type = "A", pair = "self", g_short = "7/10", g_long = "11/20", suites = "all",
              precision = "double", out, golden, export_poly, export_op;
  int rank = 1, c = 2, threads = 1;
  bool allow_degenerate = false, do_sweep = false, update_golden = false;
  app.add_option("--type", type, "root system family A-G");
  app.add_option("--rank", rank, "rank");
  app.add_option("--pair", pair, "admissible pair: self or dual");
  app.add_option("--g-short", g_short, "multiplicity on short roots, p/q");
  app.add_option("--g-long", g_long, "multiplicity on long roots, p/q");
  app.add_option("--c", c, "truncation level");
  app.add_option("--suites", suites, "comma separated suites or 'all'");
  app.add_option("--precision", precision, "double or extended");
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--out", out, "report path ('-' for stdout)");
  app.add_flag("--allow-degenerate", allow_degenerate, "permit E7 with c a proper multiple of 6");
  app.add_option("--golden", golden, "golden report to compare against");
  app.add_flag("--update-golden", update_golden, "write the golden report instead of comparing");
  app.add_flag("--sweep", do_sweep, "run the default sweep over types, pairs, g and c");
  app.add_option("--export-polynomials", export_poly, "write the coefficient table of p_lam");
  app.add_option("--export-operator", export_op, "write the matrix of D for the quasi-minuscule weight");
  CLI11_PARSE(app, argc, argv);

  try {
    umac::RunConfig cfg;
    cfg.type = type;
    cfg.rank = rank;
    cfg.pair = umac::parse_dual_flag(pair);
    cfg.g_short = umac::parse_rational(g_short);
    cfg.g_long = umac::parse_rational(g_long);
    cfg.c = c;
    cfg.suites = umac::parse_suites(suites);
    cfg.precision = umac::parse_precision(precision);
    cfg.threads = threads;
    cfg.out = out;
    cfg.allow_degenerate = allow_degenerate;
    cfg.golden = golden;

    if (do_sweep) {
      auto configs = umac::default_sweep(cfg.suites);
      for (auto& x : configs) {
        x.threads = threads;
        x.precision = cfg.precision;
      }
      const json agg = umac::sweep(configs);
      write_text(out.empty() ? "-" : out, agg.dump(2) + "\n");
      return umac::report_passed(agg) ? 0 : 1;
    }

    cfg.validate();
    if (!export_poly.empty()) {
      umac::set_thread_count(threads);
      write_text(export_poly, umac::export_polynomials(umac::construct_macdonald(cfg.spec())));
    }
    if (!export_op.empty()) {
      umac::set_thread_count(threads);
      const umac::UnitarySpec s = cfg.spec();
      const auto cone = umac::TruncatedCone::build(s, umac::Side::hat);
      const auto op = umac::finite_operator(cone, s.Rhat().theta_labels());
      write_text(export_op, umac::export_operator(cone, op));
    }

    const json report = umac::run_verification(cfg);
    if (!out.empty()) write_text(out, report.dump(2) + "\n");
    std::cerr << cfg.label() << ": " << report["status"].get<std::string>() << "\n";
    for (const auto& [name, body] : report["suites"].items()) {
      std::cerr << "  " << name << ": " << body["status"].get<std::string>();
      if (body.contains("failed_checks")) std::cerr << " " << body["failed_checks"].dump();
      if (body.contains("error")) std::cerr << " (" << body["error"].get<std::string>() << ")";
      std::cerr << "\n";
    }
    bool ok = umac::report_passed(report);
    if (!golden.empty()) {
      if (update_golden) {
        write_text(golden, umac::golden_form(report).dump(2) + "\n");
      } else {
        std::ifstream in(golden);
        if (!in) throw umac::ConfigError("cannot read golden '" + golden + "'");
        const json expected = json::parse(in);
        const std::string d = umac::golden_diff(expected, report);
        if (!d.empty()) {
          std::cerr << "golden mismatch at " << d << "\n";
          ok = false;
        }
      }
    }
    return ok ? 0 : 1;
  } catch (const umac::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
