#include "umac/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace umac {

using nlohmann::json;

namespace {

double round2(double x) {
  if (!std::isfinite(x) || std::abs(x) < kGoldenNoiseFloor) return std::isfinite(x) ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return std::strtod(buf, nullptr);
}

json rounded(const json& j) {
  if (j.is_number_float()) return round2(j.get<double>());
  if (j.is_object()) {
    json o = json::object();
    for (const auto& [k, v] : j.items()) o[k] = rounded(v);
    return o;
  }
  if (j.is_array()) {
    json a = json::array();
    for (const auto& v : j) a.push_back(rounded(v));
    return a;
  }
  return j;
}

std::string diff_at(const json& a, const json& b, const std::string& path) {
  if (a.type() != b.type() && !(a.is_number() && b.is_number()))
    return path + ": type differs";
  if (a.is_object()) {
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k)) return path + "/" + k + ": missing";
      const std::string d = diff_at(v, b.at(k), path + "/" + k);
      if (!d.empty()) return d;
    }
    for (const auto& [k, v] : b.items())
      if (!a.contains(k)) return path + "/" + k + ": unexpected";
    return "";
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return path + ": length differs";
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string d = diff_at(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return "";
  }
  if (a.is_number() && b.is_number()) {
    if (a.get<double>() != b.get<double>())
      return path + ": " + a.dump() + " != " + b.dump();
    return "";
  }
  return a == b ? "" : path + ": " + a.dump() + " != " + b.dump();
}

}  // namespace

json golden_form(const json& report) {
  json j = report;
  j.erase("timings");
  if (j.contains("config")) j["config"].erase("threads");
  return rounded(j);
}

std::string golden_diff(const json& expected, const json& actual) {
  return diff_at(golden_form(expected), golden_form(actual), "");
}

}  // namespace umac
