#include "umac/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <charconv>
#include <cmath>

namespace umac {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t p = parse_int(text.substr(0, slash), text);
  std::int64_t q = parse_int(text.substr(slash + 1), text);
  if (q == 0) throw ConfigError("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational inner(const QVec& a, const QVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec scaled(const QVec& a, const Rational& s) {
  QVec out(a);
  for (auto& x : out) x *= s;
  return out;
}

QVec add(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Rational mod(const Rational& r, std::int64_t m) {
  const std::int64_t d = r.denominator();
  const std::int64_t period = m * d;
  std::int64_t n = r.numerator() % period;
  if (n < 0) n += period;
  return Rational(n, d);
}

template <class Real>
Real sin_pi(const Rational& r) {
  // reduce to m/d in (-1, 1], then to [-1/2, 1/2] by sin(pi x) = sin(pi (1 - x))
  const std::int64_t d = r.denominator();
  std::int64_t m = r.numerator() % (2 * d);
  if (m > d) m -= 2 * d;
  if (m <= -d) m += 2 * d;
  if (m == 0 || m == d) return Real(0);
  if (2 * m > d) m = d - m;
  else if (2 * m < -d) m = -d - m;
  const Real pi = boost::math::constants::pi<Real>();
  using std::sin;
  return sin(pi * Real(m) / Real(d));
}

template double sin_pi<double>(const Rational&);
template long double sin_pi<long double>(const Rational&);
template boost::multiprecision::cpp_bin_float_50 sin_pi<boost::multiprecision::cpp_bin_float_50>(
    const Rational&);

std::complex<double> unit_phase(const Rational& r) {
  const Rational f = mod(r, 1);
  // exp(2 pi i f) = cos(2 pi f) + i sin(2 pi f), both via sin_pi for exact axes
  const double s = sin_pi<double>(2 * f);
  const double c = sin_pi<double>(2 * f + Rational(1, 2));
  return {c, s};
}

}  // namespace umac
