#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// boost 1.74 recurses forever on int/rational<int64_t> comparisons; exact overloads win
namespace boost {
#define UMAC_RATIONAL_INT_CMP(op)                                                      \
  inline bool operator op(const rational<std::int64_t>& a, int b) {                    \
    return a op rational<std::int64_t>(b);                                             \
  }                                                                                    \
  inline bool operator op(int a, const rational<std::int64_t>& b) {                    \
    return rational<std::int64_t>(a) op b;                                             \
  }
UMAC_RATIONAL_INT_CMP(==)
UMAC_RATIONAL_INT_CMP(!=)
UMAC_RATIONAL_INT_CMP(<)
UMAC_RATIONAL_INT_CMP(>)
UMAC_RATIONAL_INT_CMP(<=)
UMAC_RATIONAL_INT_CMP(>=)
#undef UMAC_RATIONAL_INT_CMP
}  // namespace boost

namespace umac {

using Rational = boost::rational<std::int64_t>;
using QVec = std::vector<Rational>;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// accepts "p/q" or an integer string; no decimals
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational inner(const QVec& a, const QVec& b);
QVec scaled(const QVec& a, const Rational& s);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);

// r mod m, result in [0, m)
Rational mod(const Rational& r, std::int64_t m);

// sin(pi r) with exact zeros and argument reduction done in rationals
template <class Real>
Real sin_pi(const Rational& r);

// exp(2 pi i r)
std::complex<double> unit_phase(const Rational& r);

}  // namespace umac
