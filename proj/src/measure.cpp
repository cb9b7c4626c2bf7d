#include "umac/measure.hpp"
#include "umac/parallel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <atomic>

namespace umac {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(); }
void set_thread_count(int n) { g_threads.store(std::max(1, n)); }

template <class Real>
Real delta_weight(const UnitarySpec& s, const Labels& lam) {
  const RootSystem& R = s.R();
  Real out(1);
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const int l = R.pairing(lam, a);
    if (l == 0) continue;
    const Rational u = s.pair().u(a);
    const Rational x = s.rho_pairing(a);
    const Rational g = s.g_of(a);
    out *= sin_pi<Real>(s.angle(u, x + l)) / sin_pi<Real>(s.angle(u, x));
    out *= pochhammer<Real>(s, u, x + g, l) / pochhammer<Real>(s, u, x + 1 - g, l);
  }
  return out;
}

template <class Real>
Real principal_specialization(const UnitarySpec& s, const Labels& lam) {
  const RootSystem& R = s.R();
  Real out(1);
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const int l = R.pairing(lam, a);
    if (l == 0) continue;
    const Rational u = s.pair().u(a);
    const Rational x = s.rho_pairing(a);
    out *= pochhammer<Real>(s, u, x + s.g_of(a), l) / pochhammer<Real>(s, u, x, l);
  }
  return out;
}

using Ext = boost::multiprecision::cpp_bin_float_50;
template double delta_weight<double>(const UnitarySpec&, const Labels&);
template Ext delta_weight<Ext>(const UnitarySpec&, const Labels&);
template double principal_specialization<double>(const UnitarySpec&, const Labels&);
template Ext principal_specialization<Ext>(const UnitarySpec&, const Labels&);

}  // namespace umac
