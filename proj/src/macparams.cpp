#include "umac/macparams.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace umac {

const char* to_string(DualFlag f) { return f == DualFlag::self ? "self" : "dual"; }

DualFlag parse_dual_flag(const std::string& s) {
  if (s == "self") return DualFlag::self;
  if (s == "dual") return DualFlag::dual;
  throw ConfigError("pair must be 'self' or 'dual', got '" + s + "'");
}

AdmissiblePair::AdmissiblePair(RootSystem R, DualFlag flag) : flag_(flag) {
  R_ = std::make_shared<const RootSystem>(std::move(R));
  Rhat_ = flag == DualFlag::self ? R_ : std::make_shared<const RootSystem>(R_->dual());
  const int np = R_->num_positive_roots();
  hat_.assign(np, -1);
  hat_inv_.assign(np, -1);
  for (int a = 0; a < np; ++a) {
    QVec image = R_->root(a);
    if (flag == DualFlag::dual) image = scaled(image, Rational(2) / R_->norm2(a));
    auto hit = Rhat_->find_root(image);
    if (!hit || hit->second != 1) throw InvariantViolation("hat map does not preserve positivity");
    hat_[a] = hit->first;
    hat_inv_[hit->first] = a;
  }
  for (int a = 0; a < np; ++a) {
    u_.push_back(flag == DualFlag::self ? R_->norm2(a) / 2 : Rational(1));
    class_.push_back(R_->is_short(a) ? RootClass::short_class : RootClass::long_class);
  }
  const int n = R_->rank();
  gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i][j] = inner(R_->fundamental_weights()[i], Rhat_->fundamental_weights()[j]);
}

std::shared_ptr<const AdmissiblePair> AdmissiblePair::make(const std::string& family, int rank,
                                                           DualFlag flag) {
  return std::make_shared<const AdmissiblePair>(RootSystem::build(family, rank), flag);
}

std::shared_ptr<const AdmissiblePair> AdmissiblePair::swapped() const {
  auto out = std::shared_ptr<AdmissiblePair>(new AdmissiblePair());
  out->R_ = Rhat_;
  out->Rhat_ = R_;
  out->flag_ = flag_;
  out->hat_ = hat_inv_;
  out->hat_inv_ = hat_;
  const int np = static_cast<int>(hat_.size());
  out->u_.resize(np);
  out->class_.resize(np);
  for (int b = 0; b < np; ++b) {
    out->u_[b] = u_[hat_inv_[b]];
    out->class_[b] = class_[hat_inv_[b]];
  }
  const int n = R_->rank();
  out->gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out->gram_[i][j] = gram_[j][i];
  return out;
}

int AdmissiblePair::m() const {
  Rational r = u_phi() / u_theta();
  if (!is_integer(r)) throw InvariantViolation("non-integral m");
  return static_cast<int>(r.numerator());
}

UnitarySpec::UnitarySpec(std::shared_ptr<const AdmissiblePair> pair, Multiplicity g, int c,
                         bool allow_degenerate)
    : pair_(std::move(pair)), g_(g), c_(c), allow_degenerate_(allow_degenerate) {
  if (c_ <= 1) throw ConfigError("truncation level c must exceed 1, got " + std::to_string(c_));
  if (g_.g_short <= 0 || g_.g_long <= 0) throw ConfigError("multiplicities must be positive");
  const RootSystem& R = pair_->R();
  if (R.family() == 'E' && R.rank() == 7 && c_ % 6 == 0 && c_ > 6 && !allow_degenerate_)
    throw ConfigError("E7 with c = " + std::to_string(c_) +
                      " refused: c must not be a proper multiple of 6 (simultaneous eigenvalue "
                      "degenerations); pass allow-degenerate to override");
  const int n = R.rank();
  rho_g_.assign(n, Rational(0));
  for (int a = 0; a < R.num_positive_roots(); ++a)
    for (int i = 0; i < n; ++i) rho_g_[i] += g_of(a) * R.root_labels(a)[i] / 2;
  const RootSystem& Rh = pair_->Rhat();
  rho_hat_g_.assign(n, Rational(0));
  for (int b = 0; b < Rh.num_positive_roots(); ++b)
    for (int i = 0; i < n; ++i) rho_hat_g_[i] += g_hat(b) * Rh.root_labels(b)[i] / 2;
  h_g_ = rho_pairing(pair_->psi_hat()) + g_hat(pair_->psi());
  period_ = pair_->u_phi() * (h_g_ + c_);
}

UnitarySpec UnitarySpec::swapped() const {
  return UnitarySpec(pair_->swapped(), g_, c_, allow_degenerate_);
}

RhoWeights UnitarySpec::rho_weights() const {
  const RootSystem& R = pair_->R();
  const int n = R.rank();
  RhoWeights w;
  w.rho_g = rho_g_;
  w.rho_theta.assign(n, Rational(0));
  w.rho_phi_minus_theta.assign(n, Rational(0));
  w.rho.assign(n, Rational(0));
  for (int a = 0; a < R.num_positive_roots(); ++a)
    for (int i = 0; i < n; ++i) {
      const Rational half = Rational(R.root_labels(a)[i], 2);
      w.rho[i] += half;
      if (R.is_short(a)) w.rho_theta[i] += half;
      else w.rho_phi_minus_theta[i] += half;
    }
  return w;
}

double UnitarySpec::kappa() const { return M_PI / to_double(period_); }

std::complex<double> UnitarySpec::q() const { return unit_phase(Rational(1) / period_); }

std::complex<double> UnitarySpec::q_root(int a) const { return unit_phase(pair_->u(a) / period_); }

std::complex<double> UnitarySpec::t_root(int a) const {
  return unit_phase(pair_->u(a) * g_of(a) / period_);
}

std::complex<double> UnitarySpec::t_root_hat(int b) const {
  return unit_phase(pair_->u_hat(b) * g_hat(b) / period_);
}

double UnitarySpec::truncation_defect() const {
  const RootSystem& R = pair_->R();
  const RhoWeights w = rho_weights();
  const int psi_hat = pair_->psi_hat();
  const Rational e_theta = pair_->m() * R.pairing(w.rho_theta, psi_hat);
  const Rational e_phi = R.pairing(w.rho_phi_minus_theta, psi_hat);
  if (!is_integer(e_theta) || !is_integer(e_phi)) throw InvariantViolation("non-integral exponent");
  const auto t_theta = t_root(R.highest_short_root());
  const auto t_phi = t_root(R.highest_root());
  const auto t_psi = t_root_hat(pair_->psi());
  const auto q_phi = q_root(R.highest_root());
  std::complex<double> v = std::pow(t_theta, static_cast<int>(e_theta.numerator())) *
                           std::pow(t_phi, static_cast<int>(e_phi.numerator())) * t_psi *
                           std::pow(q_phi, c_);
  return std::abs(v - 1.0);
}

RegularityReport UnitarySpec::regularity() const {
  RegularityReport rep;
  const RootSystem& Rh = pair_->Rhat();
  for (int b = 0; b < Rh.num_positive_roots(); ++b) {
    const Rational x = rho_hat_pairing(b);
    const Rational top = pair_->m_of_hat(b) * h_g_ - 1;
    if (x == 1 || x == top) {
      rep.regular = false;
      rep.violating_roots.push_back(b);
      rep.reasons.push_back("<rho^_g, a^v> = " + to_string(x) +
                            (x == 1 ? " equals 1" : " equals m_a h_g - 1"));
    }
  }
  return rep;
}

bool UnitarySpec::moment_bounds_hold(const Labels& lam) const {
  const RootSystem& R = pair_->R();
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const Rational ma = pair_->m_of(a);
    const Rational ga = g_of(a);
    const int l = R.pairing(lam, a);
    const Rational x = rho_pairing(a) + l;
    if (!(l <= ma * c_)) return false;
    if (!(ga <= rho_pairing(a) && rho_pairing(a) <= ma * h_g_ - ga)) return false;
    if (!(0 < ga && ga <= x && x <= ma * (h_g_ + c_) - ga)) return false;
  }
  return true;
}

double trig_pochhammer(double a, double kappa, int l) {
  double p = 1.0;
  for (int j = 0; j < l; ++j) p *= 2.0 * std::sin(kappa * (a + j));
  return p;
}

template <class Real>
Real pochhammer(const UnitarySpec& s, const Rational& u, const Rational& a, int l) {
  Real p(1);
  for (int j = 0; j < l; ++j) p *= 2 * sin_pi<Real>(s.angle(u, a + j));
  return p;
}

template double pochhammer<double>(const UnitarySpec&, const Rational&, const Rational&, int);
template boost::multiprecision::cpp_bin_float_50 pochhammer<boost::multiprecision::cpp_bin_float_50>(
    const UnitarySpec&, const Rational&, const Rational&, int);

}  // namespace umac
