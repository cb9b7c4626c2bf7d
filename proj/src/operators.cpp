#include "umac/operators.hpp"
#include "umac/measure.hpp"
#include "umac/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace umac {

TruncatedCone TruncatedCone::build(const UnitarySpec& s, Side side) {
  TruncatedCone cone(side == Side::primal ? s : s.swapped(), side);
  const RootSystem& R = cone.R();
  const auto& marks = R.coroot_coeffs(cone.grid_.pair().psi_hat());
  const int n = R.rank();
  const int c = cone.c();
  Labels cur(n, 0);
  auto rec = [&](auto&& self, int i, int budget) -> void {
    if (i == n) {
      cone.weights_.push_back(cur);
      return;
    }
    for (int v = 0; v * marks[i] <= budget; ++v) {
      cur[i] = v;
      self(self, i + 1, budget - v * marks[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, c);
  std::sort(cone.weights_.begin(), cone.weights_.end(),
            [&R](const Labels& a, const Labels& b) { return cone_order_less(R, a, b); });
  for (std::size_t i = 0; i < cone.weights_.size(); ++i) cone.index_.emplace(cone.weights_[i], i);
  return cone;
}

std::optional<std::size_t> TruncatedCone::index_of(const Labels& lam) const {
  auto it = index_.find(lam);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TruncatedCone::contains(const Labels& lam) const { return index_.count(lam) > 0; }

int TruncatedCone::level(const Labels& lam) const {
  return R().pairing(lam, grid_.pair().psi_hat());
}

namespace {

// y_i = sum_j gram(i,j) x_j / period, so <nu, x>/period = sum_i nu_i y_i
QVec dual_coordinates(const UnitarySpec& gs, const QVec& x) {
  const int n = gs.R().rank();
  QVec y(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) y[i] += gs.pair().gram(i, j) * x[j];
    y[i] /= gs.period();
  }
  return y;
}

Complex monomial_from_dual(const RootSystem& R, const Labels& lam, const QVec& y) {
  Complex s(0.0, 0.0);
  for (const auto& nu : *R.weyl_orbit(lam)) {
    Rational a(0);
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (nu[i]) a += nu[i] * y[i];
    s += unit_phase(a);
  }
  return s;
}

class RatioBuilder {
 public:
  RatioBuilder(const UnitarySpec& gs, const Rational& u) : gs_(gs), u_(u) {}
  void num(const Rational& y) {
    const Rational t = gs_.angle(u_, y);
    r_.min_numerator_factor =
        std::min(r_.min_numerator_factor, std::abs(std::sin(M_PI * to_double(t))));
    if (is_integer(t)) ++r_.numerator_zeros;
    else r_.numerator *= sin_pi<double>(t);
  }
  void den(const Rational& y) {
    const Rational t = gs_.angle(u_, y);
    if (is_integer(t)) ++r_.denominator_zeros;
    else r_.denominator *= sin_pi<double>(t);
  }
  void set_u(const Rational& u) { u_ = u; }
  SineRatio& result() { return r_; }

 private:
  const UnitarySpec& gs_;
  Rational u_;
  SineRatio r_;
};

}  // namespace

Rational pairing_angle(const UnitarySpec& gs, const Labels& lam, const QVec& x) {
  const QVec y = dual_coordinates(gs, x);
  Rational a(0);
  for (std::size_t i = 0; i < lam.size(); ++i) a += lam[i] * y[i];
  return a;
}

Complex monomial(const UnitarySpec& gs, const Labels& lam, const QVec& x) {
  return monomial_from_dual(gs.R(), lam, dual_coordinates(gs, x));
}

QVec shifted_rho_hat(const UnitarySpec& gs, const Labels& mu) {
  QVec x = gs.rho_hat_g();
  for (std::size_t i = 0; i < mu.size(); ++i) x[i] += mu[i];
  return x;
}

double SineRatio::value() const {
  if (denominator_zeros > numerator_zeros)
    throw InvariantViolation("sine ratio has an uncancelled pole");
  if (numerator_zeros > denominator_zeros) return 0.0;
  return numerator / denominator;
}

SineRatio coefficient_V(const UnitarySpec& gs, const Labels& nu, const Labels& mu) {
  const RootSystem& R = gs.R();
  RatioBuilder b(gs, Rational(1));
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const int p = R.pairing(nu, a);
    if (p == 0) continue;
    b.set_u(gs.pair().u(a));
    const Rational g = gs.g_of(a);
    // <x, alpha^v> for alpha = sign(p) a
    const Rational X = (p > 0 ? 1 : -1) * (gs.rho_pairing(a) + R.pairing(mu, a));
    b.num(X + g);
    b.den(X);
    if (std::abs(p) == 2) {
      b.num(X + 1 + g);
      b.den(X + 1);
    }
  }
  return b.result();
}

SineRatio coefficient_U_raw(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                            const Labels& mu) {
  const RootSystem& R = gs.R();
  RatioBuilder b(gs, Rational(1));
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    if (R.pairing(nu, a) != 0) continue;
    const int p = R.pairing(eta, a);
    if (p == 0) continue;
    b.set_u(gs.pair().u(a));
    const Rational g = gs.g_of(a);
    const Rational X = (p > 0 ? 1 : -1) * (gs.rho_pairing(a) + R.pairing(mu, a));
    b.num(X + g);
    b.den(X);
    if (std::abs(p) == 2) {
      b.num(X + 1 - g);
      b.den(X + 1);
    }
  }
  return b.result();
}

std::optional<double> coefficient_U(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                                    const Labels& mu) {
  const SineRatio r = coefficient_U_raw(gs, nu, eta, mu);
  if (r.denominator_vanishes()) return std::nullopt;
  return r.value();
}

bool u_denominator_criterion(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                             const Labels& mu) {
  const RootSystem& R = gs.R();
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    if (R.pairing(nu, a) != 0) continue;
    const int p = R.pairing(eta, a);
    if (std::abs(p) != 2) continue;
    const int sgn = p > 0 ? 1 : -1;
    const int m_mu = sgn * R.pairing(mu, a);
    const Rational rho = sgn * gs.rho_pairing(a);
    const Rational ma = gs.pair().m_of(a);
    if (m_mu == 0 && rho == -1) return true;
    if (Rational(m_mu) == ma * gs.c() && rho == ma * gs.h_g() - 1) return true;
  }
  return false;
}

bool u_numerator_criterion(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                           const Labels& mu) {
  const RootSystem& R = gs.R();
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    if (R.pairing(nu, a) != 0) continue;
    const int p = R.pairing(eta, a);
    if (std::abs(p) != 2) continue;
    const int sgn = p > 0 ? 1 : -1;
    const int m_mu = sgn * R.pairing(mu, a);
    if (m_mu == 0 && sgn < 0) return true;
    if (Rational(m_mu) == gs.pair().m_of(a) * gs.c()) return true;
  }
  return false;
}

std::vector<Labels> eta_orbit(const RootSystem& R, const Labels& nu, const Labels& omega) {
  const auto [dom, w] = R.dominant_representative(nu);
  return R.parabolic_orbit(nu, R.apply_inverse(w, omega));
}

Complex epsilon_coefficient(const UnitarySpec& gs, const Labels& omega, const Labels& mu) {
  const RootSystem& R = gs.R();
  std::vector<int> stab;
  for (int a = 0; a < R.num_positive_roots(); ++a)
    if (R.pairing(mu, a) == 0) stab.push_back(a);
  Complex sum(0.0, 0.0);
  for (const auto& eta : R.parabolic_orbit(mu, omega)) {
    Complex term(1.0, 0.0);
    for (int a : stab) {
      const int p = R.pairing(eta, a);
      if (std::abs(p) == 1)
        term *= unit_phase(gs.pair().u(a) * gs.g_of(a) * p / (2 * gs.period()));
    }
    sum += term;
  }
  return sum;
}

Eigenvalue::Eigenvalue(const UnitarySpec& gs, const Labels& omega) : gs_(gs), omega_(omega) {
  const RootSystem& R = gs.R();
  if (!R.is_dominant(omega) || R.classify(omega) == WeightClass::not_small)
    throw ConfigError("eigenvalue requested for a weight that is not small: " +
                      format_labels(omega));
  for (const auto& mu : R.dominant_weights_below(omega))
    terms_.emplace_back(mu, mu == omega ? Complex(1.0, 0.0) : epsilon_coefficient(gs, omega, mu));
}

Complex Eigenvalue::operator()(const QVec& x) const {
  const QVec y = dual_coordinates(gs_, x);
  Complex s(0.0, 0.0);
  for (const auto& [mu, eps] : terms_) {
    if (std::all_of(mu.begin(), mu.end(), [](int v) { return v == 0; })) s += eps;
    else s += eps * monomial_from_dual(gs_.R(), mu, y);
  }
  return s;
}

namespace {

void require_small(const RootSystem& R, const Labels& omega) {
  if (!R.is_dominant(omega) || R.classify(omega) == WeightClass::not_small)
    throw ConfigError("operator requested for a weight that is not small: " + format_labels(omega));
}

Labels plus(const Labels& a, const Labels& b) {
  Labels c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Labels negated(const Labels& a) {
  Labels c(a);
  for (auto& x : c) x = -x;
  return c;
}

}  // namespace

FiniteOperator finite_operator(const TruncatedCone& cone, const Labels& omega) {
  const UnitarySpec& gs = cone.grid_spec();
  const RootSystem& R = gs.R();
  require_small(R, omega);
  const auto shifts = R.saturated_set(omega);
  std::vector<std::vector<Labels>> etas;
  etas.reserve(shifts.size());
  for (const auto& nu : shifts) etas.push_back(eta_orbit(R, nu, omega));

  const std::size_t N = cone.size();
  FiniteOperator op;
  op.omega = omega;
  op.matrix = CMatrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  std::vector<OperatorStats> row_stats(N);
  parallel_for(N, [&](std::size_t i) {
    const Labels& mu = cone.weight(i);
    OperatorStats& st = row_stats[i];
    for (std::size_t k = 0; k < shifts.size(); ++k) {
      const Labels target = plus(mu, shifts[k]);
      const SineRatio v = coefficient_V(gs, shifts[k], mu);
      const auto j = cone.index_of(target);
      if (!j) {
        if (!v.numerator_vanishes())
          throw InvariantViolation("boundary term does not vanish at mu=" + format_labels(mu) +
                                   " nu=" + format_labels(shifts[k]));
        ++st.boundary_terms;
        continue;
      }
      if (v.denominator_vanishes())
        throw InvariantViolation("V has a pole inside the cone at mu=" + format_labels(mu) +
                                 " nu=" + format_labels(shifts[k]));
      double usum = 0.0;
      for (const auto& eta : etas[k]) {
        const SineRatio u = coefficient_U_raw(gs, shifts[k], eta, mu);
        if (u.denominator_vanishes()) {
          ++st.omitted_terms;
          if (!u.numerator_vanishes()) ++st.numerator_mismatches;
          continue;
        }
        usum += u.value();
      }
      op.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(*j)) +=
          Complex(v.value() * usum, 0.0);
    }
  });
  for (const auto& st : row_stats) {
    op.stats.omitted_terms += st.omitted_terms;
    op.stats.numerator_mismatches += st.numerator_mismatches;
    op.stats.boundary_terms += st.boundary_terms;
  }
  return op;
}

double adjointness_residual(const TruncatedCone& cone, const Labels& omega) {
  const UnitarySpec& gs = cone.grid_spec();
  const auto D = finite_operator(cone, omega).matrix;
  const auto Ds = finite_operator(cone, gs.R().dual_weight(omega)).matrix;
  const Eigen::Index N = D.rows();
  std::vector<double> w(N);
  for (Eigen::Index i = 0; i < N; ++i) w[i] = delta_weight<double>(gs, cone.weight(i));
  double scale = 0.0, defect = 0.0;
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) {
      const Complex lhs = w[i] * D(i, j);
      const Complex rhs = std::conj(Ds(j, i)) * w[j];
      scale = std::max(scale, std::abs(lhs));
      defect = std::max(defect, std::abs(lhs - rhs));
    }
  return scale > 0 ? defect / scale : defect;
}

double delta_recurrence_residual(const TruncatedCone& cone, const Labels& omega, double* min_side) {
  const UnitarySpec& gs = cone.grid_spec();
  const RootSystem& R = gs.R();
  require_small(R, omega);
  const auto shifts = R.saturated_set(omega);
  std::vector<double> w(cone.size());
  for (std::size_t i = 0; i < cone.size(); ++i) w[i] = delta_weight<double>(gs, cone.weight(i));
  double worst = 0.0;
  double smallest = 1e300;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    const Labels& mu = cone.weight(i);
    for (const auto& nu : shifts) {
      const Labels target = plus(mu, nu);
      const auto j = cone.index_of(target);
      if (!j) continue;
      const double rhs = w[i] * coefficient_V(gs, nu, mu).value();
      const double lhs = w[*j] * coefficient_V(gs, negated(nu), target).value();
      const double denom = std::max(std::abs(lhs), std::abs(rhs));
      if (denom > 0) worst = std::max(worst, std::abs(lhs - rhs) / denom);
      const auto cls = R.classify(R.dominant_representative(nu).first);
      const bool tracked = std::any_of(nu.begin(), nu.end(), [](int v) { return v != 0; }) &&
                           (cls == WeightClass::minuscule || cls == WeightClass::quasi_minuscule);
      if (tracked) smallest = std::min({smallest, lhs, rhs});
    }
  }
  if (min_side) *min_side = smallest;
  return worst;
}

BoundaryReport boundary_check(const TruncatedCone& cone, const Labels& omega) {
  const UnitarySpec& gs = cone.grid_spec();
  const RootSystem& R = gs.R();
  require_small(R, omega);
  BoundaryReport rep;
  for (const auto& mu : cone.weights())
    for (const auto& nu : R.saturated_set(omega)) {
      const SineRatio v = coefficient_V(gs, nu, mu);
      const bool outside = !cone.contains(plus(mu, nu));
      ++rep.checked;
      if (outside) {
        rep.max_zero_value = std::max(rep.max_zero_value, v.min_numerator_factor);
        if (!v.numerator_vanishes() || v.min_numerator_factor > 1e-10) ++rep.failures;
      } else {
        rep.min_nonzero_value = std::min(rep.min_nonzero_value, v.min_numerator_factor);
        if (v.numerator_vanishes() || v.min_numerator_factor < 1e-6) ++rep.failures;
      }
    }
  return rep;
}

UVanishingReport u_vanishing_check(const TruncatedCone& cone, const Labels& omega) {
  const UnitarySpec& gs = cone.grid_spec();
  const RootSystem& R = gs.R();
  require_small(R, omega);
  UVanishingReport rep;
  for (const auto& mu : cone.weights())
    for (const auto& nu : R.saturated_set(omega)) {
      if (!cone.contains(plus(mu, nu))) continue;
      for (const auto& eta : eta_orbit(R, nu, omega)) {
        const SineRatio u = coefficient_U_raw(gs, nu, eta, mu);
        const bool crit = u_denominator_criterion(gs, nu, eta, mu);
        if (u.denominator_vanishes()) ++rep.denominator_zeros;
        if (u.denominator_vanishes() != crit) ++rep.criterion_mismatches;
        if (u_numerator_criterion(gs, nu, eta, mu)) {
          ++rep.companion_cases;
          if (!u.numerator_vanishes()) ++rep.numerator_failures;
        }
      }
    }
  return rep;
}

std::string export_operator(const TruncatedCone& cone, const FiniteOperator& op) {
  const UnitarySpec& gs = cone.grid_spec();
  std::ostringstream os;
  os << "# umac operator v1\n";
  os << "# type " << gs.R().label() << " pair " << to_string(gs.pair().flag()) << " side "
     << (cone.side() == Side::primal ? "primal" : "hat") << "\n";
  os << "# g_short " << to_string(gs.g().g_short) << " g_long " << to_string(gs.g().g_long)
     << " c " << gs.c() << " omega " << format_labels(op.omega) << "\n";
  os << "# size " << op.matrix.rows() << "\n";
  for (std::size_t i = 0; i < cone.size(); ++i)
    os << "# weight " << i << " " << format_labels(cone.weight(i)) << "\n";
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) {
      const Complex z = op.matrix(i, j);
      if (z != Complex(0.0, 0.0)) os << i << " " << j << " " << z.real() << " " << z.imag() << "\n";
    }
  return os.str();
}

}  // namespace umac
