#pragma once

#include "umac/macparams.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace umac {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// P_c lives on the R side of a spec, P^_c on its hat side
enum class Side { primal, hat };

// Dominant weights of the grid system with <lam, psi^v> <= c, in cone order.
// grid_spec() is the spec whose first root system carries the grid: the spec
// itself for the primal side and its swap for the hat side.
class TruncatedCone {
 public:
  static TruncatedCone build(const UnitarySpec& s, Side side);

  const UnitarySpec& grid_spec() const { return grid_; }
  const RootSystem& R() const { return grid_.R(); }
  Side side() const { return side_; }
  int c() const { return grid_.c(); }
  std::size_t size() const { return weights_.size(); }
  const Labels& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Labels>& weights() const { return weights_; }
  std::optional<std::size_t> index_of(const Labels& lam) const;
  bool contains(const Labels& lam) const;
  // <lam, psi^v> for the bounding coroot
  int level(const Labels& lam) const;

 private:
  TruncatedCone(UnitarySpec grid, Side side) : grid_(std::move(grid)), side_(side) {}
  UnitarySpec grid_;
  Side side_;
  std::vector<Labels> weights_;
  std::unordered_map<Labels, std::size_t, LabelsHash> index_;
};

// <lam, x> / period for lam in P of gs.R and x in rational labels of gs.Rhat
Rational pairing_angle(const UnitarySpec& gs, const Labels& lam, const QVec& x);
// m_lam(x) = sum over W lam of exp(2 pi i <nu, x> / period)
Complex monomial(const UnitarySpec& gs, const Labels& lam, const QVec& x);
// rho^_g + mu in rational labels of gs.Rhat
QVec shifted_rho_hat(const UnitarySpec& gs, const Labels& mu);

// a product of sine ratios whose zero factors are identified exactly
struct SineRatio {
  double numerator = 1.0;    // product of nonvanishing numerator sines
  double denominator = 1.0;  // product of nonvanishing denominator sines
  int numerator_zeros = 0;
  int denominator_zeros = 0;
  // smallest |sin| among numerator factors, evaluated in plain floating point
  double min_numerator_factor = 1.0;
  bool numerator_vanishes() const { return numerator_zeros > 0; }
  bool denominator_vanishes() const { return denominator_zeros > 0; }
  double value() const;  // throws InvariantViolation on an uncancelled pole
};

// V_nu(rho_g + mu) with roots of gs.R; mu a weight of gs.R
SineRatio coefficient_V(const UnitarySpec& gs, const Labels& nu, const Labels& mu);
// U_{nu,eta}(rho_g + mu); nullopt when the term is omitted from the primed sum
std::optional<double> coefficient_U(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                                    const Labels& mu);
SineRatio coefficient_U_raw(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                            const Labels& mu);
// exact criterion for a vanishing U denominator in the cone
bool u_denominator_criterion(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                             const Labels& mu);
// companion criterion under which the U numerator must vanish
bool u_numerator_criterion(const UnitarySpec& gs, const Labels& nu, const Labels& eta,
                           const Labels& mu);

// eta set W_nu(w_nu^{-1} omega)
std::vector<Labels> eta_orbit(const RootSystem& R, const Labels& nu, const Labels& omega);

// epsilon_{omega,mu} for dominant mu <= omega; roots of gs.R
Complex epsilon_coefficient(const UnitarySpec& gs, const Labels& omega, const Labels& mu);

// E_omega(x) for omega small in P of gs.R, evaluated at rational labels x of gs.Rhat
class Eigenvalue {
 public:
  Eigenvalue(const UnitarySpec& gs, const Labels& omega);
  Complex operator()(const QVec& x) const;
  // at rho^_g + lam
  Complex at(const Labels& lam) const { return (*this)(shifted_rho_hat(gs_, lam)); }
  const std::vector<std::pair<Labels, Complex>>& terms() const { return terms_; }
  const Labels& omega() const { return omega_; }

 private:
  UnitarySpec gs_;
  Labels omega_;
  std::vector<std::pair<Labels, Complex>> terms_;  // (mu, epsilon_{omega,mu})
};

struct OperatorStats {
  std::size_t omitted_terms = 0;        // primed-sum omissions
  std::size_t numerator_mismatches = 0;  // omitted U whose numerator did not vanish
  std::size_t boundary_terms = 0;       // out-of-cone shifts checked to vanish
};

// (D f)(mu) = sum_nu A(mu, mu+nu) f(mu+nu) on the cone grid
struct FiniteOperator {
  Labels omega;
  CMatrix matrix;
  OperatorStats stats;
};

FiniteOperator finite_operator(const TruncatedCone& cone, const Labels& omega);

// max |W D_omega - D_{omega*}^H W| / max |W D_omega|, W = diag(Delta)
double adjointness_residual(const TruncatedCone& cone, const Labels& omega);
// max relative |Delta(mu+nu) V_{-nu}(mu+nu) - Delta(mu) V_nu(mu)|; sets *min_side to the
// smallest coefficient seen on either side
double delta_recurrence_residual(const TruncatedCone& cone, const Labels& omega,
                                 double* min_side = nullptr);

struct BoundaryReport {
  std::size_t checked = 0;
  std::size_t failures = 0;         // numerator-zero pattern disagrees with cone membership
  double max_zero_value = 0.0;      // largest |numerator| where vanishing expected
  double min_nonzero_value = 1e300; // smallest |numerator| where nonvanishing expected
};
// both directions of the boundary vanishing property for every mu, nu
BoundaryReport boundary_check(const TruncatedCone& cone, const Labels& omega);

struct UVanishingReport {
  std::size_t denominator_zeros = 0;
  std::size_t companion_cases = 0;
  std::size_t numerator_failures = 0;   // companion criterion held but numerator did not vanish
  std::size_t criterion_mismatches = 0; // exact denominator zero disagrees with the criterion
};
UVanishingReport u_vanishing_check(const TruncatedCone& cone, const Labels& omega);

// text export: header then "row col re im" per nonzero entry
std::string export_operator(const TruncatedCone& cone, const FiniteOperator& op);

}  // namespace umac
