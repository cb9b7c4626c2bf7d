#pragma once

#include "umac/rational.hpp"
#include "umac/rootsys.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace umac {

enum class DualFlag { self, dual };
const char* to_string(DualFlag f);
DualFlag parse_dual_flag(const std::string& s);

// orbit classes of R u R^ under W x Z2, named after the roots of the first system
enum class RootClass { short_class = 0, long_class = 1 };

class AdmissiblePair {
 public:
  AdmissiblePair(RootSystem R, DualFlag flag);
  static std::shared_ptr<const AdmissiblePair> make(const std::string& family, int rank, DualFlag flag);

  // (R^, R) sharing the same root system objects
  std::shared_ptr<const AdmissiblePair> swapped() const;

  const RootSystem& R() const { return *R_; }
  const RootSystem& Rhat() const { return *Rhat_; }
  std::shared_ptr<const RootSystem> R_ptr() const { return R_; }
  std::shared_ptr<const RootSystem> Rhat_ptr() const { return Rhat_; }
  DualFlag flag() const { return flag_; }

  int hat(int a) const { return hat_[a]; }          // positive root of R -> positive root of R^
  int hat_inv(int b) const { return hat_inv_[b]; }  // positive root of R^ -> positive root of R
  const Rational& u(int a) const { return u_[a]; }
  const Rational& u_hat(int b) const { return u_[hat_inv_[b]]; }
  RootClass root_class(int a) const { return class_[a]; }
  RootClass root_class_hat(int b) const { return class_[hat_inv_[b]]; }
  Rational m_of(int a) const { return u_phi() / u_[a]; }
  Rational m_of_hat(int b) const { return u_phi() / u_hat(b); }
  Rational u_phi() const { return u_[R_->highest_root()]; }
  Rational u_theta() const { return u_[R_->highest_short_root()]; }
  int m() const;                          // u_phi / u_theta
  int psi() const { return Rhat_->highest_root(); }  // index in R^
  int psi_hat() const { return hat_inv_[psi()]; }     // index in R

  // <omega_i, omega^_j> between fundamental weights of R and R^
  const Rational& gram(int i, int j) const { return gram_[i][j]; }

 private:
  AdmissiblePair() = default;

  std::shared_ptr<const RootSystem> R_, Rhat_;
  DualFlag flag_ = DualFlag::self;
  std::vector<int> hat_, hat_inv_;
  std::vector<Rational> u_;
  std::vector<RootClass> class_;
  std::vector<std::vector<Rational>> gram_;
};

struct Multiplicity {
  Rational g_short;
  Rational g_long;
  const Rational& of(RootClass c) const { return c == RootClass::short_class ? g_short : g_long; }
};

struct RegularityReport {
  bool regular = true;
  std::vector<int> violating_roots;  // positive roots of R^
  std::vector<std::string> reasons;
};

struct RhoWeights {
  QVec rho_g, rho_theta, rho_phi_minus_theta, rho;  // rational labels in the basis of R
};

class UnitarySpec {
 public:
  UnitarySpec(std::shared_ptr<const AdmissiblePair> pair, Multiplicity g, int c,
              bool allow_degenerate = false);

  UnitarySpec swapped() const;

  const AdmissiblePair& pair() const { return *pair_; }
  std::shared_ptr<const AdmissiblePair> pair_ptr() const { return pair_; }
  const RootSystem& R() const { return pair_->R(); }
  const RootSystem& Rhat() const { return pair_->Rhat(); }
  const Multiplicity& g() const { return g_; }
  int c() const { return c_; }
  bool allow_degenerate() const { return allow_degenerate_; }

  const Rational& g_of(int a) const { return g_.of(pair_->root_class(a)); }
  const Rational& g_hat(int b) const { return g_.of(pair_->root_class_hat(b)); }
  Rational g_theta() const { return g_of(R().highest_short_root()); }
  Rational g_phi() const { return g_of(R().highest_root()); }

  const QVec& rho_g() const { return rho_g_; }          // labels in R
  const QVec& rho_hat_g() const { return rho_hat_g_; }  // labels in R^
  Rational rho_pairing(int a) const { return R().pairing(rho_g_, a); }
  Rational rho_hat_pairing(int b) const { return Rhat().pairing(rho_hat_g_, b); }
  RhoWeights rho_weights() const;

  const Rational& h_g() const { return h_g_; }
  // kappa = pi / period
  const Rational& period() const { return period_; }
  double kappa() const;
  // sin(kappa_a * y) = sin(pi * angle(u_a, y))
  Rational angle(const Rational& u, const Rational& y) const { return u * y / period_; }

  std::complex<double> q() const;
  std::complex<double> q_root(int a) const;
  std::complex<double> t_root(int a) const;
  std::complex<double> t_root_hat(int b) const;
  // |t_theta^{m<rho_theta,psi^v>} t_phi^{<rho_{phi\theta},psi^v>} t_psi q_phi^c - 1|
  double truncation_defect() const;

  RegularityReport regularity() const;
  bool is_regular() const { return regularity().regular; }

  // moment bounds g_a <= <rho_g + lam, a^v> <= m_a (h_g + c) - g_a for every positive root
  bool moment_bounds_hold(const Labels& lam) const;

 private:
  std::shared_ptr<const AdmissiblePair> pair_;
  Multiplicity g_;
  int c_ = 2;
  bool allow_degenerate_ = false;
  QVec rho_g_, rho_hat_g_;
  Rational h_g_, period_;
};

// (a : kappa)_l = 2^l prod_{j<l} sin kappa (a + j)
double trig_pochhammer(double a, double kappa, int l);

// exact-argument version: prod_{j<l} 2 sin(pi u (a + j) / period)
template <class Real>
Real pochhammer(const UnitarySpec& s, const Rational& u, const Rational& a, int l);

}  // namespace umac
