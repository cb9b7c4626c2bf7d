#pragma once

#include "umac/operators.hpp"

#include <cstdint>

namespace umac {

// |P / u_phi Q^v| with Q^v spanned by the coroots of R^
std::int64_t index_pair(const AdmissiblePair& pair);

// chi_lam(x) = sum_w det(w) e^{w lam}(x) for lam in P of gs.R and x in labels of gs.Rhat
Complex weyl_character(const UnitarySpec& gs, const Labels& lam, const QVec& x);

// hbar = <rho, psi^v> + 1
Rational hbar(const AdmissiblePair& pair);

struct WeylReport {
  std::size_t cone_size = 0;
  Rational hbar;
  std::int64_t ind = 0;       // Ind(R)
  std::int64_t ind_pair = 0;  // Ind(R, R^)
  double norm = 0.0;          // (hbar + c)^n
  double off_diagonal = 0.0;    // max |sum| / (hbar + c)^n over mu != mu~
  double diagonal_defect = 0.0; // max |sum - Ind(R,R^)(hbar+c)^n| / same
  // N_c prod sin(kappa_a <rho,a^v>) against (Ind(R,R^)/Ind(R))(hbar+c)^n, relative
  double trig_identity_defect = 0.0;
  double trig_identity_lhs = 0.0;
  double trig_identity_rhs = 0.0;
  // the same with each sine replaced by 4 sin^2
  double trig_squared_defect = 0.0;
};

// requires g = 1; the characters chi_{rho+lam}, lam in P_c, sampled at rho^ + mu, mu in P^_c
WeylReport weyl_orthogonality_check(std::shared_ptr<const AdmissiblePair> pair, int c);

}  // namespace umac
