#include "umac/weyl.hpp"
#include "umac/mass_tables.hpp"
#include "umac/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace umac {

std::int64_t index_pair(const AdmissiblePair& pair) {
  const RootSystem& R = pair.R();
  const RootSystem& Rh = pair.Rhat();
  const int n = R.rank();
  // coordinates of u_phi beta_j^v in the fundamental weights of R
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    const QVec& a = R.simple_roots()[i];
    const QVec av = scaled(a, Rational(2) / inner(a, a));
    for (int j = 0; j < n; ++j) {
      const QVec& b = Rh.simple_roots()[j];
      const QVec bv = scaled(b, Rational(2) / inner(b, b));
      m(i, j) = to_double(pair.u_phi() * inner(bv, av));
    }
  }
  return std::llround(std::abs(m.determinant()));
}

Complex weyl_character(const UnitarySpec& gs, const Labels& lam, const QVec& x) {
  Complex s(0.0, 0.0);
  for (const auto& [w, sign] : gs.R().signed_regular_orbit(lam))
    s += static_cast<double>(sign) * unit_phase(pairing_angle(gs, w, x));
  return s;
}

Rational hbar(const AdmissiblePair& pair) {
  const RootSystem& R = pair.R();
  const Labels rho(R.rank(), 1);
  return Rational(R.pairing(rho, pair.psi_hat()) + 1);
}

WeylReport weyl_orthogonality_check(std::shared_ptr<const AdmissiblePair> pair, int c) {
  const UnitarySpec s(pair, Multiplicity{Rational(1), Rational(1)}, c, true);
  const RootSystem& R = s.R();
  const TruncatedCone primal = TruncatedCone::build(s, Side::primal);
  const TruncatedCone hat = TruncatedCone::build(s, Side::hat);
  WeylReport rep;
  rep.cone_size = primal.size();
  rep.hbar = hbar(*pair);
  rep.ind = R.index();
  rep.ind_pair = index_pair(*pair);
  const int n = R.rank();
  rep.norm = std::pow(to_double(rep.hbar + c), n);

  const std::size_t N = primal.size(), K = hat.size();
  CMatrix chi(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(K));
  parallel_for(N, [&](std::size_t i) {
    Labels lam = primal.weight(i);
    for (auto& v : lam) v += 1;
    for (std::size_t j = 0; j < K; ++j)
      chi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          weyl_character(s, lam, shifted_rho_hat(s, hat.weight(j)));
  });
  const CMatrix G = chi.transpose() * chi.conjugate();
  const double diag = static_cast<double>(rep.ind_pair) * rep.norm;
  for (Eigen::Index a = 0; a < G.rows(); ++a)
    for (Eigen::Index b = 0; b < G.cols(); ++b) {
      if (a == b) rep.diagonal_defect = std::max(rep.diagonal_defect, std::abs(G(a, a) - diag) / diag);
      else rep.off_diagonal = std::max(rep.off_diagonal, std::abs(G(a, b)) / rep.norm);
    }

  const double Nc = table_Nc<double>(s);
  double prod = 1.0, prod_sq = 1.0;
  for (int a = 0; a < R.num_positive_roots(); ++a) {
    const double v = sin_pi<double>(s.angle(s.pair().u(a), s.rho_pairing(a)));
    prod *= v;
    prod_sq *= 4.0 * v * v;
  }
  rep.trig_identity_lhs = Nc * prod;
  rep.trig_identity_rhs = static_cast<double>(rep.ind_pair) / static_cast<double>(rep.ind) * rep.norm;
  rep.trig_identity_defect = std::abs(rep.trig_identity_lhs - rep.trig_identity_rhs) / rep.trig_identity_rhs;
  rep.trig_squared_defect = std::abs(Nc * prod_sq - rep.trig_identity_rhs) / rep.trig_identity_rhs;
  return rep;
}

}  // namespace umac
