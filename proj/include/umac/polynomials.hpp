#pragma once

#include "umac/operators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace umac {

// coefficients in the orbit-sum basis m_lam
struct SymmetricPolynomial {
  Labels leading;
  std::vector<std::pair<Labels, Complex>> terms;  // cone order, leading weight last
  // evaluation at rational labels x of gs.Rhat
  Complex evaluate(const UnitarySpec& gs, const QVec& x) const;
};

// m_kappa(rho^_g + mu) for kappa in P_c (rows) and mu in P^_c (columns)
CMatrix monomial_matrix(const UnitarySpec& s, const TruncatedCone& primal, const TruncatedCone& hat);
// 2-norm condition number via SVD
double condition_number(const CMatrix& m);

// D_omega on P^_c conjugated into the monomial basis: row kappa holds the expansion of D m_kappa
CMatrix monomial_operator(const CMatrix& monomials, const CMatrix& grid_operator);

struct MacdonaldBasis {
  explicit MacdonaldBasis(const UnitarySpec& s);

  UnitarySpec spec;
  TruncatedCone primal;  // P_c, indexes the polynomials
  TruncatedCone hat;     // P^_c, indexes the grid
  CMatrix coefficients;  // [lam][kappa]
  CMatrix values;        // [lam][mu] = p_lam(rho^_g + mu)
  double condition = 0.0;
  // construction diagnostics; unused by the Gram-Schmidt route
  double min_gap = 0.0;
  std::vector<Labels> operators;
  std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // (lam, mu) below the gap floor
  // pairs below the floor whose rows were obtained by continuation in g
  std::vector<std::pair<std::size_t, std::size_t>> continued;
  double continuation_error = 0.0;
  double triangularity_defect = 0.0;
  double diagonal_defect = 0.0;    // |C_omega[lam][lam] - E_omega(rho_g + lam)|, max over omega, lam
  double eigen_residual = 0.0;     // max relative |D p - E p| over every small omega
  double commutation_defect = 0.0; // max relative |[C_omega, C_omega']|

  SymmetricPolynomial polynomial(std::size_t i) const;
  // p_lam(rho^_g)
  Complex value_at_origin(std::size_t i) const;
};

constexpr double kGapFloor = 1e-8;
constexpr double kConditionCeiling = 1e12;

// grid-eigenproblem construction; throws InvariantViolation when the evaluation matrix is
// numerically singular
MacdonaldBasis construct_macdonald(const UnitarySpec& s);
// independent route through the projection formula with weights Delta^
MacdonaldBasis gram_schmidt_macdonald(const UnitarySpec& s);
double max_coefficient_deviation(const MacdonaldBasis& a, const MacdonaldBasis& b);

enum class Precision { double_precision, extended };

struct OrthogonalityData {
  std::vector<double> delta;      // over P_c
  std::vector<double> delta_hat;  // over P^_c
  double N0 = 0.0;
  double N0_hat = 0.0;
};
OrthogonalityData orthogonality_data(const UnitarySpec& s, Precision p = Precision::double_precision);

// sum_mu f(mu) conj(h(mu)) w(mu)
Complex discrete_inner_product(const std::vector<double>& weights, const CVector& f, const CVector& h);

// P_lam(rho^_g + mu) = p_lam(rho^_g + mu) / p_lam(rho^_g)
CMatrix normalized_values(const MacdonaldBasis& b);

struct OrthogonalityReport {
  double off_diagonal = 0.0;       // max_{lam != lam'} |<P_lam, P_lam'>| / N0
  double dual_off_diagonal = 0.0;  // same over P_c with weights Delta
  double norm_residual = 0.0;      // max |Delta(lam) <P_lam,P_lam> - N0| / N0
  double dual_norm_residual = 0.0;
  double specialization_defect = 0.0;  // p_lam(rho^_g) against the product formula, relative
  double min_specialization = 0.0;
};
OrthogonalityReport orthogonality_check(const MacdonaldBasis& b, const OrthogonalityData& d);
double norm_identity_residual(const MacdonaldBasis& b, const OrthogonalityData& d);

// S_{lam,mu} = (Delta(lam) Delta^(mu) / N0)^{1/2} P_lam(rho^_g + mu)
CMatrix s_matrix(const MacdonaldBasis& b, const OrthogonalityData& d);
double unitarity_defect(const CMatrix& S);
// max |S^_{mu,lam} - S_{lam,mu}| with S^ built from the swapped pair
double duality_defect(const CMatrix& S, const CMatrix& S_hat);

// max |E^_omega(rho^_g+mu) P_lam(rho^_g+mu) - sum V^ U^ P_{lam+nu}(rho^_g+mu)| / max |LHS|
double pieri_residual(const MacdonaldBasis& b, const Labels& omega);

// 0 -> ... -> lam inside the cone with increments in W theta n R+ or dominant minuscule
std::vector<Labels> quasi_minuscule_path(const TruncatedCone& cone, const Labels& lam);

// coefficient of z^c in (1-z)^{-1} prod_j (1 - z^{k_j})^{-1}
std::uint64_t cone_size_series(const std::vector<int>& marks, int c);
// marks k_j of the bounding coroot of P_c
std::vector<int> cone_marks(const AdmissiblePair& pair);

struct SeparationFailure {
  std::size_t sample;
  Labels lam, mu;
};

struct NondegeneracyReport {
  std::size_t cone_size = 0;
  std::size_t pairs = 0;
  std::vector<Multiplicity> samples;
  std::vector<SeparationFailure> failures;
  // best separating gap minimized over pairs and samples; above 3000 points only pairs
  // within the floor on the first operator are examined
  double min_gap = 0.0;
  bool pass() const { return failures.empty(); }
};
// pairs of P_c against E_omega(rho_g + .) for every small omega of P^
NondegeneracyReport nondegeneracy_scan(std::shared_ptr<const AdmissiblePair> pair, int c,
                                       const std::vector<Multiplicity>& samples,
                                       bool allow_degenerate = false);
// the first `count` regular multiplicities from a fixed candidate list
std::vector<Multiplicity> regular_samples(std::shared_ptr<const AdmissiblePair> pair, int c,
                                          std::size_t count = 3);

struct E7LineReport {
  std::size_t degenerate_pairs = 0;  // distinct over all samples
  std::size_t off_line = 0;       // difference not an integer multiple of a1 + a2 + a6
  std::size_t inside_smaller = 0; // some member lies in P_{c~}
  std::size_t below_bound = 0;    // some member has level < 11c/12
  int c_tilde = 0;
};
E7LineReport e7_degeneration_check(const NondegeneracyReport& scan, const RootSystem& E7, int c);

// "# leading <labels>" then "<labels> re im" per term, one block per polynomial
std::string export_polynomials(const MacdonaldBasis& b);

}  // namespace umac
