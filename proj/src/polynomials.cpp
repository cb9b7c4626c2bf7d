#include "umac/polynomials.hpp"
#include "umac/measure.hpp"
#include "umac/parallel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace umac {

namespace {

using Ext = boost::multiprecision::cpp_bin_float_50;

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::size_t origin_index(const TruncatedCone& cone) {
  const auto i = cone.index_of(Labels(cone.R().rank(), 0));
  if (!i) throw InvariantViolation("cone misses the origin");
  return *i;
}

}  // namespace

Complex SymmetricPolynomial::evaluate(const UnitarySpec& gs, const QVec& x) const {
  Complex s(0.0, 0.0);
  for (const auto& [lam, coeff] : terms) s += coeff * monomial(gs, lam, x);
  return s;
}

CMatrix monomial_matrix(const UnitarySpec& s, const TruncatedCone& primal, const TruncatedCone& hat) {
  CMatrix M(ix(primal.size()), ix(hat.size()));
  std::vector<QVec> xs;
  for (const auto& mu : hat.weights()) xs.push_back(shifted_rho_hat(s, mu));
  parallel_for(primal.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < hat.size(); ++j) M(ix(i), ix(j)) = monomial(s, primal.weight(i), xs[j]);
  });
  return M;
}

double condition_number(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 1.0;
  const double lo = sv(sv.size() - 1);
  return lo > 0 ? sv(0) / lo : INFINITY;
}

CMatrix monomial_operator(const CMatrix& monomials, const CMatrix& grid_operator) {
  // C M = M A^T, solved as M^T C^T = A M^T
  const CMatrix rhs = grid_operator * monomials.transpose();
  return monomials.transpose().partialPivLu().solve(rhs).transpose();
}

MacdonaldBasis::MacdonaldBasis(const UnitarySpec& s)
    : spec(s), primal(TruncatedCone::build(s, Side::primal)), hat(TruncatedCone::build(s, Side::hat)) {}

SymmetricPolynomial MacdonaldBasis::polynomial(std::size_t i) const {
  SymmetricPolynomial p;
  p.leading = primal.weight(i);
  for (std::size_t k = 0; k < primal.size(); ++k) {
    const Complex a = coefficients(ix(i), ix(k));
    if (a != Complex(0.0, 0.0)) p.terms.emplace_back(primal.weight(k), a);
  }
  return p;
}

Complex MacdonaldBasis::value_at_origin(std::size_t i) const {
  return values(ix(i), ix(origin_index(hat)));
}

namespace {

struct GridOperators {
  std::vector<Labels> omegas;
  std::vector<CMatrix> grid;      // A_omega on P^_c
  std::vector<CMatrix> monomial;  // C_omega
  std::vector<std::vector<Complex>> eigen;  // E_omega(rho_g + lam) over P_c
};

void add_operator(GridOperators& ops, const UnitarySpec& s, const TruncatedCone& primal,
                  const TruncatedCone& hat, const CMatrix& M, const Labels& omega) {
  ops.omegas.push_back(omega);
  ops.grid.push_back(finite_operator(hat, omega).matrix);
  ops.monomial.push_back(monomial_operator(M, ops.grid.back()));
  const Eigenvalue E(s.swapped(), omega);
  std::vector<Complex> ev(primal.size());
  for (std::size_t i = 0; i < primal.size(); ++i) ev[i] = E.at(primal.weight(i));
  ops.eigen.push_back(std::move(ev));
}

double smallest_gap(const GridOperators& ops, const TruncatedCone& primal) {
  const RootSystem& R = primal.R();
  double gap = INFINITY;
  for (std::size_t i = 0; i < primal.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!R.dominance_leq(primal.weight(j), primal.weight(i))) continue;
      double best = 0.0;
      for (const auto& ev : ops.eigen) best = std::max(best, std::abs(ev[i] - ev[j]));
      gap = std::min(gap, best);
    }
  return gap;
}

}  // namespace

namespace {

MacdonaldBasis construct_impl(const UnitarySpec& s, bool continue_degenerate);

Multiplicity shifted(const Multiplicity& g, const Rational& t) {
  return Multiplicity{g.g_short + t, g.g_long - t};
}

// rows with coincident eigenvalues are analytic in g: symmetric samples at g +- t,
// Richardson-extrapolated in t^2
void continue_rows(const UnitarySpec& s, MacdonaldBasis& b) {
  std::vector<std::size_t> rows;
  for (const auto& [i, j] : b.unresolved)
    if (rows.empty() || rows.back() != i) rows.push_back(i);
  constexpr int levels = 4;
  Rational t0(1, 40);
  const Rational gmin = std::min(s.g().g_short, s.g().g_long);
  if (t0 * 4 > gmin) t0 = gmin / 4;
  std::vector<CMatrix> table;
  Rational t = t0;
  for (int k = 0; k < levels; ++k, t /= 2) {
    const MacdonaldBasis up =
        construct_impl(UnitarySpec(s.pair_ptr(), shifted(s.g(), t), s.c(), s.allow_degenerate()), false);
    const MacdonaldBasis down =
        construct_impl(UnitarySpec(s.pair_ptr(), shifted(s.g(), -t), s.c(), s.allow_degenerate()), false);
    for (const auto& [i, j] : up.unresolved)
      if (std::find(rows.begin(), rows.end(), i) != rows.end()) return;
    for (const auto& [i, j] : down.unresolved)
      if (std::find(rows.begin(), rows.end(), i) != rows.end()) return;
    CMatrix avg(ix(rows.size()), b.coefficients.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
      avg.row(ix(r)) = 0.5 * (up.coefficients.row(ix(rows[r])) + down.coefficients.row(ix(rows[r])));
    table.push_back(avg);
  }
  CMatrix prev;
  for (int m = 1; m < levels; ++m) {
    const double f = std::pow(4.0, m);
    prev = table.back();
    for (int k = levels - 1; k >= m; --k) table[k] = (f * table[k] - table[k - 1]) / (f - 1.0);
  }
  const CMatrix& best = table.back();
  b.continuation_error = max_abs(best - prev) / std::max(1.0, max_abs(best));
  for (std::size_t r = 0; r < rows.size(); ++r) b.coefficients.row(ix(rows[r])) = best.row(ix(r));
  b.continued = std::move(b.unresolved);
  b.unresolved.clear();
}

MacdonaldBasis construct_impl(const UnitarySpec& s, bool continue_degenerate) {
  MacdonaldBasis b(s);
  const TruncatedCone& primal = b.primal;
  const TruncatedCone& hat = b.hat;
  const RootSystem& R = s.R();
  const RootSystem& Rh = s.Rhat();
  const std::size_t N = primal.size();
  if (hat.size() != N) throw InvariantViolation("cone sizes differ");

  const CMatrix M = monomial_matrix(s, primal, hat);
  b.condition = condition_number(M);
  if (!(b.condition <= kConditionCeiling)) {
    std::ostringstream os;
    os << "evaluation matrix is numerically singular for " << R.label() << " c=" << s.c()
       << ": condition " << b.condition;
    throw InvariantViolation(os.str());
  }

  GridOperators ops;
  add_operator(ops, s, primal, hat, M, Rh.theta_labels());
  if (smallest_gap(ops, primal) < kGapFloor)
    for (const auto& w : Rh.small_weights())
      if (w != Rh.theta_labels()) add_operator(ops, s, primal, hat, M, w);
  b.operators = ops.omegas;

  // the monomial-basis operators must be dominance-triangular with diagonal E_omega
  double scale = 0.0;
  for (std::size_t o = 0; o < ops.omegas.size(); ++o) {
    const CMatrix& C = ops.monomial[o];
    scale = std::max(scale, max_abs(C));
    for (std::size_t i = 0; i < N; ++i) {
      b.diagonal_defect = std::max(b.diagonal_defect, std::abs(C(ix(i), ix(i)) - ops.eigen[o][i]));
      for (std::size_t k = 0; k < N; ++k)
        if (k != i && !R.dominance_leq(primal.weight(k), primal.weight(i)))
          b.triangularity_defect = std::max(b.triangularity_defect, std::abs(C(ix(i), ix(k))));
    }
  }
  if (scale > 0) {
    b.diagonal_defect /= scale;
    b.triangularity_defect /= scale;
  }

  b.coefficients = CMatrix::Zero(ix(N), ix(N));
  b.min_gap = INFINITY;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> unresolved(N);
  std::vector<double> row_gap(N, INFINITY);
  parallel_for(N, [&](std::size_t i) {
    const Labels& lam = primal.weight(i);
    CVector a = CVector::Zero(ix(N));
    a(ix(i)) = 1.0;
    for (std::size_t j = i; j-- > 0;) {
      if (!R.dominance_leq(primal.weight(j), lam)) continue;
      std::size_t best = 0;
      double gap = -1.0;
      for (std::size_t o = 0; o < ops.eigen.size(); ++o) {
        const double d = std::abs(ops.eigen[o][i] - ops.eigen[o][j]);
        if (d > gap) {
          gap = d;
          best = o;
        }
      }
      row_gap[i] = std::min(row_gap[i], gap);
      if (gap < kGapFloor) {
        unresolved[i].emplace_back(i, j);
        continue;
      }
      const CMatrix& C = ops.monomial[best];
      Complex acc(0.0, 0.0);
      for (std::size_t k = j + 1; k <= i; ++k)
        if (a(ix(k)) != Complex(0.0, 0.0)) acc += C(ix(k), ix(j)) * a(ix(k));
      a(ix(j)) = acc / (ops.eigen[best][i] - ops.eigen[best][j]);
    }
    b.coefficients.row(ix(i)) = a.transpose();
  });
  for (std::size_t i = 0; i < N; ++i) {
    b.min_gap = std::min(b.min_gap, row_gap[i]);
    b.unresolved.insert(b.unresolved.end(), unresolved[i].begin(), unresolved[i].end());
  }
  if (continue_degenerate && !b.unresolved.empty()) continue_rows(s, b);
  b.values = b.coefficients * M;

  // every small omega, including those not used for the solve
  std::vector<Labels> all = Rh.small_weights();
  for (const auto& w : all)
    if (std::find(ops.omegas.begin(), ops.omegas.end(), w) == ops.omegas.end())
      add_operator(ops, s, primal, hat, M, w);
  for (std::size_t o = 0; o < ops.omegas.size(); ++o) {
    const CMatrix DV = b.values * ops.grid[o].transpose();
    for (std::size_t i = 0; i < N; ++i) {
      const double norm = b.values.row(ix(i)).cwiseAbs().maxCoeff();
      const double res =
          (DV.row(ix(i)) - ops.eigen[o][i] * b.values.row(ix(i))).cwiseAbs().maxCoeff();
      const double escale = std::max(1.0, std::abs(ops.eigen[o][i]));
      b.eigen_residual = std::max(b.eigen_residual, res / (norm * escale));
    }
  }
  for (std::size_t o = 0; o < ops.omegas.size(); ++o)
    for (std::size_t p = o + 1; p < ops.omegas.size(); ++p) {
      const CMatrix& A = ops.monomial[o];
      const CMatrix& B = ops.monomial[p];
      const double sc = std::max(1.0, max_abs(A) * max_abs(B));
      b.commutation_defect = std::max(b.commutation_defect, max_abs(A * B - B * A) / sc);
    }
  return b;
}

}  // namespace

MacdonaldBasis construct_macdonald(const UnitarySpec& s) { return construct_impl(s, true); }

OrthogonalityData orthogonality_data(const UnitarySpec& s, Precision p) {
  const TruncatedCone primal = TruncatedCone::build(s, Side::primal);
  const TruncatedCone hat = TruncatedCone::build(s, Side::hat);
  const UnitarySpec sh = s.swapped();
  OrthogonalityData d;
  d.delta.resize(primal.size());
  d.delta_hat.resize(hat.size());
  if (p == Precision::extended) {
    Ext n0(0), n0h(0);
    for (std::size_t i = 0; i < primal.size(); ++i) {
      const Ext v = delta_weight<Ext>(s, primal.weight(i));
      d.delta[i] = static_cast<double>(v);
      n0 += v;
    }
    for (std::size_t j = 0; j < hat.size(); ++j) {
      const Ext v = delta_weight<Ext>(sh, hat.weight(j));
      d.delta_hat[j] = static_cast<double>(v);
      n0h += v;
    }
    d.N0 = static_cast<double>(n0);
    d.N0_hat = static_cast<double>(n0h);
  } else {
    for (std::size_t i = 0; i < primal.size(); ++i) {
      d.delta[i] = delta_weight<double>(s, primal.weight(i));
      d.N0 += d.delta[i];
    }
    for (std::size_t j = 0; j < hat.size(); ++j) {
      d.delta_hat[j] = delta_weight<double>(sh, hat.weight(j));
      d.N0_hat += d.delta_hat[j];
    }
  }
  return d;
}

Complex discrete_inner_product(const std::vector<double>& weights, const CVector& f, const CVector& h) {
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < weights.size(); ++k) s += f(ix(k)) * std::conj(h(ix(k))) * weights[k];
  return s;
}

MacdonaldBasis gram_schmidt_macdonald(const UnitarySpec& s) {
  MacdonaldBasis b(s);
  const RootSystem& R = s.R();
  const std::size_t N = b.primal.size();
  const CMatrix M = monomial_matrix(s, b.primal, b.hat);
  b.condition = condition_number(M);
  std::vector<double> w(b.hat.size());
  const UnitarySpec sh = s.swapped();
  for (std::size_t j = 0; j < b.hat.size(); ++j) w[j] = delta_weight<double>(sh, b.hat.weight(j));

  b.coefficients = CMatrix::Zero(ix(N), ix(N));
  b.values = CMatrix::Zero(ix(N), ix(b.hat.size()));
  std::vector<double> norms(N);
  for (std::size_t i = 0; i < N; ++i) {
    const CVector m = M.row(ix(i)).transpose();
    CVector coeff = CVector::Zero(ix(N));
    coeff(ix(i)) = 1.0;
    CVector val = m;
    for (std::size_t j = 0; j < i; ++j) {
      if (!R.dominance_leq(b.primal.weight(j), b.primal.weight(i))) continue;
      const CVector pj = b.values.row(ix(j)).transpose();
      const Complex r = discrete_inner_product(w, m, pj) / norms[j];
      coeff -= r * b.coefficients.row(ix(j)).transpose();
      val -= r * pj;
    }
    b.coefficients.row(ix(i)) = coeff.transpose();
    b.values.row(ix(i)) = val.transpose();
    norms[i] = discrete_inner_product(w, val, val).real();
  }
  return b;
}

double max_coefficient_deviation(const MacdonaldBasis& a, const MacdonaldBasis& b) {
  if (a.coefficients.rows() != b.coefficients.rows())
    throw InvariantViolation("bases of different size");
  return max_abs(a.coefficients - b.coefficients);
}

CMatrix normalized_values(const MacdonaldBasis& b) {
  CMatrix P = b.values;
  const std::size_t o = origin_index(b.hat);
  for (Eigen::Index i = 0; i < P.rows(); ++i) P.row(i) /= b.values(i, ix(o));
  return P;
}

OrthogonalityReport orthogonality_check(const MacdonaldBasis& b, const OrthogonalityData& d) {
  OrthogonalityReport rep;
  const CMatrix P = normalized_values(b);
  const Eigen::Index N = P.rows();
  // G[lam][lam'] = sum_mu P_lam(mu) conj(P_lam'(mu)) Delta^(mu)
  Eigen::VectorXd wh(N), wp(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    wh(k) = d.delta_hat[k];
    wp(k) = d.delta[k];
  }
  const CMatrix G = P * wh.asDiagonal() * P.adjoint();
  const CMatrix H = P.transpose() * wp.asDiagonal() * P.conjugate();
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) {
      if (i == j) {
        rep.norm_residual = std::max(rep.norm_residual, std::abs(wp(i) * G(i, i).real() - d.N0) / d.N0);
        rep.dual_norm_residual =
            std::max(rep.dual_norm_residual, std::abs(wh(i) * H(i, i).real() - d.N0) / d.N0);
      } else {
        rep.off_diagonal = std::max(rep.off_diagonal, std::abs(G(i, j)) / d.N0);
        rep.dual_off_diagonal = std::max(rep.dual_off_diagonal, std::abs(H(i, j)) / d.N0);
      }
    }
  rep.min_specialization = INFINITY;
  for (std::size_t i = 0; i < b.primal.size(); ++i) {
    const Complex v = b.value_at_origin(i);
    const double formula = principal_specialization<double>(b.spec, b.primal.weight(i));
    rep.specialization_defect = std::max(rep.specialization_defect, std::abs(v - formula) / formula);
    rep.min_specialization = std::min(rep.min_specialization, formula);
  }
  return rep;
}

double norm_identity_residual(const MacdonaldBasis& b, const OrthogonalityData& d) {
  return orthogonality_check(b, d).norm_residual;
}

CMatrix s_matrix(const MacdonaldBasis& b, const OrthogonalityData& d) {
  CMatrix S = normalized_values(b);
  for (Eigen::Index i = 0; i < S.rows(); ++i)
    for (Eigen::Index j = 0; j < S.cols(); ++j) S(i, j) *= std::sqrt(d.delta[i] * d.delta_hat[j] / d.N0);
  return S;
}

double unitarity_defect(const CMatrix& S) {
  return max_abs(S.adjoint() * S - CMatrix::Identity(S.rows(), S.cols()));
}

double duality_defect(const CMatrix& S, const CMatrix& S_hat) {
  if (S.rows() != S_hat.cols() || S.cols() != S_hat.rows()) throw InvariantViolation("S-matrix shapes differ");
  return max_abs(S_hat.transpose() - S);
}

double pieri_residual(const MacdonaldBasis& b, const Labels& omega) {
  const CMatrix P = normalized_values(b);
  const CMatrix A = finite_operator(b.primal, omega).matrix;
  const Eigenvalue E(b.spec, omega);
  CVector e(ix(b.hat.size()));
  for (std::size_t j = 0; j < b.hat.size(); ++j) e(ix(j)) = E.at(b.hat.weight(j));
  const CMatrix lhs = P * e.asDiagonal();
  const CMatrix rhs = A * P;
  const double sc = max_abs(lhs);
  return sc > 0 ? max_abs(lhs - rhs) / sc : max_abs(rhs);
}

std::vector<Labels> quasi_minuscule_path(const TruncatedCone& cone, const Labels& lam) {
  const RootSystem& R = cone.R();
  if (!cone.contains(lam)) throw ConfigError("weight outside the cone: " + format_labels(lam));
  std::vector<Labels> steps;
  const auto orbit = R.weyl_orbit(R.theta_labels());
  for (int a = 0; a < R.num_positive_roots(); ++a)
    if (std::find(orbit->begin(), orbit->end(), R.root_labels(a)) != orbit->end())
      steps.push_back(R.root_labels(a));
  for (const auto& m : R.minuscule_weights()) steps.push_back(m);

  const Labels zero(R.rank(), 0);
  std::unordered_map<Labels, Labels, LabelsHash> parent;
  parent.emplace(zero, zero);
  std::deque<Labels> queue{zero};
  while (!queue.empty() && !parent.count(lam)) {
    const Labels x = queue.front();
    queue.pop_front();
    for (const auto& st : steps) {
      Labels y(x);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += st[i];
      if (!cone.contains(y) || parent.count(y)) continue;
      parent.emplace(y, x);
      queue.push_back(y);
    }
  }
  if (!parent.count(lam)) throw InvariantViolation("no path to " + format_labels(lam));
  std::vector<Labels> path;
  for (Labels x = lam; x != zero; x = parent.at(x)) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::uint64_t cone_size_series(const std::vector<int>& marks, int c) {
  std::vector<std::uint64_t> series(c + 1, 1);  // (1 - z)^{-1}
  for (int k : marks)
    for (int d = k; d <= c; ++d) series[d] += series[d - k];
  return series[c];
}

std::vector<int> cone_marks(const AdmissiblePair& pair) {
  return pair.R().coroot_coeffs(pair.psi_hat());
}

std::vector<Multiplicity> regular_samples(std::shared_ptr<const AdmissiblePair> pair, int c,
                                          std::size_t count) {
  static const std::pair<const char*, const char*> candidates[] = {
      {"7/10", "11/20"}, {"1/3", "2/5"}, {"3/7", "5/9"}, {"5/11", "8/13"},
      {"2/7", "3/11"},   {"4/9", "7/17"}, {"6/13", "9/19"}};
  std::vector<Multiplicity> out;
  for (const auto& [gs, gl] : candidates) {
    Multiplicity g{parse_rational(gs), parse_rational(gl)};
    if (pair->R().simply_laced()) g.g_long = g.g_short;
    const UnitarySpec s(pair, g, c, true);
    if (!s.is_regular()) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Multiplicity& o) {
          return o.g_short == g.g_short && o.g_long == g.g_long;
        }))
      continue;
    out.push_back(g);
    if (out.size() == count) break;
  }
  return out;
}

NondegeneracyReport nondegeneracy_scan(std::shared_ptr<const AdmissiblePair> pair, int c,
                                       const std::vector<Multiplicity>& samples,
                                       bool allow_degenerate) {
  NondegeneracyReport rep;
  rep.samples = samples;
  rep.min_gap = INFINITY;
  std::map<std::pair<std::size_t, std::size_t>, double> worst;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    const UnitarySpec s(pair, samples[si], c, allow_degenerate);
    const TruncatedCone cone = TruncatedCone::build(s, Side::primal);
    const std::size_t N = cone.size();
    rep.cone_size = N;
    const UnitarySpec sh = s.swapped();
    std::vector<std::vector<Complex>> ev;
    for (const auto& w : s.Rhat().small_weights()) {
      const Eigenvalue E(sh, w);
      std::vector<Complex> v(N);
      parallel_for(N, [&](std::size_t i) { v[i] = E.at(cone.weight(i)); });
      ev.push_back(std::move(v));
    }
    // pairs whose first coordinate differs by more than the floor are separated already
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    const auto& e0 = ev.front();
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return e0[x].real() < e0[y].real(); });
    rep.pairs = N * (N - 1) / 2;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const std::size_t i = order[p], j = order[q];
        if (N > 3000 && e0[j].real() - e0[i].real() > kGapFloor) break;
        double best = 0.0;
        for (const auto& v : ev) best = std::max(best, std::abs(v[i] - v[j]));
        const auto key = std::minmax(i, j);
        auto [it, fresh] = worst.emplace(key, best);
        if (!fresh) it->second = std::min(it->second, best);
        if (best <= kGapFloor) rep.failures.push_back({si, cone.weight(key.first), cone.weight(key.second)});
      }
  }
  for (const auto& [key, g] : worst) rep.min_gap = std::min(rep.min_gap, g);
  return rep;
}

E7LineReport e7_degeneration_check(const NondegeneracyReport& scan, const RootSystem& E7, int c) {
  E7LineReport rep;
  rep.c_tilde = (11 * c + 11) / 12;
  // alpha_1 + alpha_2 + alpha_6 in fundamental-weight labels
  Labels nu(E7.rank(), 0);
  for (int i : {0, 1, 5})
    for (int k = 0; k < E7.rank(); ++k) nu[k] += E7.cartan(i, k);
  auto level = [&](const Labels& l) {
    int s = 0;
    for (int k = 0; k < E7.rank(); ++k) s += E7.coroot_coeffs(E7.highest_root())[k] * l[k];
    return s;
  };
  std::set<std::pair<Labels, Labels>> seen;
  for (const auto& f : scan.failures) {
    if (!seen.emplace(f.lam, f.mu).second) continue;
    ++rep.degenerate_pairs;
    Labels d(f.lam.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = f.mu[k] - f.lam[k];
    std::optional<int> mult;
    bool on_line = true;
    for (std::size_t k = 0; k < d.size() && on_line; ++k) {
      if (nu[k] == 0) {
        on_line = d[k] == 0;
      } else if (d[k] % nu[k] != 0) {
        on_line = false;
      } else if (!mult) {
        mult = d[k] / nu[k];
      } else {
        on_line = *mult == d[k] / nu[k];
      }
    }
    if (!on_line) ++rep.off_line;
    if (level(f.lam) <= rep.c_tilde || level(f.mu) <= rep.c_tilde) ++rep.inside_smaller;
    if (12 * std::min(level(f.lam), level(f.mu)) < 11 * c) ++rep.below_bound;
  }
  return rep;
}

std::string export_polynomials(const MacdonaldBasis& b) {
  const UnitarySpec& s = b.spec;
  std::ostringstream os;
  os << "# umac polynomials v1\n";
  os << "# type " << s.R().label() << " pair " << to_string(s.pair().flag()) << " g_short "
     << to_string(s.g().g_short) << " g_long " << to_string(s.g().g_long) << " c " << s.c() << "\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < b.primal.size(); ++i) {
    const SymmetricPolynomial p = b.polynomial(i);
    os << "# leading " << format_labels(p.leading) << "\n";
    for (const auto& [lam, a] : p.terms) os << format_labels(lam) << " " << a.real() << " " << a.imag() << "\n";
  }
  return os.str();
}

}  // namespace umac
