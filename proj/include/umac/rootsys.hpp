#pragma once

#include "umac/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umac {

// integer coordinates in the fundamental-weight basis
using Labels = std::vector<int>;

struct LabelsHash {
  std::size_t operator()(const Labels& v) const noexcept;
};

enum class WeightClass { minuscule, quasi_minuscule, small, not_small };
const char* to_string(WeightClass c);

// letters are 0-based simple reflection indices, applied first to last
struct WeylWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
};

class OrbitCache;

class RootSystem {
 public:
  static RootSystem build(const std::string& family, int rank);
  // accepts "A3", "E6", "G2", ...
  static RootSystem build(const std::string& label);
  static RootSystem from_simple_roots(char family, int rank, std::vector<QVec> simple,
                                     bool coroot_system);

  RootSystem dual() const;

  char family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return static_cast<int>(simple_[0].size()); }
  std::string label() const;
  bool is_coroot_system() const { return coroot_system_; }
  bool simply_laced() const { return simply_laced_; }

  const std::vector<QVec>& simple_roots() const { return simple_; }
  const std::vector<QVec>& fundamental_weights() const { return fundamental_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return cartan_inv_; }

  // positive roots, ordered by height then lexicographically in simple-root coefficients
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const QVec& root(int a) const { return roots_[a]; }
  const std::vector<int>& root_coeffs(int a) const { return root_coeffs_[a]; }
  const std::vector<int>& coroot_coeffs(int a) const { return coroot_coeffs_[a]; }
  const Labels& root_labels(int a) const { return root_labels_[a]; }
  const Rational& norm2(int a) const { return norm2_[a]; }
  int height(int a) const { return height_[a]; }
  bool is_short(int a) const { return norm2_[a] == short_norm2_; }
  int simple_root_index(int i) const { return simple_index_[i]; }
  // index of +-root with these ambient coordinates; sign returned separately
  std::optional<std::pair<int, int>> find_root(const QVec& v) const;

  int highest_root() const { return highest_; }
  int highest_short_root() const { return highest_short_; }
  int coxeter_number() const { return coxeter_; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int index() const { return index_; }
  std::uint64_t weyl_order() const { return weyl_order_; }

  // lattice helpers
  QVec to_ambient(const Labels& lam) const;
  QVec to_ambient(const QVec& rational_labels) const;
  std::optional<Labels> to_labels(const QVec& v) const;
  QVec rational_labels(const QVec& v) const;
  int pairing(const Labels& lam, int a) const;  // <lam, a^v> for positive root a
  Rational pairing(const QVec& rational_labels, int a) const;
  std::int64_t twice_height(const Labels& lam) const;  // 2 <lam, rho^v>
  bool is_dominant(const Labels& lam) const;

  // Weyl group
  Labels reflect(const Labels& lam, int i) const;
  Labels apply(const WeylWord& w, const Labels& lam) const;
  Labels apply_inverse(const WeylWord& w, const Labels& lam) const;
  std::pair<Labels, WeylWord> dominant_representative(const Labels& lam) const;
  int count_inversions(const Labels& lam) const;  // # positive roots with <lam, a^v> < 0
  // orbit sorted by height descending then labels ascending; cached per dominant weight
  std::shared_ptr<const std::vector<Labels>> weyl_orbit(const Labels& lam) const;
  std::vector<std::pair<Labels, int>> signed_regular_orbit(const Labels& lam) const;
  Labels dual_weight(const Labels& lam) const;  // -w_0 lam

  // dominance and saturated sets
  std::optional<std::vector<Rational>> simple_root_expansion(const Labels& diff) const;
  bool dominance_leq(const Labels& mu, const Labels& lam) const;
  std::vector<Labels> dominant_weights_below(const Labels& lam) const;
  std::vector<Labels> saturated_set(const Labels& lam) const;
  WeightClass classify(const Labels& omega) const;
  std::vector<Labels> parabolic_orbit(const Labels& mu, const Labels& omega) const;
  std::vector<Labels> small_weights() const;
  std::vector<Labels> minuscule_weights() const;
  Labels fundamental(int i) const;
  Labels theta_labels() const { return root_labels_[highest_short_]; }
  Labels phi_labels() const { return root_labels_[highest_]; }

  // one root per line as rational coordinate tuples
  std::string dump() const;

 private:
  RootSystem() = default;
  void finish();

  char family_ = 'A';
  int rank_ = 0;
  bool coroot_system_ = false;
  bool simply_laced_ = true;
  std::vector<QVec> simple_;
  std::vector<QVec> fundamental_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<QVec> roots_;
  std::vector<std::vector<int>> root_coeffs_;
  std::vector<std::vector<int>> coroot_coeffs_;
  std::vector<Labels> root_labels_;
  std::vector<Rational> norm2_;
  std::vector<int> height_;
  std::vector<int> simple_index_;
  std::vector<std::int64_t> twice_rho_check_;
  Rational short_norm2_;
  int highest_ = 0;
  int highest_short_ = 0;
  int coxeter_ = 0;
  int dual_coxeter_ = 0;
  std::vector<int> exponents_;
  int index_ = 0;
  std::uint64_t weyl_order_ = 0;
  std::shared_ptr<OrbitCache> cache_;
};

// total order used by cones: height ascending, then labels ascending
bool cone_order_less(const RootSystem& R, const Labels& a, const Labels& b);

std::string format_labels(const Labels& lam);

}  // namespace umac
