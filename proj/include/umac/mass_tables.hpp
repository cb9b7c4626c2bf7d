#pragma once

#include "umac/macparams.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace umac {

std::uint64_t fnv1a64(std::string_view bytes);

enum class MassScale { phi, theta, kappa };

// affine expression a0 + an n + ak k + ac c; n/2 in range bounds is floor(n/2)
struct AffineExpr {
  std::int64_t a0 = 0, an = 0, ak = 0, ac = 0;
  bool half_n = false;
  std::int64_t eval(int n, int k, int c) const;
};

struct MassFactorSpec {
  MassScale scale = MassScale::phi;
  bool ranged = false;
  AffineExpr lo, hi;
  AffineExpr c0, c_theta, c_phi;
  AffineExpr length;
  int power = 1;
  int line = 0;
};

// one factor after substituting n, k and c
struct MassFactor {
  MassScale scale;
  Rational c0, c_theta, c_phi;
  int length;
  int power;
};

class MassTables {
 public:
  // throws ConfigError on syntax errors or checksum mismatch
  static MassTables parse(std::string_view text);
  static MassTables load_file(const std::string& path);
  static const MassTables& builtin();

  std::uint64_t checksum() const { return checksum_; }
  bool has(const RootSystem& R, DualFlag flag) const;
  std::vector<MassFactor> factors(const RootSystem& R, DualFlag flag, int c) const;

 private:
  std::map<std::string, std::vector<MassFactorSpec>> sections_;
  std::uint64_t checksum_ = 0;
};

// N_c from the table engine
template <class Real>
Real table_Nc(const UnitarySpec& s, const MassTables& tables = MassTables::builtin());

// prod_a (1 + <rho_g,a^v> : k_a)_{c-1} / prod_{a not simple} (1 + <rho_g,a^v> - g_a : k_a)_{c-1}
template <class Real>
Real ncrhat_Nc(const UnitarySpec& s);

// prod_k (1 + g e_k : k_phi)_{c-1}; requires g_short == g_long
template <class Real>
Real exponent_Nc(const UnitarySpec& s);

// the equal-label / NcRhat identities are asserted only where they apply
bool ncrhat_applies(const UnitarySpec& s);

}  // namespace umac
