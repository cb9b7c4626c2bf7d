#include "common.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace umac;
using namespace umac::testing;
using Catch::Approx;

namespace {
const std::vector<std::pair<Rational, Rational>> kGrid{
    {Rational(7, 10), Rational(11, 20)}, {Rational(1), Rational(1)}, {Rational(1, 3), Rational(2, 5)}};
}

TEST_CASE("rho_g in rank one and simply laced types", "[macparams]") {
  const UnitarySpec a1 = make_spec("A", 1, DualFlag::self, Rational(3, 7), Rational(3, 7), 2);
  CHECK(a1.rho_g() == QVec{Rational(3, 7)});
  CHECK(a1.rho_pairing(0) == Rational(3, 7));
  for (const char* f : {"A", "D"}) {
    const int n = 4;
    const UnitarySpec s = make_spec(f, n, DualFlag::self, Rational(2, 3), Rational(2, 3), 3);
    const RhoWeights w = s.rho_weights();
    for (int i = 0; i < n; ++i) {
      CHECK(w.rho_phi_minus_theta[i] == Rational(0));
      CHECK(s.rho_g()[i] == Rational(2, 3) * w.rho[i]);
    }
  }
}

TEST_CASE("rho_g splits over short and long roots", "[macparams]") {
  const UnitarySpec s = make_spec("G", 2, DualFlag::self, Rational(7, 10), Rational(11, 20), 2);
  const RhoWeights w = s.rho_weights();
  const RootSystem& R = s.R();
  for (int i = 0; i < 2; ++i) {
    const int a = R.simple_root_index(i);
    CHECK(s.rho_pairing(a) == Rational(7, 10) * R.pairing(w.rho_theta, a) +
                                  Rational(11, 20) * R.pairing(w.rho_phi_minus_theta, a));
  }
}

TEST_CASE("h_g against the tabulated values", "[macparams]") {
  const Rational gs(7, 10), gl(11, 20);
  for (int n = 1; n <= 4; ++n)
    CHECK(make_spec("A", n, DualFlag::self, gs, gs, 2).h_g() == Rational(n + 1) * gs);
  CHECK(make_spec("G", 2, DualFlag::self, gs, gl, 2).h_g() == 3 * gl + gs);
  for (int n = 2; n <= 4; ++n)
    CHECK(make_spec("B", n, DualFlag::dual, gs, gl, 2).h_g() == Rational(2 * (n - 1)) * gl + 2 * gs);
  for (int n = 2; n <= 4; ++n)
    CHECK(make_spec("B", n, DualFlag::self, gs, gl, 2).h_g() == Rational(2 * (n - 1)) * gl + gs);
  CHECK(make_spec("F", 4, DualFlag::self, gs, gl, 2).h_g() == 6 * gl + 3 * gs);
}

TEST_CASE("kappa in rank one", "[macparams]") {
  const UnitarySpec s = make_spec("A", 1, DualFlag::self, Rational(1), Rational(1), 2);
  CHECK(s.kappa() == Approx(std::numbers::pi / 4).epsilon(1e-15));
}

TEST_CASE("truncation identity and unit modulus", "[macparams]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    for (DualFlag f : flags_for(R))
      for (const auto& [gs, gl] : kGrid)
        for (int c = 2; c <= 5; ++c) {
          const UnitarySpec s = make_spec(t.family, t.rank, f, gs, gl, c);
          INFO(R.label() << " " << to_string(f) << " c=" << c);
          CHECK(s.truncation_defect() < 1e-12);
          for (int a = 0; a < R.num_positive_roots(); ++a) {
            CHECK(std::abs(std::abs(s.t_root(a)) - 1.0) < 1e-15);
            CHECK(std::abs(std::abs(s.q_root(a)) - 1.0) < 1e-15);
          }
        }
  }
}

TEST_CASE("the specialization is symmetric under the swap", "[macparams]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    for (DualFlag f : flags_for(R))
      for (const auto& [gs, gl] : kGrid) {
        const UnitarySpec s = make_spec(t.family, t.rank, f, gs, gl, 3);
        const UnitarySpec h = s.swapped();
        CHECK(s.period() == h.period());
        CHECK(s.h_g() == h.h_g());
        CHECK(s.rho_hat_g() == h.rho_g());
      }
  }
}

TEST_CASE("root of unity for rational g", "[macparams]") {
  const UnitarySpec s = make_spec("G", 2, DualFlag::self, Rational(7, 10), Rational(11, 20), 3);
  const int theta = s.R().highest_short_root();
  const Rational order = s.pair().m_of(theta) * (s.h_g() + s.c());
  const std::int64_t n = order.numerator();
  std::complex<double> z(1.0, 0.0);
  for (std::int64_t k = 0; k < n; ++k) z *= s.q_root(theta);
  CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-10);
}

TEST_CASE("trigonometric Pochhammer symbol", "[macparams]") {
  CHECK(trig_pochhammer(0.3, 0.7, 0) == 1.0);
  CHECK(trig_pochhammer(1.0, std::numbers::pi / 4, 2) == Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(trig_pochhammer(2.0, std::numbers::pi / 4, 3)) < 1e-15);
  const UnitarySpec s = make_spec("A", 1, DualFlag::self, Rational(1), Rational(1), 2);
  CHECK(pochhammer<double>(s, Rational(1), Rational(2), 3) == 0.0);
  CHECK(pochhammer<double>(s, Rational(1), Rational(1), 2) == Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("regularity of g", "[macparams]") {
  CHECK(make_spec("A", 1, DualFlag::self, Rational(1, 2), Rational(1, 2), 3).is_regular());
  CHECK_FALSE(make_spec("A", 1, DualFlag::self, Rational(1), Rational(1), 3).is_regular());
  // <rho_g, a^v> = height(a)/3 hits 1 on the highest root and m h_g - 1 = 1/3 on simple roots
  const RegularityReport r = make_spec("A", 3, DualFlag::self, Rational(1, 3), Rational(1, 3), 2).regularity();
  CHECK_FALSE(r.regular);
  CHECK(r.violating_roots.size() == 4);
  CHECK(make_spec("B", 3, DualFlag::self, Rational(7, 10), Rational(11, 20), 2).is_regular());
}

TEST_CASE("moment bounds hold on every cone point", "[macparams]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    for (DualFlag f : flags_for(R))
      for (const auto& [gs, gl] : kGrid) {
        const UnitarySpec s = make_spec(t.family, t.rank, f, gs, gl, 3);
        const int psi_hat = s.pair().psi_hat();
        // brute force over the box spanned by the bound on each label
        std::vector<Labels> cone{Labels(static_cast<std::size_t>(R.rank()), 0)};
        for (int i = 0; i < R.rank(); ++i) {
          std::vector<Labels> next;
          for (const auto& lam : cone)
            for (int k = 0; k <= 3; ++k) {
              Labels l = lam;
              l[i] = k;
              next.push_back(l);
            }
          cone = std::move(next);
        }
        for (const auto& lam : cone)
          if (R.pairing(lam, psi_hat) <= 3) CHECK(s.moment_bounds_hold(lam));
      }
  }
}

TEST_CASE("configuration errors", "[macparams]") {
  auto a1 = AdmissiblePair::make("A", 1, DualFlag::self);
  CHECK_THROWS_AS(UnitarySpec(a1, Multiplicity{Rational(1), Rational(1)}, 1), ConfigError);
  CHECK_THROWS_AS(UnitarySpec(a1, Multiplicity{Rational(0), Rational(0)}, 2), ConfigError);
  auto e7 = AdmissiblePair::make("E", 7, DualFlag::self);
  try {
    UnitarySpec(e7, Multiplicity{Rational(1), Rational(1)}, 12);
    FAIL("E7 with c = 12 accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("not be a proper multiple of 6") != std::string::npos);
  }
  CHECK_NOTHROW(UnitarySpec(e7, Multiplicity{Rational(1), Rational(1)}, 12, true));
  CHECK_NOTHROW(UnitarySpec(e7, Multiplicity{Rational(1), Rational(1)}, 6));
  CHECK_THROWS_AS(parse_dual_flag("both"), ConfigError);
}
