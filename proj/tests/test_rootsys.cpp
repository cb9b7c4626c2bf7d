#include "common.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace umac;
using namespace umac::testing;

TEST_CASE("rank one system", "[rootsys]") {
  const RootSystem R = RootSystem::build("A", 1);
  CHECK(R.num_positive_roots() == 1);
  CHECK(R.norm2(0) == Rational(2));
  CHECK(R.coxeter_number() == 2);
  CHECK(R.index() == 2);
  CHECK(R.exponents() == std::vector<int>{1});
}

TEST_CASE("G2 tables", "[rootsys]") {
  const RootSystem R = RootSystem::build("G2");
  CHECK(R.num_positive_roots() == 6);
  CHECK(R.coxeter_number() == 6);
  CHECK(R.index() == 1);
  CHECK(R.highest_root() != R.highest_short_root());
  CHECK(R.norm2(R.highest_root()) / R.norm2(R.highest_short_root()) == Rational(3));
}

TEST_CASE("E8 exponents", "[rootsys]") {
  CHECK(RootSystem::build("E", 8).exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("bad labels are configuration errors", "[rootsys]") {
  CHECK_THROWS_AS(RootSystem::build("B", 1), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("E", 5), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("G", 3), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("X", 2), ConfigError);
}

TEST_CASE("exponent invariants and Weyl order by orbit enumeration", "[rootsys]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    INFO(R.label());
    const auto& e = R.exponents();
    CHECK(std::accumulate(e.begin(), e.end(), 0) == R.num_positive_roots());
    CHECK(e.front() == 1);
    CHECK(e.back() == R.coxeter_number() - 1);
    std::uint64_t order = 1;
    for (int k : e) order *= static_cast<std::uint64_t>(k + 1);
    CHECK(order == R.weyl_order());
    const Labels rho(static_cast<std::size_t>(R.rank()), 1);
    CHECK(R.weyl_orbit(rho)->size() == R.weyl_order());
  }
}

TEST_CASE("duality swaps long and short roots", "[rootsys]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    const RootSystem D = R.dual();
    INFO(R.label());
    CHECK(D.num_positive_roots() == R.num_positive_roots());
    CHECK(D.coxeter_number() == R.coxeter_number());
    int short_r = 0, short_d = 0;
    for (int a = 0; a < R.num_positive_roots(); ++a) short_r += R.is_short(a);
    for (int a = 0; a < D.num_positive_roots(); ++a) short_d += D.is_short(a);
    if (R.simply_laced()) CHECK(short_d == short_r);
    else CHECK(short_d == R.num_positive_roots() - short_r);
  }
  CHECK(RootSystem::build("B", 3).dual().family() == 'C');
}

TEST_CASE("Weyl orbits", "[rootsys]") {
  CHECK(RootSystem::build("A1").weyl_orbit(labels({1}))->size() == 2);
  const RootSystem G2 = RootSystem::build("G2");
  CHECK(G2.weyl_orbit(G2.theta_labels())->size() == 6);
  const RootSystem E6 = RootSystem::build("E6");
  CHECK(E6.weyl_orbit(E6.fundamental(5))->size() == 27);
}

TEST_CASE("dominant representative", "[rootsys]") {
  const RootSystem A1 = RootSystem::build("A1");
  const auto [dom, w] = A1.dominant_representative(labels({-1}));
  CHECK(dom == labels({1}));
  CHECK(w.length() == 1);
  const auto [d0, w0] = A1.dominant_representative(labels({3}));
  CHECK(d0 == labels({3}));
  CHECK(w0.length() == 0);
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    for (int i = 0; i < R.rank(); ++i) {
      const Labels lam = R.fundamental(i);
      for (const auto& x : *R.weyl_orbit(lam)) {
        const auto [d, word] = R.dominant_representative(x);
        CHECK(d == lam);
        CHECK(R.apply(word, x) == lam);
        CHECK(R.apply_inverse(word, lam) == x);
        CHECK(static_cast<int>(word.length()) == R.count_inversions(x));
      }
    }
  }
}

TEST_CASE("dominance order", "[rootsys]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    CHECK(R.dominance_leq(Labels(static_cast<std::size_t>(R.rank()), 0), R.theta_labels()));
  }
  const RootSystem A2 = RootSystem::build("A2");
  CHECK_FALSE(A2.dominance_leq(labels({1, 0}), labels({0, 1})));
  CHECK_FALSE(A2.dominance_leq(labels({0, 1}), labels({1, 0})));
  CHECK_FALSE(RootSystem::build("A1").dominance_leq(labels({0}), labels({1})));
}

TEST_CASE("saturated sets and weight classes", "[rootsys]") {
  for (const auto& t : shipped_types()) {
    const RootSystem R = RootSystem::build(t.family, t.rank);
    INFO(R.label());
    const Labels theta = R.theta_labels();
    CHECK(R.classify(theta) == WeightClass::quasi_minuscule);
    const auto sat = R.saturated_set(theta);
    CHECK(sat.size() == R.weyl_orbit(theta)->size() + 1);
    for (const auto& w : R.minuscule_weights()) {
      CHECK(R.classify(w) == WeightClass::minuscule);
      const auto s = R.saturated_set(w);
      const auto& orbit = *R.weyl_orbit(w);
      CHECK(std::set<Labels>(s.begin(), s.end()) == std::set<Labels>(orbit.begin(), orbit.end()));
    }
    for (const auto& w : R.small_weights()) CHECK(R.classify(w) != WeightClass::not_small);
  }
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.saturated_set(labels({1, 1})).size() == 7);
  CHECK(RootSystem::build("A3").classify(labels({1, 0, 0})) == WeightClass::minuscule);
  const RootSystem E8 = RootSystem::build("E8");
  CHECK(E8.classify(E8.fundamental(0)) == WeightClass::small);
}

TEST_CASE("parabolic orbits", "[rootsys]") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.parabolic_orbit(labels({1, 0}), labels({1, 1})).size() == 2);
  CHECK(A2.parabolic_orbit(labels({0, 0}), labels({1, 1})).size() == 6);
  CHECK(A2.parabolic_orbit(labels({1, 1}), labels({1, 1})) == std::vector<Labels>{labels({1, 1})});
}

TEST_CASE("dual weight is -w0", "[rootsys]") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.dual_weight(labels({1, 0})) == labels({0, 1}));
  const RootSystem B3 = RootSystem::build("B3");
  for (int i = 0; i < 3; ++i) CHECK(B3.dual_weight(B3.fundamental(i)) == B3.fundamental(i));
}
