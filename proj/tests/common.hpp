#pragma once

#include "umac/macparams.hpp"

#include <string>
#include <initializer_list>
#include <utility>
#include <vector>

namespace umac::testing {

struct TypeCase {
  std::string family;
  int rank;
};

// classical types of rank <= 4 with G2 and F4
inline std::vector<TypeCase> shipped_types() {
  return {{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"B", 4},
          {"C", 3}, {"C", 4}, {"D", 4}, {"G", 2}, {"F", 4}};
}

inline std::vector<DualFlag> flags_for(const RootSystem& R) {
  if (R.simply_laced()) return {DualFlag::self};
  return {DualFlag::self, DualFlag::dual};
}

inline UnitarySpec make_spec(const std::string& family, int rank, DualFlag flag, Rational gs,
                             Rational gl, int c) {
  auto pair = AdmissiblePair::make(family, rank, flag);
  if (pair->R().simply_laced()) gl = gs;
  return UnitarySpec(pair, Multiplicity{gs, gl}, c);
}

inline Labels labels(std::initializer_list<int> v) { return Labels(v); }

}  // namespace umac::testing
