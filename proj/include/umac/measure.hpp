#pragma once

#include "umac/macparams.hpp"

namespace umac {

// Delta(lam) on the R side of s; pass s.swapped() for the hat weights
template <class Real>
Real delta_weight(const UnitarySpec& s, const Labels& lam);

// p_lam(rho^_g) from the product formula; c_lam is its reciprocal
template <class Real>
Real principal_specialization(const UnitarySpec& s, const Labels& lam);

}  // namespace umac
