#pragma once

#include "klcalc/affine_pbw.hpp"

namespace testing_support {

inline klcalc::LieRealization realization(klcalc::RootType t, int rank) {
  return klcalc::build_realization(klcalc::build_root_system(t, rank));
}

// The same coefficients read at another level.
inline klcalc::StateVector at_level(const klcalc::StateVector& v, const klcalc::Rational& k) {
  klcalc::StateVector out(k, v.weight(), v.degree());
  for (const auto& [m, c] : v.terms()) out.add(m, c);
  return out;
}

inline klcalc::Weight all_ones(std::size_t dim, std::size_t count) {
  klcalc::Weight w(dim);
  for (std::size_t i = 0; i < count; ++i) w[i] = 1;
  return w;
}

}  // namespace testing_support
