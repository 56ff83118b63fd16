// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "thetakit/polynomial.hpp"

namespace thetakit::testing {

/// Sum of `terms` random monomials; homogeneous of `degree` when requested, else of degree <= degree.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int degree, int terms,
                              bool homogeneous) {
  Polynomial p(r);
  size_t n = r->nvars();
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    int d = homogeneous ? degree : static_cast<int>(rng() % static_cast<uint64_t>(degree + 1));
    for (int k = 0; k < d; ++k) ++e[rng() % n];
    long c = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 4) + 1;
    Scalar s = r->domain().is_rational() ? Scalar(mpq_class(c, den)) : Scalar(c, r->domain());
    p += Polynomial::monomial(r, e, s.convert(r->domain()));
  }
  return p;
}

}  // namespace thetakit::testing
