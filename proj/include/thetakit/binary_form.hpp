// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "thetakit/polynomial.hpp"

namespace thetakit {

/// Projective point with rational coordinates, stored as a primitive integer vector whose
/// first nonzero coordinate is positive.
using ProjectivePoint = std::vector<mpz_class>;

ProjectivePoint normalize_point(const std::vector<mpq_class>& coords);
ProjectivePoint make_point(std::initializer_list<long> coords);
std::string point_to_string(const ProjectivePoint& p);

struct LineRoot {
  ProjectivePoint point;
  unsigned multiplicity;
};

struct BinaryFormFactorization {
  bool identically_zero = false;
  std::vector<LineRoot> roots;
  /// Residual factor in (s,t) with no rational root; absent when the form splits.
  std::optional<Polynomial> nonsplit_factor;
  unsigned degree = 0;
};

/// Coefficients c_0..c_d of F(s*p + t*q) = sum c_k s^(d-k) t^k.
std::vector<mpq_class> binary_form_on_line(const Polynomial& f, const ProjectivePoint& p,
                                           const ProjectivePoint& q);

/// Rational roots (s:t) with multiplicities of a binary form given by its coefficients.
struct BinaryRoots {
  std::vector<std::pair<std::pair<mpz_class, mpz_class>, unsigned>> roots;
  std::vector<mpq_class> residual;  // coefficients of the leftover form, highest s power first
};
BinaryRoots rational_roots(const std::vector<mpq_class>& coeffs);

BinaryFormFactorization restrict_to_line(const Polynomial& f, const ProjectivePoint& p,
                                         const ProjectivePoint& q);

/// Integer points spanning {x : A x = 0} for a rational matrix A with full row rank.
std::vector<ProjectivePoint> kernel_basis(const std::vector<std::vector<mpq_class>>& rows,
                                          size_t ncols);

}  // namespace thetakit
