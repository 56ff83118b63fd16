// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetakit/binary_form.hpp"
#include "thetakit/polynomial.hpp"

namespace thetakit {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

size_t rational_rank(RationalMatrix m);
mpq_class rational_determinant(RationalMatrix m);
/// Some solution of A x = b, free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<mpq_class>> rational_solve(RationalMatrix A, std::vector<mpq_class> b);

/// Middle catalecticant of a ternary quartic: entry (i, j) = d^{m_i + m_j} F for the quadric
/// operators m = (d0^2, d0 d1, d0 d2, d1^2, d1 d2, d2^2). Coefficients must be rational.
RationalMatrix catalecticant(const Polynomial& F);

struct ApolarResult {
  bool member = false;
  /// F = sum lambda_i L_i^deg(F) when member.
  std::vector<mpq_class> lambda;
};
ApolarResult apolar_membership(const Polynomial& F, const std::vector<Polynomial>& forms);

struct VspDimension {
  long value = 0;
  /// h(n+1) >= N(n,d) + 1.
  bool admissible = false;
};
VspDimension vsp_dim(long n, long d, long h);

struct TwoConicsRecord {
  Polynomial determinant;
  bool determinant_matches = false;
  /// Printed section form pulled back along the matching Segre identification.
  bool segre_matches = false;
  std::string segre_substitution;
  /// det(lambda Q + mu Q') as a binary quartic, constant-free coefficients.
  std::vector<mpq_class> pencil_discriminant;
  /// (lambda : mu) of a pencil member of rank <= 2, when found.
  std::optional<std::pair<mpz_class, mpz_class>> certificate;
  size_t certificate_rank = 0;
  bool certified() const { return determinant_matches && segre_matches && certificate.has_value(); }
};
TwoConicsRecord vsp_ord_example();

/// The quartic threefold in x0..x4 and its hyperplane section G in x0..x3.
Polynomial x43_quartic(Domain dom = Domain::rationals());
extern const char* const x43_text;
extern const char* const x43_G_text;

struct SegreRecord {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string computed;
};
/// Records (a)..(g) for the quartic threefold.
std::vector<SegreRecord> segre_suite();

}  // namespace thetakit
