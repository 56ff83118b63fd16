// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thetakit/theta_chars.hpp"

namespace thetakit {

class HeisenbergError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polarization type (d1, d2) with d1 | d2.
struct PolarizationType {
  long d1 = 1, d2 = 1;

  static PolarizationType make(long d1, long d2);
  long order() const { return d1 * d2; }
  /// lcm(2, d1, d2); every phase for this type has this modulus.
  long phase_modulus() const;
  bool operator==(const PolarizationType&) const = default;
  std::string to_string() const;
};

/// (a1, a2, b1, b2) in Z/d1 x Z/d2 x Z/d1 x Z/d2.
struct KElement {
  long a1 = 0, a2 = 0, b1 = 0, b2 = 0;

  static KElement make(long a1, long a2, long b1, long b2, const PolarizationType& D);
  KElement plus(const KElement& o, const PolarizationType& D) const;
  KElement negated(const PolarizationType& D) const;
  KElement times(long k, const PolarizationType& D) const;
  bool is_zero() const { return a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0; }
  bool operator==(const KElement&) const = default;
};

/// exp(2 pi i k / m), 0 <= k < m.
struct Phase {
  long k = 0, m = 1;

  static Phase make(long k, long m);
  Phase operator*(const Phase& o) const;
  Phase inverse() const;
  bool is_one() const { return k == 0; }
  bool operator==(const Phase& o) const { return k * o.m == o.k * m; }
  std::string to_string() const;
};

struct HeisenbergElement {
  Phase phase;
  KElement k;
};

/// exp(-2 pi i (x_a . y_b - x_b . y_a) / D), reduced to modulus phase_modulus().
Phase ed_pairing(const KElement& x, const KElement& y, const PolarizationType& D);

HeisenbergElement heis_identity(const PolarizationType& D);
/// (a, x1, x2)(b, y1, y2) = (ab e^D(x1, y2), x1 + y1, x2 + y2).
HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h,
                           const PolarizationType& D);
HeisenbergElement heis_inverse(const HeisenbergElement& g, const PolarizationType& D);
bool heis_equal(const HeisenbergElement& g, const HeisenbergElement& h);

/// sigma_1, sigma_2, tau_1, tau_2.
std::vector<HeisenbergElement> heis_generators(const PolarizationType& D);

/// Delta basis index (i, j) -> i * d2 + j. Column c maps delta_c to phase[c] * delta_{perm[c]}.
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<size_t> perm, std::vector<Phase> phase);
  static MonomialMatrix identity(size_t n, long modulus);
  static MonomialMatrix scalar(size_t n, const Phase& p);

  size_t size() const { return perm_.size(); }
  const std::vector<size_t>& perm() const { return perm_; }
  const std::vector<Phase>& phase() const { return phase_; }
  bool is_scalar(Phase* value = nullptr) const;
  /// Number of fixed delta functions with trivial phase.
  long trace_if_permutation() const;

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix& o) const;

 private:
  std::vector<size_t> perm_;
  std::vector<Phase> phase_;
};

/// sigma(alpha, a, b) delta_x = alpha e(x - a, b) delta_{x - a}.
MonomialMatrix schrodinger_matrix(const HeisenbergElement& h, const PolarizationType& D);
/// delta_{i,j} -> delta_{-i,-j}.
MonomialMatrix involution_matrix(const PolarizationType& D);
long involution_trace(const PolarizationType& D);

std::pair<long, long> eigenspace_dims(const PolarizationType& D);
/// Integer coordinate vectors on the delta basis: delta_x + delta_{-x} or delta_x - delta_{-x}.
std::vector<std::vector<long>> eigenspace_basis(const PolarizationType& D, int sign);

using BundleParity = Parity;
std::pair<long, long> section_dims(const PolarizationType& D, BundleParity parity);

/// (h+ - h-, (n+ - n-)/4) with (n+, n-) the matching value distribution of the census.
std::pair<long, long> lefschetz_consistency(const PolarizationType& D, BundleParity parity);

/// gamma_z(alpha, k) = (alpha e^D(z, k), k).
struct GammaZ {
  KElement z;
  PolarizationType D;
  HeisenbergElement apply(const HeisenbergElement& h) const;
  /// Compares gamma_z o iota and iota o gamma_z on the generators.
  bool commutes_with_involution() const;
};
HeisenbergElement heis_involution(const HeisenbergElement& h, const PolarizationType& D);

struct SymmetricCounts {
  long bundles = 0;
  long structures_per_level = 0;
};
/// g = 2 uses both d1, d2; g = 1 uses d2 alone (requires d1 = 1).
SymmetricCounts symmetric_counts(int g, const PolarizationType& D);
/// #{x in K(D) : 2x = 0}.
long two_torsion_count(const PolarizationType& D);

}  // namespace thetakit
