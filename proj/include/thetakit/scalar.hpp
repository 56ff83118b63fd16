// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thetakit {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(uint64_t n);

/// Coefficient domain: the rationals (characteristic 0) or F_p, 2 < p < 2^31.
class Domain {
 public:
  Domain() = default;
  static Domain rationals() { return Domain(); }
  static Domain prime_field(uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static Domain parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Domain&) const = default;

 private:
  uint32_t p_ = 0;
};

/// Exact scalar. Rational values are kept canonical; residues lie in [0,p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT: integer literals are scalars
  explicit Scalar(const mpq_class& q);
  Scalar(long v, Domain dom);
  Scalar(const mpq_class& q, Domain dom);

  static Scalar zero(Domain dom) { return Scalar(0L, dom); }
  static Scalar one(Domain dom) { return Scalar(1L, dom); }

  Domain domain() const { return p_ ? Domain::prime_field(p_) : Domain::rationals(); }
  bool is_rational() const { return p_ == 0; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  bool is_integer() const { return p_ || q_.get_den() == 1; }

  const mpq_class& rational() const;
  uint32_t residue() const;
  /// Representative in (-p/2, p/2] for residues; the value itself for rationals.
  mpq_class lift() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  /// Image under Q -> F_p (identity on same-domain values).
  Scalar convert(Domain target) const;
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  mpq_class q_;
  uint32_t r_ = 0;
  uint32_t p_ = 0;
};

uint32_t mod_inverse(uint32_t a, uint32_t p);

}  // namespace thetakit
