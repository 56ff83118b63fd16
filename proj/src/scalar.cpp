// SPDX-License-Identifier: Apache-2.0
#include "thetakit/scalar.hpp"

#include <charconv>

namespace thetakit {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Domain Domain::prime_field(uint64_t p) {
  if (p <= 2 || p >= (1ULL << 31) || !is_prime(p))
    throw AlgebraError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  Domain d;
  d.p_ = static_cast<uint32_t>(p);
  return d;
}

Domain Domain::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime_field(p);
  }
  throw AlgebraError("bad coefficient domain '" + std::string(text) + "'");
}

std::string Domain::to_string() const {
  return p_ ? "Fp:" + std::to_string(p_) : "Q";
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  if (a % p == 0) throw AlgebraError("division by zero in F_" + std::to_string(p));
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<uint32_t>(t < 0 ? t + p : t);
}

static uint32_t reduce_mpq(const mpq_class& q, uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw AlgebraError("denominator divisible by " + std::to_string(p));
  uint64_t n = num.get_ui();
  return static_cast<uint32_t>(n * mod_inverse(static_cast<uint32_t>(den.get_ui()), p) % p);
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar::Scalar(long v, Domain dom) : Scalar(mpq_class(v), dom) {}

Scalar::Scalar(const mpq_class& q, Domain dom) {
  if (dom.is_rational()) {
    q_ = q;
    q_.canonicalize();
  } else {
    p_ = dom.characteristic();
    r_ = reduce_mpq(q, p_);
  }
}

const mpq_class& Scalar::rational() const {
  if (p_) throw AlgebraError("rational value requested from a residue");
  return q_;
}

uint32_t Scalar::residue() const {
  if (!p_) throw AlgebraError("residue requested from a rational");
  return r_;
}

mpq_class Scalar::lift() const {
  if (!p_) return q_;
  long v = r_;
  if (v > static_cast<long>(p_ / 2)) v -= p_;
  return mpq_class(v);
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw AlgebraError("mixed coefficient domains");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = static_cast<uint32_t>((uint64_t{r_} + o.r_) % p_);
  else
    q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = static_cast<uint32_t>((uint64_t{r_} + p_ - o.r_) % p_);
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = static_cast<uint32_t>(uint64_t{r_} * o.r_ % p_);
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  Scalar s = *this;
  if (p_)
    s.r_ = mod_inverse(r_, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar base = *this, acc = Scalar::one(domain());
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

Scalar Scalar::convert(Domain target) const {
  if (target.characteristic() == p_) return *this;
  if (p_) throw AlgebraError("cannot lift a residue to another domain");
  return Scalar(q_, target);
}

std::string Scalar::to_string() const {
  return p_ ? std::to_string(r_) : q_.get_str();
}

}  // namespace thetakit
