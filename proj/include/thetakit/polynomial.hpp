// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "thetakit/scalar.hpp"

namespace thetakit {

enum class MonomialOrder { GRevLex, Lex };

using Exponents = std::vector<uint16_t>;

/// Polynomial ring descriptor: ordered variable names, coefficient domain, term order.
class Ring {
 public:
  Ring(std::vector<std::string> vars, Domain domain, MonomialOrder order = MonomialOrder::GRevLex);

  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  Domain domain() const { return domain_; }
  MonomialOrder order() const { return order_; }
  /// -1 when absent.
  int index_of(std::string_view name) const;
  /// Sign of a - b under the ring's term order.
  int compare(const Exponents& a, const Exponents& b) const;
  bool operator==(const Ring& o) const {
    return domain_ == o.domain_ && order_ == o.order_ && vars_ == o.vars_;
  }

 private:
  std::vector<std::string> vars_;
  Domain domain_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Domain domain = Domain::rationals(),
                  MonomialOrder order = MonomialOrder::GRevLex);
/// Variables prefix+first .. prefix+last.
std::vector<std::string> indexed_names(std::string_view prefix, int first, int last);
RingPtr with_domain(const RingPtr& ring, Domain domain);

unsigned degree_of(const Exponents& e);

struct Term {
  Exponents exp;
  Scalar coeff;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Exponents exp, const Scalar& c);
  /// Sorts, merges equal exponents and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  Domain domain() const { return ring_->domain(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree among the terms; -1 for zero.
  int low_degree() const;
  bool is_homogeneous() const;
  /// Leading term under the ring order; requires nonzero.
  const Term& leading() const { return terms_.front(); }
  /// Terms of total degree exactly k.
  Polynomial homogeneous_part(int k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  Polynomial derivative(size_t var) const;
  Scalar coefficient(const Exponents& e) const;
  /// Same variable names, coefficients mapped into target's domain.
  Polynomial convert(const RingPtr& target) const;
  /// Scalar multiple normalized to leading coefficient 1.
  Polynomial monic() const;
  /// Over Q: the primitive integer multiple with positive leading coefficient.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly decreasing under ring order, nonzero coefficients
};

Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// images[i] replaces variable i of p's ring; all images share one ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target);

std::vector<Polynomial> gradient(const Polynomial& p);

/// Identity images for every variable of ring.
std::vector<Polynomial> ring_variables(const RingPtr& ring);

}  // namespace thetakit
