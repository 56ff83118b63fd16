// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/binary_form.hpp"
#include "thetakit/groebner.hpp"
#include "thetakit/polynomial.hpp"

namespace thetakit {

struct HilbertSummary {
  /// -1 for the empty projective scheme.
  int proj_dimension = -1;
  std::optional<mpz_class> degree;
  /// Coefficients of P(s), constant term first.
  std::vector<mpq_class> hilbert_polynomial;
  /// Present iff proj_dimension == 1.
  std::optional<mpz_class> arithmetic_genus;
  /// Numerator N(t) of the Hilbert series N(t)/(1-t)^n, constant term first.
  std::vector<mpz_class> numerator;

  bool same_scheme_data(const HilbertSummary& o) const {
    return proj_dimension == o.proj_dimension && degree == o.degree &&
           hilbert_polynomial == o.hilbert_polynomial;
  }
  std::string to_string() const;
};

/// Numerator of the Hilbert series of S/(monomials) over n variables.
std::vector<mpz_class> hilbert_numerator(const std::vector<Exponents>& monomials, size_t nvars);
HilbertSummary summary_from_numerator(const std::vector<mpz_class>& numerator, size_t nvars);

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced basis with respect to the ring's order, over `field` (defaults to the ring's
  /// domain). Cached per (field, order).
  const std::vector<Polynomial>& basis(std::optional<Domain> field = std::nullopt,
                                       std::optional<MonomialOrder> order = std::nullopt) const;
  HilbertSummary hilbert_summary(std::optional<Domain> field = std::nullopt) const;
  bool contains(const Polynomial& f) const;

  /// Same generators over another coefficient domain.
  Ideal over(Domain field) const;
  Ideal with_generators(std::vector<Polynomial> extra) const;

  /// {ring: [vars], field: "Q"|"Fp:<p>", generators: [...]}, as JSON text.
  std::string to_json() const;
  static Ideal from_json(const std::string& text);

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Polynomial>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

Ideal groebner_ideal(const Ideal& I, MonomialOrder order, Domain field);

/// I plus the codim x codim minors of the Jacobian of I's generators.
Ideal singular_locus_ideal(const Ideal& I, int expected_codim);

/// Minimal primes of a monomial ideal, each as the sorted list of variable indices.
std::vector<std::vector<size_t>> monomial_minimal_primes(const Ideal& I);

struct ZeroDimResult {
  bool zero_dimensional = false;
  /// dim_k S/I when zero-dimensional.
  mpz_class degree;
  /// Affine dimension when positive-dimensional (-1 for the unit ideal).
  int dimension = 0;
};
ZeroDimResult zero_dim_degree(const Ideal& I);

struct MultiplicityResult {
  int multiplicity = 0;
  /// Lowest-degree part of F in affine coordinates centred at the point; variables are the
  /// ring's variables with the chart variable omitted.
  std::optional<Polynomial> tangent_cone;
  size_t chart = 0;
};
MultiplicityResult multiplicity_at(const Polynomial& F, const ProjectivePoint& p);

/// Rank of a symmetric matrix over Q built from the quadratic form q (Gram matrix, 2x2 scaled).
size_t quadratic_form_rank(const Polynomial& q);

}  // namespace thetakit
