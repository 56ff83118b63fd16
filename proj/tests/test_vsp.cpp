// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "random_poly.hpp"
#include "thetakit/vsp.hpp"

using namespace thetakit;
using thetakit::testing::random_poly;

namespace {

RingPtr ternary() { return make_ring({"x0", "x1", "x2"}); }

Polynomial random_linear(std::mt19937_64& rng, const RingPtr& r) {
  Polynomial L(r);
  while (L.is_zero()) {
    L = Polynomial(r);
    for (size_t v = 0; v < 3; ++v)
      L += Scalar(static_cast<long>(rng() % 11) - 5) * Polynomial::variable(r, v);
  }
  return L;
}

}  // namespace

TEST_CASE("linear algebra helpers") {
  RationalMatrix m{{1, 2}, {2, 4}};
  CHECK(rational_rank(m) == 1);
  CHECK(rational_determinant(m) == 0);
  CHECK(rational_determinant({{2, 1}, {1, 1}}) == 1);
  auto x = rational_solve({{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(rational_solve({{1, 1}, {2, 2}}, {1, 3}).has_value());
}

TEST_CASE("catalecticant") {
  RingPtr r = ternary();
  RationalMatrix power = catalecticant(parse_poly("x0^4", r));
  CHECK(power.size() == 6);
  CHECK(rational_rank(power) == 1);

  std::mt19937_64 rng(71);
  for (int t = 0; t < 5; ++t) {
    Polynomial F(r);
    for (int k = 0; k < 5; ++k) F += random_linear(rng, r).pow(4);
    RationalMatrix C = catalecticant(F);
    CHECK(rational_determinant(C) == 0);
    CHECK(rational_rank(C) <= 5);

    Polynomial G = random_poly(rng, r, 4, 15, true);
    RationalMatrix CG = catalecticant(G);
    CHECK(rational_determinant(CG) != 0);
    CHECK(rational_rank(CG) == 6);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 6; ++j) CHECK(CG[i][j] == CG[j][i]);
  }

  CHECK_THROWS(catalecticant(parse_poly("x0^4", make_ring({"a", "b"}))));
  CHECK_THROWS(catalecticant(parse_poly("x0^3", r)));
}

TEST_CASE("apolar_membership") {
  RingPtr r = ternary();
  Polynomial L = parse_poly("x0-2*x1+3*x2", r);
  auto single = apolar_membership(L.pow(4), {L});
  CHECK(single.member);
  REQUIRE(single.lambda.size() == 1);
  CHECK(single.lambda[0] == 1);

  std::mt19937_64 rng(72);
  for (int t = 0; t < 5; ++t) {
    std::vector<Polynomial> five;
    for (int k = 0; k < 5; ++k) five.push_back(random_linear(rng, r));
    CHECK_FALSE(apolar_membership(random_poly(rng, r, 4, 15, true), five).member);

    std::vector<Polynomial> six;
    std::vector<mpq_class> lambda;
    Polynomial F(r);
    for (int k = 0; k < 6; ++k) {
      six.push_back(random_linear(rng, r));
      lambda.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      lambda.back().canonicalize();
      F += Scalar(lambda.back()) * six.back().pow(4);
    }
    auto res = apolar_membership(F, six);
    REQUIRE(res.member);
    CHECK(res.lambda == lambda);
  }
}

TEST_CASE("property: apolar membership is invariant under rescaling the forms") {
  RingPtr r = ternary();
  std::mt19937_64 rng(73);
  for (int t = 0; t < 10; ++t) {
    std::vector<Polynomial> forms, scaled;
    std::vector<mpq_class> scale;
    Polynomial F(r);
    for (int k = 0; k < 4; ++k) {
      forms.push_back(random_linear(rng, r));
      F += Scalar(static_cast<long>(k + 1)) * forms.back().pow(4);
      scale.emplace_back(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 3) + 1);
      scale.back().canonicalize();
      scaled.push_back(Scalar(scale.back()) * forms.back());
    }
    if (t % 2) F += random_poly(rng, r, 4, 2, true);
    auto a = apolar_membership(F, forms), b = apolar_membership(F, scaled);
    CHECK(a.member == b.member);
    if (a.member && b.member)
      for (size_t k = 0; k < forms.size(); ++k) {
        mpq_class s4 = scale[k] * scale[k] * scale[k] * scale[k];
        CHECK(b.lambda[k] * s4 == a.lambda[k]);
      }
  }
}

TEST_CASE("vsp_dim") {
  CHECK(vsp_dim(2, 4, 6).value == 3);
  CHECK(vsp_dim(2, 4, 6).admissible);
  CHECK(vsp_dim(1, 8, 5).value == 1);
  CHECK(vsp_dim(2, 4, 5).value == 0);
  CHECK(vsp_dim(2, 4, 5).admissible);
  CHECK_FALSE(vsp_dim(2, 4, 4).admissible);
  CHECK(vsp_dim(2, 4, 4).value < 0);
  for (long n = 1; n <= 4; ++n)
    for (long d = 2; d <= 6; ++d)
      for (long h = 1; h <= 20; ++h) CHECK(vsp_dim(n, d, h + 1).value - vsp_dim(n, d, h).value == n + 1);
}

TEST_CASE("two conics") {
  TwoConicsRecord rec = vsp_ord_example();
  CHECK(rec.determinant_matches);
  CHECK(rec.segre_matches);
  CHECK_FALSE(rec.segre_substitution.empty());
  REQUIRE(rec.certificate.has_value());
  CHECK(rec.certificate_rank <= 2);
  CHECK(rec.certified());
  CHECK(rec.determinant.total_degree() == 4);
}

TEST_CASE("segre_suite") {
  auto records = segre_suite();
  std::vector<std::string> ids;
  for (const auto& r : records) {
    INFO(r.id << ": expected " << r.expected << ", computed " << r.computed);
    CHECK(r.pass);
    ids.push_back(r.id);
  }
  CHECK(ids == std::vector<std::string>{"tangent-hyperplane", "smooth", "section-H4", "hessian", "triple-point",
                                        "fourth-point", "tangent-section"});
}

TEST_CASE("x43 quartic") {
  Polynomial F = x43_quartic();
  CHECK(F.is_homogeneous());
  CHECK(F.total_degree() == 4);
  CHECK(F.ring()->nvars() == 5);
  Polynomial Fp = x43_quartic(Domain::prime_field(32003));
  CHECK(Fp == F.convert(Fp.ring()));
}
