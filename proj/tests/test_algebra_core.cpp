// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "random_poly.hpp"
#include "thetakit/binary_form.hpp"
#include "thetakit/poly_matrix.hpp"
#include "thetakit/polynomial.hpp"
#include "thetakit/vsp.hpp"

using namespace thetakit;
using thetakit::testing::random_poly;

namespace {

RingPtr x1to5() { return make_ring(indexed_names("x", 1, 5)); }

std::vector<Scalar> q_point(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("scalars over Q and F_p") {
  Domain f = Domain::prime_field(31991);
  CHECK((Scalar(3L, f) * Scalar(3L, f).inverse()).is_one());
  CHECK(Scalar(-1L, f).residue() == 31990u);
  CHECK(Scalar(mpq_class(1, 2)).convert(f) == Scalar(15996L, f));
  CHECK(Domain::parse("Fp:32003") == Domain::prime_field(32003));
  CHECK(Domain::parse("Q").is_rational());
  CHECK_THROWS_AS(Domain::prime_field(32001), AlgebraError);
  CHECK_THROWS(Scalar(0L, f).inverse());
  CHECK(Scalar(mpq_class(6, 4)).rational() == mpq_class(3, 2));
}

TEST_CASE("parse_poly") {
  RingPtr r = x1to5();
  Polynomial p = parse_poly("x1*x3^3 - x2^3*x4", r);
  CHECK(p.size() == 2);
  CHECK(p.terms()[0].exp.size() == 5);
  CHECK(p.is_homogeneous());
  CHECK(p.total_degree() == 4);

  Polynomial P = parse_poly("2*(x1*x3^3+x3^3*x5-x2^3*x4-x2*x4^3+x1^3*x5+x1*x5^3)", r);
  CHECK(P.size() == 6);
  CHECK(P.total_degree() == 4);

  CHECK_THROWS_AS(parse_poly("x1*z9", r), AlgebraError);
  CHECK_THROWS_AS(parse_poly("x1 +* x2", r), AlgebraError);
  CHECK(parse_poly("3/4*x1 - 1/2", r).coefficient({1, 0, 0, 0, 0}) == Scalar(mpq_class(3, 4)));
  CHECK(parse_poly("  x1 *x2 ", r) == parse_poly("x2*x1", r));
}

TEST_CASE("substitute") {
  RingPtr w = make_ring({"w0", "w1", "w2"});
  RingPtr y = make_ring({"y1", "y2", "y3"});
  Polynomial delta = parse_poly("2*w1^4-w0^3*w2-w0*w2^3", w);
  Polynomial pulled = substitute(delta, {parse_poly("2*y1*y3", y), parse_poly("-y2^2", y), parse_poly("y1^2+y3^2", y)});
  CHECK(pulled == parse_poly("2*y2^8-14*y1^5*y3^3-14*y1^3*y3^5-2*y1^7*y3-2*y1*y3^7", y));

  CHECK(substitute(delta, ring_variables(w)) == delta);

  RingPtr xy = make_ring({"x", "y"});
  Polynomial m = parse_poly("x*y^2", xy);
  CHECK(substitute(m, {parse_poly("-x", xy), parse_poly("y", xy)}) == -m);
  CHECK_THROWS(substitute(m, {parse_poly("x", xy), parse_poly("y1", y)}));
}

TEST_CASE("gradient") {
  RingPtr r4 = make_ring(indexed_names("x", 0, 3));
  Polynomial G = parse_poly(x43_G_text, r4);
  auto g = gradient(G);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == parse_poly("x2^3", r4));
  CHECK(g[1] == parse_poly("-3*x1^2*x3-x3^3", r4));
  CHECK(g[2] == parse_poly("3*x0*x2^2", r4));
  CHECK(g[3] == parse_poly("-x1^3-3*x1*x3^2", r4));

  Polynomial F = x43_quartic();
  std::vector<long> at;
  for (const auto& c : gradient(F)) at.push_back(c.evaluate(q_point({10, 2, 1, 1, 0})).rational().get_num().get_si());
  CHECK(at == std::vector<long>{1, -13, 30, -14, 1001});

  for (const auto& c : gradient(Polynomial::constant(r4, 7L))) CHECK(c.is_zero());
}

TEST_CASE("hessian") {
  RingPtr r4 = make_ring(indexed_names("x", 0, 3));
  Polynomial G = parse_poly(x43_G_text, r4);
  PolyMatrix H = hessian(G);
  CHECK(H.is_symmetric());
  CHECK(H == PolyMatrix::parse(r4, {{"0", "0", "3*x2^2", "0"},
                                    {"0", "-6*x1*x3", "0", "-3*x1^2-3*x3^2"},
                                    {"3*x2^2", "0", "6*x0*x2", "0"},
                                    {"0", "-3*x1^2-3*x3^2", "0", "-6*x1*x3"}}));
  Polynomial root = parse_poly("9*x2^2*(x1^2-x3^2)", r4);
  CHECK(determinant(H) == root * root);
  CHECK(determinant(H) == parse_poly("81*x2^4*(x1^2-x3^2)^2", r4));

  RingPtr xy = make_ring({"x", "y"});
  // x^T A x with A = (1 3; 3 -2).
  PolyMatrix Hq = hessian(parse_poly("x^2+6*x*y-2*y^2", xy));
  CHECK(Hq == PolyMatrix::parse(xy, {{"2", "6"}, {"6", "-4"}}));
}

TEST_CASE("determinant and pfaffian") {
  RingPtr r = make_ring({"a", "b", "c"});
  PolyMatrix D(r, 3, 3);
  D.at(0, 0) = parse_poly("a+1", r);
  D.at(1, 1) = parse_poly("b", r);
  D.at(2, 2) = parse_poly("c^2", r);
  CHECK(determinant(D) == parse_poly("(a+1)*b*c^2", r));
  CHECK_THROWS(determinant(PolyMatrix(r, 2, 3)));

  CHECK(pfaffian(PolyMatrix::parse(r, {{"0", "a"}, {"-a", "0"}})) == parse_poly("a", r));

  RingPtr g = make_ring({"a01", "a02", "a03", "a12", "a13", "a23"});
  PolyMatrix A = PolyMatrix::parse(g, {{"0", "a01", "a02", "a03"},
                                       {"-a01", "0", "a12", "a13"},
                                       {"-a02", "-a12", "0", "a23"},
                                       {"-a03", "-a13", "-a23", "0"}});
  Polynomial pf = pfaffian(A);
  CHECK(pf == parse_poly("a01*a23-a02*a13+a03*a12", g));
  CHECK(determinant(A) == pf * pf);

  CHECK_THROWS(pfaffian(PolyMatrix::parse(r, {{"0", "a", "b"}, {"-a", "0", "c"}, {"-b", "-c", "0"}})));
  PolyMatrix bad = PolyMatrix::parse(r, {{"0", "a"}, {"a", "0"}});
  CHECK(bad.antisymmetry_defect() == std::optional<std::pair<size_t, size_t>>{{0, 1}});
  CHECK_THROWS(pfaffian(bad));
}

TEST_CASE("restrict_to_line") {
  RingPtr r4 = make_ring(indexed_names("x", 0, 3));
  Polynomial G = parse_poly(x43_G_text, r4);
  auto basis = kernel_basis({{0, 2, -5, 1}, {2, 0, -5, -15}}, 4);
  REQUIRE(basis.size() == 2);
  ProjectivePoint x = make_point({10, 2, 1, 1});
  ProjectivePoint q = basis[0] == x ? basis[1] : basis[0];
  auto fac = restrict_to_line(G, x, q);
  CHECK_FALSE(fac.identically_zero);
  CHECK_FALSE(fac.nonsplit_factor.has_value());
  REQUIRE(fac.roots.size() == 2);
  unsigned total = 0;
  for (const auto& root : fac.roots) {
    total += root.multiplicity;
    if (root.point == x) CHECK(root.multiplicity == 3);
    else CHECK(root.point == make_point({65, 1, 2, 8}));
  }
  CHECK(total == fac.degree);

  RingPtr r3 = make_ring({"x", "y", "z"});
  Polynomial planes = parse_poly("x*y*(x+y-z)*(x-2*y+3*z)", r3);
  auto four = restrict_to_line(planes, make_point({1, 2, 5}), make_point({3, -1, 7}));
  CHECK(four.roots.size() == 4);
  for (const auto& root : four.roots) CHECK(root.multiplicity == 1);

  auto inside = restrict_to_line(parse_poly("x*z", r3), make_point({1, 0, 0}), make_point({0, 1, 0}));
  CHECK(inside.identically_zero);

  auto conic = restrict_to_line(parse_poly("x^2+y^2-2*z^2", r3), make_point({1, 0, 0}), make_point({0, 0, 1}));
  CHECK(conic.roots.empty());
  CHECK(conic.nonsplit_factor.has_value());
}

TEST_CASE("property: Euler identity on random forms") {
  std::mt19937_64 rng(11);
  for (Domain dom : {Domain::rationals(), Domain::prime_field(31991)}) {
    RingPtr r = make_ring(indexed_names("x", 0, 4), dom);
    for (int t = 0; t < 100; ++t) {
      int d = static_cast<int>(rng() % 7);
      Polynomial f = random_poly(rng, r, d, 10, true);
      Polynomial lhs(r);
      for (size_t i = 0; i < r->nvars(); ++i) lhs += Polynomial::variable(r, i) * f.derivative(i);
      CHECK(lhs == Scalar(static_cast<long>(d), dom) * f);
    }
  }
}

TEST_CASE("property: pfaffian squared is the determinant") {
  std::mt19937_64 rng(12);
  RingPtr r = make_ring({"a", "b", "c"});
  for (size_t n = 1; n <= 7; ++n)
    for (int t = 0; t < 4; ++t) {
      PolyMatrix m(r, n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
          m.at(i, j) = random_poly(rng, r, 1, 3, true);
          m.at(j, i) = -m.at(i, j);
        }
      if (n % 2) {
        CHECK(determinant(m).is_zero());
      } else {
        Polynomial pf = pfaffian(m);
        CHECK(pf * pf == determinant(m));
      }
    }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  RingPtr src = make_ring({"u", "v", "w"});
  RingPtr dst = make_ring({"s", "t"});
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_poly(rng, dst, 2, 3, false));
    Polynomial p = random_poly(rng, src, 3, 4, false), q = random_poly(rng, src, 3, 4, false);
    CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
    CHECK(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
  }
}

TEST_CASE("property: parse and print round trip") {
  std::mt19937_64 rng(14);
  for (Domain dom : {Domain::rationals(), Domain::prime_field(32003)}) {
    RingPtr r = make_ring(indexed_names("x", 0, 4), dom);
    for (int k = 0; k < 1000; ++k) {
      Polynomial p = random_poly(rng, r, 6, 6, false);
      CHECK(parse_poly(p.to_string(), r) == p);
    }
  }
}

TEST_CASE("property: F_p arithmetic is reduction of Q arithmetic") {
  std::mt19937_64 rng(15);
  Domain fp = Domain::prime_field(31991);
  RingPtr q = make_ring({"x", "y", "z"});
  RingPtr p = make_ring({"x", "y", "z"}, fp);
  for (int k = 0; k < 100; ++k) {
    Polynomial a = random_poly(rng, q, 4, 5, false), b = random_poly(rng, q, 4, 5, false);
    CHECK((a * b).convert(p) == a.convert(p) * b.convert(p));
    CHECK((a - b).convert(p) == a.convert(p) - b.convert(p));
  }
}
