// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "random_poly.hpp"
#include "thetakit/ideal.hpp"
#include "thetakit/pfaffian_loci.hpp"
#include "thetakit/vsp.hpp"

using namespace thetakit;
using thetakit::testing::random_poly;

namespace {

const Domain F1 = Domain::prime_field(31991);
const Domain F2 = Domain::prime_field(32003);

std::string hilbert(const Ideal& I) { return I.hilbert_summary().to_string(); }

}  // namespace

TEST_CASE("groebner_basis of small ideals") {
  RingPtr r = make_ring({"x", "y"}, F1);
  auto b = groebner_basis({parse_poly("x", r), parse_poly("y", r)});
  CHECK(b.size() == 2);

  Polynomial f = parse_poly("3*x^2*y+5*y^3+x", r);
  auto principal = groebner_basis({f});
  REQUIRE(principal.size() == 1);
  CHECK(principal[0] == f.monic());

  RingPtr q = make_ring({"x", "y", "z", "w"});
  auto tw = groebner_basis(Ideal::parse(q, {"x*z-y^2", "x*w-y*z", "y*w-z^2"}).generators());
  CHECK(satisfies_buchberger_criterion(tw));
}

TEST_CASE("groebner_basis rejects a composite modulus") {
  CHECK_THROWS(Domain::prime_field(31993 * 3));
  CHECK_THROWS(Domain::parse("Fp:32000"));
}

TEST_CASE("basis postconditions on random ideals") {
  std::mt19937_64 rng(21);
  RingPtr r = make_ring({"a", "b", "c", "d"}, F1);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, r, 2, 4, true));
    auto basis = groebner_basis(gens);
    CHECK(satisfies_buchberger_criterion(basis));
    for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
    for (const auto& g : basis) CHECK(g.leading().coeff.is_one());
  }
}

TEST_CASE("hilbert_summary") {
  RingPtr p4 = ambient_ring(5, F1);
  Ideal sextic(p4, {parse_poly("x0^6+x1^6+x2^6+x3^6+x4^6", p4)});
  CHECK(hilbert(sextic) == "dim 3, degree 6");

  auto d13 = catalog("d13", F1);
  CHECK(hilbert(find_record(d13, "D2-three").ideal) == "dim 3, degree 21");
  auto d11 = catalog("d11", F1);
  auto h = find_record(d11, "D1").ideal.hilbert_summary();
  CHECK(h.proj_dimension == 1);
  CHECK(h.degree == 20);
  CHECK(h.arithmetic_genus == 26);

  // Invariants of the summary itself.
  CHECK(h.hilbert_polynomial.size() == 2);
  CHECK(h.hilbert_polynomial[1] == 20);
  CHECK(1 - h.hilbert_polynomial[0] == 26);

  RingPtr r = make_ring({"x", "y", "z"}, F1);
  CHECK(hilbert(Ideal(r, {})) == "dim 2, degree 1");
  CHECK(Ideal::parse(r, {"x", "y", "z"}).hilbert_summary().proj_dimension == -1);
  CHECK_THROWS(Ideal::parse(r, {"x^2+y"}).hilbert_summary());
}

TEST_CASE("hilbert_summary ignores irrelevant components") {
  RingPtr r = make_ring({"x", "y", "z"}, F1);
  Ideal line = Ideal::parse(r, {"x"});
  Ideal with_embedded = Ideal::parse(r, {"x^2", "x*y", "x*z"});
  CHECK(line.hilbert_summary().same_scheme_data(with_embedded.hilbert_summary()));
}

TEST_CASE("singular_locus_ideal") {
  RingPtr r = make_ring(indexed_names("x", 0, 3), F1);
  Ideal quadric = Ideal::parse(r, {"x0^2+x1^2+x2^2+x3^2"});
  CHECK(singular_locus_ideal(quadric, 1).hilbert_summary().proj_dimension == -1);

  for (Domain dom : {Domain::rationals(), F1, F2}) {
    Ideal X(make_ring(indexed_names("x", 0, 4), dom), {x43_quartic(dom)});
    CHECK(singular_locus_ideal(X, 1).hilbert_summary().proj_dimension == -1);
  }

  auto d14 = catalog("d14", F1);
  auto h = find_record(d14, "fg-singular").ideal.hilbert_summary();
  CHECK(h.proj_dimension == 1);
  CHECK(h.degree == 24);
}

TEST_CASE("monomial_minimal_primes") {
  RingPtr r = make_ring({"x", "y"});
  auto xy = monomial_minimal_primes(Ideal::parse(r, {"x*y"}));
  CHECK(xy == std::vector<std::vector<size_t>>{{0}, {1}});
  CHECK(monomial_minimal_primes(Ideal::parse(r, {"x^2"})) == std::vector<std::vector<size_t>>{{0}});
  CHECK_THROWS(monomial_minimal_primes(Ideal::parse(r, {"x+y"})));

  RingPtr p7 = ambient_ring(8);
  auto primes = monomial_minimal_primes(Ideal::parse(p7, {"x2*x6", "x3*x7", "x0*x4", "x1*x5"}));
  CHECK(primes.size() == 16);
  for (const auto& p : primes) {
    std::set<size_t> pairs;
    for (size_t v : p) pairs.insert(v % 4);
    CHECK(pairs.size() == 4);
  }

  // k pairwise disjoint quadratic monomials give 2^k primes.
  RingPtr r10 = ambient_ring(10);
  std::vector<std::string> gens;
  for (int k = 0; k < 5; ++k) {
    gens.push_back("x" + std::to_string(2 * k) + "*x" + std::to_string(2 * k + 1));
    CHECK(monomial_minimal_primes(Ideal::parse(r10, gens)).size() == (1u << (k + 1)));
  }
}

TEST_CASE("zero_dim_degree") {
  RingPtr r = make_ring({"x", "y"});
  auto one = zero_dim_degree(Ideal::parse(r, {"x-1", "y-2"}));
  CHECK(one.zero_dimensional);
  CHECK(one.degree == 1);
  auto fat = zero_dim_degree(Ideal::parse(r, {"x^2", "y"}));
  CHECK(fat.degree == 2);
  auto curve = zero_dim_degree(Ideal::parse(r, {"x*y-1"}));
  CHECK_FALSE(curve.zero_dimensional);
  CHECK(curve.dimension == 1);

  for (uint64_t seed : {1u, 2u, 3u}) {
    auto fiber = steinerian_fiber(seed, 31991);
    auto res = zero_dim_degree(fiber.ideal);
    CHECK(res.zero_dimensional);
    CHECK(res.degree == 6);
  }
}

TEST_CASE("multiplicity_at") {
  RingPtr r4 = make_ring(indexed_names("x", 0, 3));
  Polynomial G = parse_poly(x43_G_text, r4);
  CHECK(multiplicity_at(G, make_point({1, 0, 0, 0})).multiplicity == 3);
  CHECK(multiplicity_at(G, make_point({1, 1, 1, 0})).multiplicity == 0);

  RingPtr r3 = make_ring({"x", "y", "z"});
  auto smooth = multiplicity_at(parse_poly("x^2+y^2-z^2", r3), make_point({3, 4, 5}));
  CHECK(smooth.multiplicity == 1);
  auto node = multiplicity_at(parse_poly("y^2*z-x^3-x^2*z", r3), make_point({0, 0, 1}));
  CHECK(node.multiplicity == 2);
  REQUIRE(node.tangent_cone.has_value());
  CHECK(quadratic_form_rank(*node.tangent_cone) == 2);
  CHECK_THROWS(multiplicity_at(G, make_point({0, 0, 0, 0})));
}

TEST_CASE("complete intersection degree") {
  auto d14 = catalog("d14", F2);
  const Ideal& fg = find_record(d14, "fg").ideal;
  REQUIRE(fg.generators().size() == 2);
  CHECK(fg.generators()[0].total_degree() * fg.generators()[1].total_degree() == 16);
  CHECK(fg.hilbert_summary().degree == 16);
}

TEST_CASE("two primes agree on every catalog record") {
  for (const char* c : {"d8", "d9", "d10", "d11", "d12", "d13", "d14", "d16"}) {
    auto a = catalog(c, F1), b = catalog(c, F2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      INFO(c << "." << a[i].name);
      auto ha = a[i].ideal.hilbert_summary(), hb = b[i].ideal.hilbert_summary();
      CHECK(ha.same_scheme_data(hb));
      if (a[i].expected) {
        CHECK(ha.proj_dimension == a[i].expected->proj_dimension);
        if (a[i].expected->degree) CHECK(ha.degree == *a[i].expected->degree);
        if (a[i].expected->genus) CHECK(ha.arithmetic_genus == *a[i].expected->genus);
      }
    }
  }
}

TEST_CASE("property: redundant generators leave the Hilbert data unchanged") {
  std::mt19937_64 rng(22);
  for (const char* c : {"d8", "d9", "d11", "d12", "d13", "d14", "d16"})
    for (const auto& rec : catalog(c, F1)) {
      const auto& gens = rec.ideal.generators();
      std::vector<Polynomial> extra;
      for (int k = 0; k < 2; ++k) {
        const Polynomial& g = gens[rng() % gens.size()];
        extra.push_back(random_poly(rng, g.ring(), 1, 2, true) * g);
      }
      INFO(c << "." << rec.name);
      CHECK(rec.ideal.hilbert_summary().same_scheme_data(rec.ideal.with_generators(extra).hilbert_summary()));
    }
}

TEST_CASE("ideal JSON round trip") {
  RingPtr r = make_ring({"x", "y", "z"}, F2);
  Ideal I = Ideal::parse(r, {"x*y-z^2", "x^3+2*y*z^2"});
  Ideal J = Ideal::from_json(I.to_json());
  CHECK(*J.ring() == *I.ring());
  CHECK(J.generators() == I.generators());
  CHECK(J.to_json() == I.to_json());
}
