// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "random_poly.hpp"
#include "thetakit/pfaffian_loci.hpp"

using namespace thetakit;
using thetakit::testing::random_poly;

namespace {

Polynomial P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

bool kernel_identity(const PolyMatrix& A) {
  auto v = kernel_pfaffians(A);
  for (const auto& c : A.apply(v))
    if (!c.is_zero()) return false;
  return true;
}

/// Rank over Q of the coefficient matrix of the given forms on their monomials.
size_t coefficient_rank(const std::vector<Polynomial>& forms) {
  std::map<Exponents, size_t> column;
  for (const auto& f : forms)
    for (const auto& t : f.terms()) column.emplace(t.exp, column.size());
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& f : forms) {
    std::vector<mpq_class> row(column.size());
    for (const auto& t : f.terms()) row[column[t.exp]] = t.coeff.rational();
    rows.push_back(row);
  }
  size_t rank = 0;
  for (size_t c = 0; c < column.size() && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (size_t k = 0; k < column.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("build_Rd") {
  PolyMatrix R4 = build_Rd(4);
  REQUIRE(R4.rows() == 5);
  REQUIRE(R4.cols() == 9);
  const RingPtr& r = R4.ring();
  CHECK(R4.at(1, 0) == P(r, "x1*x8"));
  CHECK(R4.at(1, 1) == P(r, "x0*x2"));
  for (size_t j = 0; j < 9; ++j) CHECK(R4.at(0, j) == P(r, "x" + std::to_string(j) + "^2"));

  PolyMatrix R5 = build_Rd(5);
  CHECK(R5.at(2, 0) == P(R5.ring(), "x2*x9"));
  CHECK(R5.at(2, 1) == P(R5.ring(), "x3*x10"));
}

TEST_CASE("restricted coordinates") {
  auto odd = restricted_coordinates(9);
  CHECK(odd.odd);
  CHECK(odd.survivors == std::vector<size_t>{1, 2, 3, 4});
  CHECK(odd.images[0].is_zero());
  CHECK(odd.images[7] == -odd.images[2]);

  auto even = restricted_coordinates(12);
  CHECK_FALSE(even.odd);
  CHECK(even.survivors.size() == 5);
  CHECK(even.images[6].is_zero());
  CHECK((even.images[5] + even.images[7]).is_zero());

  // The even-case count for n = 16 is seven, one more than a naive count suggests.
  CHECK(restricted_coordinates(16).survivors.size() == 7);

  RingPtr a = ambient_ring(9);
  for (size_t i = 1; i < 9; ++i) {
    Polynomial odd_form = Polynomial::variable(a, i) - Polynomial::variable(a, 9 - i);
    Polynomial expect = Scalar(i <= 4 ? 2L : -2L) * Polynomial::variable(odd.ring, (i <= 4 ? i : 9 - i) - 1);
    CHECK(restrict_minus(odd_form, odd) == expect);
  }
}

TEST_CASE("restricted R_4 and R_5") {
  PolyMatrix T4 = restricted_Rd(4);
  REQUIRE(T4.rows() == 5);
  const RingPtr& r = T4.ring();
  CHECK(T4.at(0, 0).is_zero());
  for (size_t j = 1; j <= 4; ++j) CHECK(T4.at(0, j) == P(r, "x" + std::to_string(j) + "^2"));
  CHECK(T4.at(1, 4) == P(r, "-x3*x4"));
  CHECK(T4.is_antisymmetric());

  PolyMatrix T5 = restricted_Rd(5);
  REQUIRE(T5.rows() == 6);
  CHECK(T5.at(2, 3) == P(T5.ring(), "x1*x5"));
  CHECK(T5.is_antisymmetric());
}

TEST_CASE("property: restricted matrices are antisymmetric for d = 2..10") {
  for (int d = 2; d <= 10; ++d) {
    INFO("d = " << d);
    CHECK(restricted_Rd(d).is_antisymmetric());
    CHECK(restricted_diagonal_Md(d).is_antisymmetric());
  }
}

TEST_CASE("kernel_pfaffians of the restricted R_4") {
  PolyMatrix T4 = restricted_Rd(4);
  auto y = kernel_pfaffians(T4);
  REQUIRE(y.size() == 5);
  const RingPtr& r = T4.ring();
  CHECK(y[0] == P(r, printed::d9_y[0]));
  CHECK(y[2] == P(r, printed::d9_y[2]));
  CHECK((y[0] + y[3]).is_zero());
  for (const auto& c : y) {
    CHECK(c.is_homogeneous());
    CHECK(c.total_degree() == 4);
  }
  CHECK(coefficient_rank(y) == 4);
  CHECK(kernel_identity(T4));
  CHECK(y[1] == P(r, "x1*x2^3+x1*x4^3-x2*x3^3"));
  CHECK(y[4] == P(r, "-x1^3*x4+x1*x3^3-x2^3*x4"));
  // Printed y1 and y4 are not homogeneous.
  CHECK_FALSE(P(r, printed::d9_y[1]).is_homogeneous());
  CHECK_FALSE(P(r, printed::d9_y[4]).is_homogeneous());

  CHECK_THROWS(kernel_pfaffians(restricted_Rd(5)));
}

TEST_CASE("property: kernel identity") {
  CHECK(kernel_identity(restricted_Rd(6)));
  CHECK(kernel_identity(restricted_diagonal_Md(5)));

  std::mt19937_64 rng(61);
  RingPtr r = make_ring({"a", "b", "c"});
  for (int t = 0; t < 20; ++t) {
    size_t n = 3 + 2 * (t % 3);
    PolyMatrix A(r, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        A.at(i, j) = random_poly(rng, r, 1, 2, true);
        A.at(j, i) = -A.at(i, j);
      }
    CHECK(kernel_identity(A));
  }
}

TEST_CASE("rank_locus_ideal") {
  RingPtr r = make_ring({"x", "y"});
  PolyMatrix A = PolyMatrix::parse(r, {{"0", "1", "2", "3"}, {"-1", "0", "5", "7"}, {"-2", "-5", "0", "11"}, {"-3", "-7", "-11", "0"}});
  Ideal unit = rank_locus_ideal(A, 2);
  REQUIRE(unit.generators().size() == 1);
  CHECK(unit.generators()[0] == Polynomial::constant(r, 1L * 11 - 2 * 7 + 3 * 5));

  Ideal pf4 = rank_locus_ideal(restricted_Rd(6), 4);
  CHECK(pf4.generators().size() == 7);
}

TEST_CASE("build_Md and its specializations") {
  for (int d : {3, 5, 8}) {
    PolyMatrix M = build_Md(d);
    REQUIRE(M.rows() == static_cast<size_t>(d));
    std::string ds = std::to_string(d);
    CHECK(M.at(0, 0) == P(M.ring(), "x0*y0+x" + ds + "*y" + ds));
  }
  PolyMatrix M6 = build_Md(6);
  CHECK(M6.at(1, 2) == P(M6.ring(), "x3*y11+x9*y5"));

  PolyMatrix block = restricted_diagonal_Md(6).principal({0, 1, 2, 3});
  CHECK(block.at(0, 3) == P(block.ring(), "-2*x3^2"));
  CHECK(block.is_antisymmetric());

  PolyMatrix R8 = restricted_diagonal_Md(8);
  CHECK(R8.rows() == 8);
  CHECK(R8.ring()->nvars() == 7);
  CHECK(R8.is_antisymmetric());

  PolyMatrix shifted = specialize_xy(build_Md(4), 4, 1, 0);
  CHECK(shifted.at(0, 0) == P(shifted.ring(), "x1*y0+x5*y4"));
  CHECK_THROWS(specialize_xy(build_Md(5), 5, 0, 5, true));
}

TEST_CASE("printed quartics") {
  Polynomial p12 = d12_pfaffian();
  CHECK(p12 == P(p12.ring(), printed::d12_P));

  Polynomial g2 = d14_g_times_two();
  CHECK(g2 == Scalar(2L) * P(g2.ring(), printed::d14_g));

  // f differs from the printed form by one sign and one exponent.
  Polynomial f = d14_f();
  Polynomial printed_f = P(f.ring(), printed::d14_f);
  CHECK(f - printed_f == P(f.ring(), "2*x1*x3*x4^2-x1*x2*x6+x1^2*x2*x6"));
}

TEST_CASE("d8 quadrics and the quotient map") {
  auto q = d8_quadrics();
  REQUIRE(q.size() == 4);
  for (size_t k = 0; k < 4; ++k) CHECK(q[k] == P(q[k].ring(), printed::d8_f[k]));

  // sigma^k shifts the x-indices by k.
  std::vector<Polynomial> shift;
  const RingPtr& r = q[0].ring();
  for (size_t i = 0; i < 8; ++i) shift.push_back(Polynomial::variable(r, (i + 1) % 8));
  for (size_t i = 8; i < r->nvars(); ++i) shift.push_back(Polynomial::variable(r, i));
  for (size_t k = 0; k + 1 < 4; ++k) CHECK(substitute(q[k], shift) == q[k + 1]);

  RingPtr yr = make_ring({"y1", "y2", "y3"});
  RingPtr wr = make_ring({"w0", "w1", "w2"});
  std::vector<Polynomial> map;
  for (size_t k = 0; k < 3; ++k) map.push_back(P(yr, printed::d8_quotient_map[k]));
  CHECK(substitute(P(wr, printed::d8_delta), map) == P(yr, printed::d8_delta_pullback));

  auto recs = catalog("d8");
  const Ideal& pull = find_record(recs, "delta-pullback").ideal;
  CHECK(pull.generators()[0] == P(pull.ring(), printed::d8_delta_pullback));
}

TEST_CASE("catalog") {
  CHECK_THROWS(catalog("d7"));
  auto recs = catalog("d13");
  CHECK_THROWS(find_record(recs, "nosuch"));

  auto d10 = catalog("d10");
  const Ideal& det = find_record(d10, "determinant").ideal;
  // The zero determinant leaves no generators.
  CHECK(det.generators().empty());
  CHECK(determinant(restricted_diagonal_Md(5)).is_zero());

  auto d14 = catalog("d14");
  const Ideal& fg = find_record(d14, "fg").ideal;
  CHECK(fg.generators()[1] == P(fg.ring(), printed::d14_g));

  for (const char* c : {"d8", "d9", "d10", "d11", "d12", "d13", "d14", "d16"})
    for (const auto& rec : catalog(c)) {
      CHECK_FALSE(rec.anchor.empty());
      CHECK(rec.ideal.is_homogeneous());
    }
}

TEST_CASE("steinerian_fiber") {
  auto a = steinerian_fiber(5, 31991), b = steinerian_fiber(5, 31991);
  CHECK(a.source == b.source);
  CHECK(a.image == b.image);
  CHECK(a.ideal.to_json() == b.ideal.to_json());
  CHECK(a.source.size() == 4);
  CHECK(a.image.size() == 5);
}
