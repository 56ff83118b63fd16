// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <set>

#include "thetakit/arithmetic_groups.hpp"

using namespace thetakit;
using T = SubgroupTag;

namespace {

ZMatrix4 printed_M() { return z_from({{{1, 1, 1, 1}, {2, 1, 2, 1}, {2, 0, 1, 1}, {0, 2, 2, 1}}}); }

bool divisible(const mpz_class& v, long m) { return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m)) != 0; }

bool congruent_mod(const ZMatrix4& R, long m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!divisible(R[i][j] - (i == j ? 1 : 0), m)) return false;
  return true;
}

const std::vector<DiagType> kTypes = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 4}, {3, 3}, {1, 5}, {2, 3}};

}  // namespace

TEST_CASE("in_gamma_D") {
  CHECK(in_gamma_D(z_identity(), {1, 2}));
  CHECK(in_gamma_D(printed_M(), {1, 2}));
  CHECK_FALSE(in_gamma_D(printed_M(), {1, 1}));

  std::mt19937_64 rng(51);
  int rejected = 0;
  for (int t = 0; t < 200; ++t) {
    std::array<std::array<long, 4>, 4> rows{};
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<long>(rng() % 7) - 3;
    rejected += !in_gamma_D(z_from(rows), {1, 1});
  }
  CHECK(rejected == 200);
}

TEST_CASE("reduction_mod2_symplectic") {
  auto id = reduction_mod2_symplectic(z_identity());
  CHECK(id.is_symplectic);
  CHECK(id.N == f2_identity());

  auto red = reduction_mod2_symplectic(printed_M());
  CHECK_FALSE(red.is_symplectic);
  CHECK(red.form_image == F2Matrix{{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}}});
}

TEST_CASE("f_D conjugation") {
  DiagType D{2, 3};
  QMatrix4 I = to_rational(z_identity());
  CHECK(f_D(I, D) == I);
  CHECK(f_D_inv(I, D) == I);

  for (uint64_t s = 0; s < 100; ++s) {
    ZMatrix4 N = sample_congruence(1, 6, s);
    QMatrix4 q = to_rational(N);
    CHECK(f_D(f_D_inv(q, D), D) == q);
    CHECK(f_D_inv(f_D(q, D), D) == q);
  }

  // Lifts from Gamma_2(d1 d2) carry the entry pattern of the conjugation.
  for (const auto& E : kTypes) {
    long d = E.d1 * E.d2;
    for (uint64_t s = 0; s < 40; ++s) {
      ZMatrix4 R = lift_f_D_inv(sample_congruence(d, 5, s), E);
      CHECK(in_gamma_D(R, E));
      for (int i = 0; i < 2; ++i) CHECK(divisible(R[i][i] - 1, d));
      CHECK(divisible(R[0][2], E.d2));
      CHECK(divisible(R[0][3], E.d1));
      CHECK(divisible(R[2][0], E.d1 * d));
      CHECK(divisible(R[3][1], E.d2 * d));
      CHECK(in_congruence(R, T::GammaD, E));
    }
  }

  // Entries with denominators survive only as rationals.
  ZMatrix4 N = z_identity();
  N[0][3] = 1;
  CHECK_THROWS_AS(lift_f_D_inv(N, {1, 2}), GroupError);
  N[0][3] = 2;
  CHECK(lift_f_D_inv(N, {1, 2})[0][3] == 1);
}

TEST_CASE("property: f_D is a homomorphism into Sp_4") {
  for (const auto& D : kTypes)
    for (uint64_t s = 0; s < 30; ++s) {
      ZMatrix4 R1 = sample_level(D, 1, 6, s), R2 = sample_level(D, 1, 6, s + 1000);
      REQUIRE(in_gamma_D(R1, D));
      QMatrix4 a = f_D(to_rational(R1), D), b = f_D(to_rational(R2), D);
      CHECK(f_D(to_rational(z_mul(R1, R2)), D) == q_mul(a, b));
      auto integral = to_integer(a);
      if (integral) CHECK(in_gamma_D(*integral, {1, 1}));
    }
}

TEST_CASE("in_congruence on lifted level elements") {
  DiagType D{1, 3};
  for (uint64_t s = 0; s < 50; ++s) {
    ZMatrix4 R = lift_f_D_inv(sample_congruence(9, 4, s), D);
    CHECK(in_congruence(R, T::GammaDD, D));
  }
  for (T tag : {T::GammaD, T::GammaDD, T::GammaD2D, T::GammaMinus, T::GammaPlus})
    CHECK(in_congruence(z_identity(), tag, D));
  for (T tag : {T::Gamma24, T::GammaEvenSym}) CHECK(in_congruence(z_identity(), tag, {2, 2}));
  for (T tag : {T::GammaIntMinus, T::GammaIntPlus}) CHECK(in_congruence(z_identity(), tag, {1, 2}));
}

TEST_CASE("GammaMinus and GammaPlus separate the two parities") {
  DiagType D{1, 3};
  ZMatrix4 R = z_identity();
  R[2][0] = 1;
  CHECK(in_congruence(R, T::GammaDD, D));
  CHECK(in_congruence(R, T::GammaMinus, D));
  CHECK_FALSE(in_congruence(R, T::GammaPlus, D));
  CHECK_FALSE(in_congruence(R, T::GammaD2D, D));
}

TEST_CASE("property: subgroup nesting and the kernel of reduction") {
  for (DiagType D : {DiagType{1, 1}, DiagType{1, 3}, DiagType{3, 3}, DiagType{1, 5}})
    for (uint64_t s = 0; s < 300; ++s) {
      ZMatrix4 R = sample_level(D, s % 3 ? 1 : 2, 8, s);
      bool g = in_congruence(R, T::GammaD, D), dd = in_congruence(R, T::GammaDD, D);
      bool d2d = in_congruence(R, T::GammaD2D, D);
      bool mi = in_congruence(R, T::GammaMinus, D), pl = in_congruence(R, T::GammaPlus, D);
      CHECK(g);
      CHECK(dd);
      if (d2d) CHECK((mi && pl));
      CHECK((dd && congruent_mod(R, 2)) == d2d);
    }
}

TEST_CASE("Gamma24 is the (2,2) case of GammaEvenSym") {
  for (uint64_t s = 0; s < 300; ++s) {
    ZMatrix4 R = sample_level({2, 2}, 1 + static_cast<long>(s % 2), 6, s);
    CHECK(in_congruence(R, T::Gamma24, {2, 2}) == in_congruence(R, T::GammaEvenSym, {2, 2}));
  }
  ZMatrix4 R = z_identity();
  R[0][2] = 2;
  CHECK_FALSE(in_congruence(R, T::Gamma24, {2, 2}));
  R[0][2] = 4;
  CHECK(in_congruence(R, T::Gamma24, {2, 2}));
}

TEST_CASE("parity mismatches throw") {
  CHECK_THROWS_AS(in_congruence(z_identity(), T::GammaMinus, {1, 2}), GroupError);
  CHECK_THROWS_AS(in_congruence(z_identity(), T::GammaPlus, {2, 2}), GroupError);
  CHECK_THROWS_AS(in_congruence(z_identity(), T::Gamma24, {1, 2}), GroupError);
  CHECK_THROWS_AS(in_congruence(z_identity(), T::GammaEvenSym, {1, 3}), GroupError);
  CHECK_THROWS_AS(in_congruence(z_identity(), T::GammaIntMinus, {1, 3}), GroupError);
  CHECK_THROWS_AS(in_congruence(z_identity(), T::GammaIntPlus, {2, 2}), GroupError);
}

TEST_CASE("intermediate predicates are not closed under products") {
  // Both coordinate readings admit a pair of members whose product is not a member.
  DiagType D{1, 2};
  IntermediateReading standard;
  IntermediateReading swapped{{0, 2}, {1, 3}};

  ZMatrix4 A = z_from({{{1, 0, 0, -1}, {0, 1, -2, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  ZMatrix4 B = z_from({{{1, 0, 0, 0}, {-2, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}});
  ZMatrix4 C = z_from({{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -2, 1}}});
  for (T tag : {T::GammaIntMinus, T::GammaIntPlus}) {
    CHECK(in_congruence(A, tag, D, standard));
    CHECK(in_congruence(B, tag, D, standard));
    CHECK_FALSE(in_congruence(z_mul(A, B), tag, D, standard));

    CHECK(in_congruence(A, tag, D, swapped));
    CHECK(in_congruence(C, tag, D, swapped));
    CHECK_FALSE(in_congruence(z_mul(A, C), tag, D, swapped));
  }
}

TEST_CASE("igusa_index") {
  CHECK(igusa_index(1) == 1);
  CHECK(igusa_index(2) == 720);
  CHECK(igusa_index(3) == 51840);
  for (long d = 1; d <= 99; d += 2) CHECK(igusa_index(2 * d) == 720 * igusa_index(d));
  CHECK_THROWS_AS(igusa_index(0), GroupError);
}

TEST_CASE("sample_congruence") {
  CHECK(sample_congruence(5, 0, 9) == z_identity());
  CHECK(sample_congruence(4, 7, 3) == sample_congruence(4, 7, 3));
  for (long m : {1L, 2L, 3L, 4L, 6L}) {
    int ok = 0;
    for (uint64_t s = 0; s < 200; ++s) {
      ZMatrix4 R = sample_congruence(m, 10, s);
      ok += in_gamma_D(R, {1, 1}) && congruent_mod(R, m);
    }
    CHECK(ok == 200);
  }
  CHECK_THROWS_AS(sample_congruence(0, 1, 1), GroupError);
}

TEST_CASE("sample_level stays in the level subgroup") {
  for (const auto& D : kTypes)
    for (long m : {1L, 2L})
      for (uint64_t s = 0; s < 60; ++s) {
        ZMatrix4 R = sample_level(D, m, 8, s);
        CHECK(in_gamma_D(R, D));
        CHECK(congruent_identity(R, D, m));
      }
}

TEST_CASE("mod-2 reductions of odd-level samples generate Sp_4(F_2)") {
  for (long m : {1L, 3L, 5L}) {
    std::set<F2Matrix> seen{f2_identity()};
    std::vector<F2Matrix> gens;
    for (uint64_t s = 0; s < 200; ++s) gens.push_back(reduction_mod2_symplectic(sample_congruence(m, 6, s)).N);
    std::vector<F2Matrix> frontier{f2_identity()};
    while (!frontier.empty()) {
      std::vector<F2Matrix> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          F2Matrix y = f2_mul(x, g);
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier.swap(next);
    }
    CHECK(seen.size() == 720);
  }
}
