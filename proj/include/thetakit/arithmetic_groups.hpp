// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "thetakit/theta_chars.hpp"

namespace thetakit {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ZMatrix4 = std::array<std::array<mpz_class, 4>, 4>;
using QMatrix4 = std::array<std::array<mpq_class, 4>, 4>;

/// D = diag(d1, d2), d1, d2 >= 1. Divisibility d1 | d2 is not required here.
struct DiagType {
  long d1 = 1, d2 = 1;
  long at(int k) const { return k == 0 ? d1 : d2; }
};

ZMatrix4 z_identity();
ZMatrix4 z_mul(const ZMatrix4& x, const ZMatrix4& y);
ZMatrix4 z_transpose(const ZMatrix4& x);
ZMatrix4 z_from(const std::array<std::array<long, 4>, 4>& rows);
QMatrix4 q_mul(const QMatrix4& x, const QMatrix4& y);
QMatrix4 to_rational(const ZMatrix4& x);
/// Nullopt when some entry is not an integer.
std::optional<ZMatrix4> to_integer(const QMatrix4& x);
std::string to_string(const ZMatrix4& x);

/// (0 D; -D 0).
ZMatrix4 form_J(const DiagType& D);

/// R J_D R^t == J_D.
bool in_gamma_D(const ZMatrix4& R, const DiagType& D);

struct Mod2Reduction {
  F2Matrix N;
  bool is_symplectic = false;
  /// N J N^t over F_2.
  F2Matrix form_image;
};
Mod2Reduction reduction_mod2_symplectic(const ZMatrix4& R);

/// f_D(R) = diag(I, D^{-1}) R diag(I, D) and its inverse conjugation.
QMatrix4 f_D(const QMatrix4& R, const DiagType& D);
QMatrix4 f_D_inv(const QMatrix4& N, const DiagType& D);
/// Integral lift of an integer matrix; throws when f_D_inv(N) is not integral.
ZMatrix4 lift_f_D_inv(const ZMatrix4& N, const DiagType& D);

enum class SubgroupTag {
  GammaD,
  GammaDD,
  GammaD2D,
  Gamma24,
  GammaEvenSym,
  GammaMinus,
  GammaPlus,
  GammaIntMinus,
  GammaIntPlus,
};
std::string to_string(SubgroupTag tag);

/// Row-wise congruence: block row k of (a - I, b; c, d - I) divisible by m * d_k.
bool congruent_identity(const ZMatrix4& R, const DiagType& D, long m);

/// Index pairs used for the intermediate-type restrictions (0-based). The kernel pair carries
/// the Gamma_1(d2, 2 d2) conditions, the quotient pair the mod-2 O_2 condition.
struct IntermediateReading {
  std::array<int, 2> kernel_pair{1, 3};
  std::array<int, 2> quotient_pair{0, 2};
};

/// Throws GroupError when D has the wrong parity for the tag.
bool in_congruence(const ZMatrix4& R, SubgroupTag tag, const DiagType& D,
                   const IntermediateReading& reading = {});

/// h^10 prod_{p | h} (1 - p^-2)(1 - p^-4).
mpz_class igusa_index(long h);

/// Word of `length` elementary unipotents for the form J_D, each congruent to I modulo
/// m * D row-wise: (I, T; 0, I) with T D symmetric, (I, 0; C, I) with C D symmetric, and
/// (U, 0; 0, D U^{-t} D^{-1}). D = (1,1) gives Gamma_2(m).
ZMatrix4 sample_level(const DiagType& D, long m, size_t length, uint64_t seed);
ZMatrix4 sample_congruence(long m, size_t length, uint64_t seed);

}  // namespace thetakit
