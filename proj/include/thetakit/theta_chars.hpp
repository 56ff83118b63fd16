// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thetakit {

class ThetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parity { Even, Odd };

/// Vectors of F_2^4 are 4-bit masks: bit 0 = a1, bit 1 = a2, bit 2 = b1, bit 3 = b2.
using F2Matrix = std::array<std::array<int, 4>, 4>;
using IntMatrix4 = std::array<std::array<long, 4>, 4>;
using F2Matrix2 = std::array<std::array<int, 2>, 2>;

struct Characteristic {
  std::array<int, 2> a{0, 0};
  std::array<int, 2> b{0, 0};

  static Characteristic from_index(int v);
  int index() const { return a[0] | a[1] << 1 | b[0] << 2 | b[1] << 3; }
  bool operator==(const Characteristic&) const = default;
};

/// (-1)^{a.b}.
int arf_parity(const Characteristic& m);

struct BilinearType {
  bool d1_odd = true;
  bool d2_odd = true;
  static BilinearType of(long d1, long d2) { return {d1 % 2 != 0, d2 % 2 != 0}; }
};

/// Gram matrix of the mod-2 Weil pairing: the (a_k, b_k) pair is paired iff d_k is odd.
F2Matrix bilinear_form(const BilinearType& t);
/// (0 I; I 0) over F_2.
F2Matrix standard_form_f2();

F2Matrix f2_mul(const F2Matrix& x, const F2Matrix& y);
F2Matrix f2_transpose(const F2Matrix& x);
F2Matrix f2_identity();
F2Matrix f2_reduce(const IntMatrix4& m);
bool is_f2_symplectic(const F2Matrix& m);
/// Image of the column vector v (bit mask).
int f2_apply(const F2Matrix& m, int v);
/// x^T B y over F_2.
int f2_pair(const F2Matrix& B, int x, int y);

struct QuadraticRefinement {
  /// values[x] in {+1, -1}.
  std::array<int, 16> values{};
  int plus() const;
  int minus() const { return 16 - plus(); }
  bool operator==(const QuadraticRefinement&) const = default;
};

/// All q with q(x) q(y) q(x + y) = (-1)^{x^T B y}, by exhaustive search over sign tables.
std::vector<QuadraticRefinement> refinements(const F2Matrix& B);
bool is_refinement(const QuadraticRefinement& q, const F2Matrix& B);

using Census = std::map<std::pair<int, int>, int>;
Census census(const BilinearType& t);

/// q_m(x) = (-1)^{x_a . x_b + m_b . x_a + m_a . x_b}, a refinement of the standard form.
QuadraticRefinement refinement_of(const Characteristic& m);
/// (M q)(x) = q(M^{-1} x).
QuadraticRefinement act_on_refinement(const F2Matrix& M, const QuadraticRefinement& q);

/// Every F_2 matrix preserving the standard form; computed once.
const std::vector<F2Matrix>& sp4f2_enumerate();

/// m' = (D a - C b + diag(C D^T), -B a + A b + diag(A B^T)) mod 2 for M = (A B; C D).
/// Throws unless M is symplectic mod 2.
Characteristic char_action(const IntMatrix4& M, const Characteristic& m);
Characteristic char_action(const F2Matrix& M, const Characteristic& m);

/// Orbits of Sp_4(F_2) on the 16 characteristics, as sorted index lists.
std::vector<std::vector<int>> char_orbits();

/// ((1,0),(1,0)) for odd, zero for even.
Characteristic reference_characteristic(Parity parity);
std::vector<F2Matrix> stabilizer(Parity parity);
long stabilizer_order(Parity parity);

/// The genus-one analogue: stabilizer in Sp_2(F_2) of an even or the odd characteristic.
Characteristic char_action2(const F2Matrix2& M, const Characteristic& m);
long o2_order(Parity parity);

/// 2^{g-1} (2^g - 1) for odd, 2^{g-1} (2^g + 1) for even.
long theta_index(int g, Parity parity);

}  // namespace thetakit
