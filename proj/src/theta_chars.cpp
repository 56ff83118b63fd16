// SPDX-License-Identifier: Apache-2.0
#include "thetakit/theta_chars.hpp"

#include <algorithm>
#include <set>

namespace thetakit {

namespace {

int bit(int v, int i) { return (v >> i) & 1; }

int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

Characteristic Characteristic::from_index(int v) {
  if (v < 0 || v > 15) throw ThetaError("characteristic index out of range");
  return {{bit(v, 0), bit(v, 1)}, {bit(v, 2), bit(v, 3)}};
}

int arf_parity(const Characteristic& m) {
  return (m.a[0] * m.b[0] + m.a[1] * m.b[1]) % 2 ? -1 : 1;
}

F2Matrix bilinear_form(const BilinearType& t) {
  F2Matrix B{};
  if (t.d1_odd) B[0][2] = B[2][0] = 1;
  if (t.d2_odd) B[1][3] = B[3][1] = 1;
  return B;
}

F2Matrix standard_form_f2() { return bilinear_form({true, true}); }

F2Matrix f2_mul(const F2Matrix& x, const F2Matrix& y) {
  F2Matrix r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s ^= x[i][k] & y[k][j];
      r[i][j] = s;
    }
  return r;
}

F2Matrix f2_transpose(const F2Matrix& x) {
  F2Matrix r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
  return r;
}

F2Matrix f2_identity() {
  F2Matrix r{};
  for (int i = 0; i < 4; ++i) r[i][i] = 1;
  return r;
}

F2Matrix f2_reduce(const IntMatrix4& m) {
  F2Matrix r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = mod2(m[i][j]);
  return r;
}

bool is_f2_symplectic(const F2Matrix& m) {
  static const F2Matrix J = standard_form_f2();
  return f2_mul(f2_mul(m, J), f2_transpose(m)) == J;
}

int f2_apply(const F2Matrix& m, int v) {
  int out = 0;
  for (int i = 0; i < 4; ++i) {
    int s = 0;
    for (int k = 0; k < 4; ++k) s ^= m[i][k] & bit(v, k);
    out |= s << i;
  }
  return out;
}

int f2_pair(const F2Matrix& B, int x, int y) {
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s ^= bit(x, i) & B[i][j] & bit(y, j);
  return s;
}

int QuadraticRefinement::plus() const {
  return static_cast<int>(std::count(values.begin(), values.end(), 1));
}

bool is_refinement(const QuadraticRefinement& q, const F2Matrix& B) {
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      int lhs = q.values[x] * q.values[y] * q.values[x ^ y];
      if (lhs != (f2_pair(B, x, y) ? -1 : 1)) return false;
    }
  return true;
}

std::vector<QuadraticRefinement> refinements(const F2Matrix& B) {
  for (int i = 0; i < 4; ++i) {
    if (B[i][i] != 0) throw ThetaError("bilinear form is not alternating");
    for (int j = 0; j < 4; ++j)
      if (B[i][j] != B[j][i] || (B[i][j] & ~1)) throw ThetaError("bilinear form is not alternating");
  }
  std::vector<QuadraticRefinement> out;
  for (unsigned signs = 0; signs < (1u << 16); ++signs) {
    QuadraticRefinement q;
    for (int x = 0; x < 16; ++x) q.values[x] = (signs >> x) & 1 ? -1 : 1;
    if (is_refinement(q, B)) out.push_back(q);
  }
  return out;
}

Census census(const BilinearType& t) {
  Census c;
  for (const auto& q : refinements(bilinear_form(t))) ++c[{q.plus(), q.minus()}];
  return c;
}

QuadraticRefinement refinement_of(const Characteristic& m) {
  QuadraticRefinement q;
  for (int x = 0; x < 16; ++x) {
    auto c = Characteristic::from_index(x);
    int e = c.a[0] * c.b[0] + c.a[1] * c.b[1] + m.b[0] * c.a[0] + m.b[1] * c.a[1] +
            m.a[0] * c.b[0] + m.a[1] * c.b[1];
    q.values[x] = e % 2 ? -1 : 1;
  }
  return q;
}

QuadraticRefinement act_on_refinement(const F2Matrix& M, const QuadraticRefinement& q) {
  std::array<int, 16> preimage{};
  std::array<bool, 16> hit{};
  for (int x = 0; x < 16; ++x) {
    int y = f2_apply(M, x);
    if (hit[y]) throw ThetaError("matrix is not invertible over F_2");
    hit[y] = true;
    preimage[y] = x;
  }
  QuadraticRefinement r;
  for (int x = 0; x < 16; ++x) r.values[x] = q.values[preimage[x]];
  return r;
}

const std::vector<F2Matrix>& sp4f2_enumerate() {
  static const std::vector<F2Matrix> group = [] {
    std::vector<F2Matrix> out;
    for (unsigned bits = 0; bits < (1u << 16); ++bits) {
      F2Matrix m{};
      for (int k = 0; k < 16; ++k) m[k / 4][k % 4] = (bits >> k) & 1;
      if (is_f2_symplectic(m)) out.push_back(m);
    }
    return out;
  }();
  return group;
}

Characteristic char_action(const F2Matrix& M, const Characteristic& m) {
  if (!is_f2_symplectic(M)) throw ThetaError("matrix is not symplectic mod 2");
  auto A = [&](int i, int j) { return M[i][j]; };
  auto B = [&](int i, int j) { return M[i][j + 2]; };
  auto C = [&](int i, int j) { return M[i + 2][j]; };
  auto D = [&](int i, int j) { return M[i + 2][j + 2]; };
  Characteristic r;
  for (int i = 0; i < 2; ++i) {
    int na = 0, nb = 0;
    for (int k = 0; k < 2; ++k) {
      na += D(i, k) * m.a[k] + C(i, k) * m.b[k] + C(i, k) * D(i, k);
      nb += B(i, k) * m.a[k] + A(i, k) * m.b[k] + A(i, k) * B(i, k);
    }
    r.a[i] = na % 2;
    r.b[i] = nb % 2;
  }
  return r;
}

Characteristic char_action(const IntMatrix4& M, const Characteristic& m) {
  return char_action(f2_reduce(M), m);
}

std::vector<std::vector<int>> char_orbits() {
  std::vector<std::vector<int>> orbits;
  std::array<bool, 16> seen{};
  for (int start = 0; start < 16; ++start) {
    if (seen[start]) continue;
    std::set<int> orbit;
    for (const auto& M : sp4f2_enumerate())
      orbit.insert(char_action(M, Characteristic::from_index(start)).index());
    for (int v : orbit) seen[v] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

Characteristic reference_characteristic(Parity parity) {
  if (parity == Parity::Even) return {};
  return {{1, 0}, {1, 0}};
}

std::vector<F2Matrix> stabilizer(Parity parity) {
  auto ref = reference_characteristic(parity);
  std::vector<F2Matrix> out;
  for (const auto& M : sp4f2_enumerate())
    if (char_action(M, ref) == ref) out.push_back(M);
  return out;
}

long stabilizer_order(Parity parity) { return static_cast<long>(stabilizer(parity).size()); }

Characteristic char_action2(const F2Matrix2& M, const Characteristic& m) {
  int a = M[0][0], b = M[0][1], c = M[1][0], d = M[1][1];
  if ((a * d + b * c) % 2 != 1) throw ThetaError("matrix is not symplectic mod 2");
  Characteristic r;
  r.a[0] = (d * m.a[0] + c * m.b[0] + c * d) % 2;
  r.b[0] = (b * m.a[0] + a * m.b[0] + a * b) % 2;
  return r;
}

long o2_order(Parity parity) {
  Characteristic ref;
  if (parity == Parity::Odd) ref.a[0] = ref.b[0] = 1;
  long count = 0;
  for (int bits = 0; bits < 16; ++bits) {
    F2Matrix2 M{{{bit(bits, 0), bit(bits, 1)}, {bit(bits, 2), bit(bits, 3)}}};
    if ((M[0][0] * M[1][1] + M[0][1] * M[1][0]) % 2 != 1) continue;
    if (char_action2(M, ref) == ref) ++count;
  }
  return count;
}

long theta_index(int g, Parity parity) {
  if (g < 1 || g > 30) throw ThetaError("genus out of range");
  long half = 1L << (g - 1), full = 1L << g;
  return parity == Parity::Odd ? half * (full - 1) : half * (full + 1);
}

}  // namespace thetakit
