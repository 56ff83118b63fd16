// SPDX-License-Identifier: Apache-2.0
#include "thetakit/arithmetic_groups.hpp"

#include <random>
#include <sstream>

namespace thetakit {

namespace {

/// Scaling vector of diag(I, D): (1, 1, d1, d2).
mpq_class scale(const DiagType& D, int i) { return i < 2 ? mpq_class(1) : mpq_class(D.at(i - 2)); }

bool divides(const mpz_class& m, const mpz_class& v) { return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t()) != 0; }

void require_positive(const DiagType& D) {
  if (D.d1 < 1 || D.d2 < 1) throw GroupError("type entries must be positive");
}

bool quotient_in_o2_plus(const ZMatrix4& R, const std::array<int, 2>& pair) {
  F2Matrix2 M;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpz_class r = R[pair[i]][pair[j]] % 2;
      M[i][j] = r == 0 ? 0 : 1;
    }
  if ((M[0][0] * M[1][1] + M[0][1] * M[1][0]) % 2 != 1) return false;
  Characteristic zero;
  return char_action2(M, zero) == zero;
}

}  // namespace

ZMatrix4 z_identity() {
  ZMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = i == j ? 1 : 0;
  return r;
}

ZMatrix4 z_mul(const ZMatrix4& x, const ZMatrix4& y) {
  ZMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < 4; ++k) s += x[i][k] * y[k][j];
      r[i][j] = s;
    }
  return r;
}

ZMatrix4 z_transpose(const ZMatrix4& x) {
  ZMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
  return r;
}

ZMatrix4 z_from(const std::array<std::array<long, 4>, 4>& rows) {
  ZMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = rows[i][j];
  return r;
}

QMatrix4 q_mul(const QMatrix4& x, const QMatrix4& y) {
  QMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      mpq_class s = 0;
      for (int k = 0; k < 4; ++k) s += x[i][k] * y[k][j];
      r[i][j] = s;
    }
  return r;
}

QMatrix4 to_rational(const ZMatrix4& x) {
  QMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = mpq_class(x[i][j]);
  return r;
}

std::optional<ZMatrix4> to_integer(const QMatrix4& x) {
  ZMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (x[i][j].get_den() != 1) return std::nullopt;
      r[i][j] = x[i][j].get_num();
    }
  return r;
}

std::string to_string(const ZMatrix4& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << x[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

ZMatrix4 form_J(const DiagType& D) {
  ZMatrix4 J;
  for (auto& row : J)
    for (auto& v : row) v = 0;
  J[0][2] = D.d1;
  J[1][3] = D.d2;
  J[2][0] = -D.d1;
  J[3][1] = -D.d2;
  return J;
}

bool in_gamma_D(const ZMatrix4& R, const DiagType& D) {
  require_positive(D);
  ZMatrix4 J = form_J(D);
  return z_mul(z_mul(R, J), z_transpose(R)) == J;
}

Mod2Reduction reduction_mod2_symplectic(const ZMatrix4& R) {
  Mod2Reduction out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.N[i][j] = divides(2, R[i][j]) ? 0 : 1;
  out.form_image = f2_mul(f2_mul(out.N, standard_form_f2()), f2_transpose(out.N));
  out.is_symplectic = out.form_image == standard_form_f2();
  return out;
}

QMatrix4 f_D(const QMatrix4& R, const DiagType& D) {
  require_positive(D);
  QMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = R[i][j] * scale(D, j) / scale(D, i);
  return r;
}

QMatrix4 f_D_inv(const QMatrix4& N, const DiagType& D) {
  require_positive(D);
  QMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = N[i][j] * scale(D, i) / scale(D, j);
  return r;
}

ZMatrix4 lift_f_D_inv(const ZMatrix4& N, const DiagType& D) {
  auto r = to_integer(f_D_inv(to_rational(N), D));
  if (!r) throw GroupError("f_D^{-1}(N) is not integral");
  return *r;
}

std::string to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::GammaD: return "GammaD";
    case SubgroupTag::GammaDD: return "GammaDD";
    case SubgroupTag::GammaD2D: return "GammaD2D";
    case SubgroupTag::Gamma24: return "Gamma24";
    case SubgroupTag::GammaEvenSym: return "GammaEvenSym";
    case SubgroupTag::GammaMinus: return "GammaMinus";
    case SubgroupTag::GammaPlus: return "GammaPlus";
    case SubgroupTag::GammaIntMinus: return "GammaIntMinus";
    case SubgroupTag::GammaIntPlus: return "GammaIntPlus";
  }
  return "?";
}

bool congruent_identity(const ZMatrix4& R, const DiagType& D, long m) {
  for (int i = 0; i < 4; ++i) {
    mpz_class modulus = m * D.at(i % 2);
    for (int j = 0; j < 4; ++j) {
      mpz_class v = R[i][j] - (i == j ? 1 : 0);
      if (!divides(modulus, v)) return false;
    }
  }
  return true;
}

bool in_congruence(const ZMatrix4& R, SubgroupTag tag, const DiagType& D,
                   const IntermediateReading& reading) {
  require_positive(D);
  bool odd1 = D.d1 % 2, odd2 = D.d2 % 2;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw GroupError(std::string(to_string(tag)) + " requires " + what);
  };
  switch (tag) {
    case SubgroupTag::GammaD:
      return in_gamma_D(R, D);
    case SubgroupTag::GammaDD:
      return in_gamma_D(R, D) && congruent_identity(R, D, 1);
    case SubgroupTag::GammaD2D:
      return in_gamma_D(R, D) && congruent_identity(R, D, 2);
    case SubgroupTag::Gamma24: {
      need(!odd1 && !odd2, "d1 and d2 even");
      if (!in_gamma_D(R, {1, 1}) || !congruent_identity(R, {1, 1}, 2)) return false;
      for (int k = 0; k < 2; ++k)
        if (!divides(4, R[k][k + 2]) || !divides(4, R[k + 2][k])) return false;
      return true;
    }
    case SubgroupTag::GammaEvenSym: {
      need(!odd1 && !odd2, "d1 and d2 even");
      if (!in_gamma_D(R, D) || !congruent_identity(R, D, 1)) return false;
      for (int k = 0; k < 2; ++k) {
        mpz_class m = 2 * D.at(k);
        if (!divides(m, R[k][k + 2]) || !divides(m, R[k + 2][k])) return false;
      }
      return true;
    }
    case SubgroupTag::GammaMinus:
    case SubgroupTag::GammaPlus: {
      need(odd1 && odd2, "d1 and d2 odd");
      if (!in_gamma_D(R, D) || !congruent_identity(R, D, 1)) return false;
      auto red = reduction_mod2_symplectic(R);
      Parity p = tag == SubgroupTag::GammaMinus ? Parity::Odd : Parity::Even;
      auto ref = reference_characteristic(p);
      return red.is_symplectic && char_action(red.N, ref) == ref;
    }
    case SubgroupTag::GammaIntMinus:
    case SubgroupTag::GammaIntPlus: {
      need(odd1 && !odd2, "d1 odd and d2 even");
      if (!in_gamma_D(R, D) || !congruent_identity(R, D, 1)) return false;
      auto [u, v] = reading.kernel_pair;
      mpz_class m = 2 * D.d2;
      if (!divides(m, R[u][v]) || !divides(m, R[v][u])) return false;
      if (tag == SubgroupTag::GammaIntPlus) return quotient_in_o2_plus(R, reading.quotient_pair);
      return true;
    }
  }
  return false;
}

mpz_class igusa_index(long h) {
  if (h < 1) throw GroupError("igusa index needs h >= 1");
  mpz_class num, den = 1;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(h), 10);
  auto account = [&](long p) {
    mpz_class p2 = p * p, p4 = p2 * p2;
    num *= (p2 - 1) * (p4 - 1);
    den *= p2 * p4;
  };
  long rest = h;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    account(p);
  }
  if (rest > 1) account(rest);
  if (!divides(den, num)) throw GroupError("igusa index is not integral");
  return num / den;
}

ZMatrix4 sample_level(const DiagType& D, long m, size_t length, uint64_t seed) {
  require_positive(D);
  if (m < 1) throw GroupError("level must be positive");
  std::mt19937_64 rng(seed);
  ZMatrix4 R = z_identity();
  for (size_t step = 0; step < length; ++step) {
    long k = static_cast<long>(rng() % 4);
    k = k < 2 ? k - 2 : k - 1;  // {-2, -1, 1, 2}
    ZMatrix4 E = z_identity();
    mpz_class d1 = D.d1, d2 = D.d2, s = k * m;
    switch (rng() % 8) {
      case 0: E[0][2] = s * d1; break;
      case 1: E[1][3] = s * d2; break;
      case 2: E[0][3] = s * d1; E[1][2] = s * d2; break;
      case 3: E[2][0] = s * d1; break;
      case 4: E[3][1] = s * d2; break;
      case 5: E[2][1] = s * d1; E[3][0] = s * d2; break;
      case 6: E[0][1] = s * d1; E[3][2] = -s * d2; break;
      default: E[1][0] = s * d2; E[2][3] = -s * d1; break;
    }
    R = z_mul(R, E);
  }
  return R;
}

ZMatrix4 sample_congruence(long m, size_t length, uint64_t seed) {
  return sample_level({1, 1}, m, length, seed);
}

}  // namespace thetakit
