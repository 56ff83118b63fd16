// SPDX-License-Identifier: Apache-2.0
#include "thetakit/heisenberg.hpp"

#include <numeric>

namespace thetakit {

namespace {

long md(long v, long m) { return ((v % m) + m) % m; }

/// Exponent k of e(u, b) = exp(-2 pi i sum u_k b_k / d_k) over modulus m.
long e_exponent(long u1, long u2, long v1, long v2, const PolarizationType& D) {
  long m = D.phase_modulus();
  return md(-(u1 * v1 * (m / D.d1) + u2 * v2 * (m / D.d2)), m);
}

size_t delta_index(long i, long j, const PolarizationType& D) {
  return static_cast<size_t>(md(i, D.d1) * D.d2 + md(j, D.d2));
}

}  // namespace

PolarizationType PolarizationType::make(long d1, long d2) {
  if (d1 < 1 || d2 < 1 || d2 % d1 != 0) throw HeisenbergError("polarization type needs d1 | d2");
  return {d1, d2};
}

long PolarizationType::phase_modulus() const { return std::lcm(2L, std::lcm(d1, d2)); }

std::string PolarizationType::to_string() const {
  return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

KElement KElement::make(long a1, long a2, long b1, long b2, const PolarizationType& D) {
  return {md(a1, D.d1), md(a2, D.d2), md(b1, D.d1), md(b2, D.d2)};
}

KElement KElement::plus(const KElement& o, const PolarizationType& D) const {
  return make(a1 + o.a1, a2 + o.a2, b1 + o.b1, b2 + o.b2, D);
}

KElement KElement::negated(const PolarizationType& D) const { return make(-a1, -a2, -b1, -b2, D); }

KElement KElement::times(long k, const PolarizationType& D) const {
  return make(k * a1, k * a2, k * b1, k * b2, D);
}

Phase Phase::make(long k, long m) {
  if (m < 1) throw HeisenbergError("phase modulus must be positive");
  return {md(k, m), m};
}

Phase Phase::operator*(const Phase& o) const {
  if (m != o.m) throw HeisenbergError("phases over different moduli");
  return make(k + o.k, m);
}

Phase Phase::inverse() const { return make(-k, m); }

std::string Phase::to_string() const {
  long g = std::gcd(k, m);
  return "e(" + std::to_string(k / g) + "/" + std::to_string(m / g) + ")";
}

Phase ed_pairing(const KElement& x, const KElement& y, const PolarizationType& D) {
  long m = D.phase_modulus();
  long forward = e_exponent(x.a1, x.a2, y.b1, y.b2, D);
  long backward = e_exponent(y.a1, y.a2, x.b1, x.b2, D);
  return Phase::make(forward - backward, m);
}

HeisenbergElement heis_identity(const PolarizationType& D) {
  return {Phase::make(0, D.phase_modulus()), {}};
}

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h,
                           const PolarizationType& D) {
  long m = D.phase_modulus();
  if (g.phase.m != m || h.phase.m != m) throw HeisenbergError("mismatched polarization types");
  Phase twist = Phase::make(e_exponent(g.k.a1, g.k.a2, h.k.b1, h.k.b2, D), m);
  return {g.phase * h.phase * twist, g.k.plus(h.k, D)};
}

HeisenbergElement heis_inverse(const HeisenbergElement& g, const PolarizationType& D) {
  long m = D.phase_modulus();
  // (alpha, a, b)^{-1} = (alpha^{-1} e(a, b), -a, -b).
  Phase p = g.phase.inverse() * Phase::make(e_exponent(g.k.a1, g.k.a2, g.k.b1, g.k.b2, D), m);
  return {p, g.k.negated(D)};
}

bool heis_equal(const HeisenbergElement& g, const HeisenbergElement& h) {
  return g.phase == h.phase && g.k == h.k;
}

std::vector<HeisenbergElement> heis_generators(const PolarizationType& D) {
  Phase one = Phase::make(0, D.phase_modulus());
  return {{one, KElement::make(1, 0, 0, 0, D)},
          {one, KElement::make(0, 1, 0, 0, D)},
          {one, KElement::make(0, 0, 1, 0, D)},
          {one, KElement::make(0, 0, 0, 1, D)}};
}

MonomialMatrix::MonomialMatrix(std::vector<size_t> perm, std::vector<Phase> phase)
    : perm_(std::move(perm)), phase_(std::move(phase)) {
  if (perm_.size() != phase_.size()) throw HeisenbergError("monomial matrix size mismatch");
  std::vector<bool> hit(perm_.size(), false);
  for (size_t r : perm_) {
    if (r >= perm_.size() || hit[r]) throw HeisenbergError("not a permutation");
    hit[r] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(size_t n, long modulus) {
  return scalar(n, Phase::make(0, modulus));
}

MonomialMatrix MonomialMatrix::scalar(size_t n, const Phase& p) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  return MonomialMatrix(std::move(perm), std::vector<Phase>(n, p));
}

bool MonomialMatrix::is_scalar(Phase* value) const {
  for (size_t c = 0; c < size(); ++c)
    if (perm_[c] != c || !(phase_[c] == phase_[0])) return false;
  if (value && size()) *value = phase_[0];
  return true;
}

long MonomialMatrix::trace_if_permutation() const {
  long t = 0;
  for (size_t c = 0; c < size(); ++c) {
    if (perm_[c] != c) continue;
    if (!phase_[c].is_one()) throw HeisenbergError("trace of a non-permutation matrix");
    ++t;
  }
  return t;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (size() != o.size()) throw HeisenbergError("monomial matrix size mismatch");
  std::vector<size_t> perm(size());
  std::vector<Phase> phase(size());
  for (size_t c = 0; c < size(); ++c) {
    size_t mid = o.perm_[c];
    perm[c] = perm_[mid];
    phase[c] = o.phase_[c] * phase_[mid];
  }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<size_t> perm(size());
  std::vector<Phase> phase(size());
  for (size_t c = 0; c < size(); ++c) {
    perm[perm_[c]] = c;
    phase[perm_[c]] = phase_[c].inverse();
  }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

bool MonomialMatrix::operator==(const MonomialMatrix& o) const {
  return perm_ == o.perm_ && phase_ == o.phase_;
}

MonomialMatrix schrodinger_matrix(const HeisenbergElement& h, const PolarizationType& D) {
  size_t n = static_cast<size_t>(D.order());
  long m = D.phase_modulus();
  std::vector<size_t> perm(n);
  std::vector<Phase> phase(n);
  for (long i = 0; i < D.d1; ++i)
    for (long j = 0; j < D.d2; ++j) {
      size_t c = delta_index(i, j, D);
      long u1 = i - h.k.a1, u2 = j - h.k.a2;
      perm[c] = delta_index(u1, u2, D);
      phase[c] = h.phase * Phase::make(e_exponent(u1, u2, h.k.b1, h.k.b2, D), m);
    }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

MonomialMatrix involution_matrix(const PolarizationType& D) {
  size_t n = static_cast<size_t>(D.order());
  std::vector<size_t> perm(n);
  for (long i = 0; i < D.d1; ++i)
    for (long j = 0; j < D.d2; ++j) perm[delta_index(i, j, D)] = delta_index(-i, -j, D);
  return MonomialMatrix(std::move(perm), std::vector<Phase>(n, Phase::make(0, D.phase_modulus())));
}

long involution_trace(const PolarizationType& D) {
  return involution_matrix(D).trace_if_permutation();
}

std::pair<long, long> eigenspace_dims(const PolarizationType& D) {
  auto plus = eigenspace_basis(D, 1), minus = eigenspace_basis(D, -1);
  return {static_cast<long>(plus.size()), static_cast<long>(minus.size())};
}

std::vector<std::vector<long>> eigenspace_basis(const PolarizationType& D, int sign) {
  if (sign != 1 && sign != -1) throw HeisenbergError("eigenvalue must be +1 or -1");
  auto iota = involution_matrix(D);
  size_t n = iota.size();
  std::vector<std::vector<long>> out;
  for (size_t x = 0; x < n; ++x) {
    size_t y = iota.perm()[x];
    if (y < x || (y == x && sign < 0)) continue;
    std::vector<long> v(n, 0);
    v[x] += 1;
    v[y] += sign;
    out.push_back(std::move(v));
  }
  return out;
}

std::pair<long, long> section_dims(const PolarizationType& D, BundleParity parity) {
  long n = D.order();
  bool odd1 = D.d1 % 2, odd2 = D.d2 % 2;
  std::pair<long, long> even_bundle;
  if (odd1 && odd2)
    even_bundle = {(n + 1) / 2, (n - 1) / 2};
  else if (odd1 || odd2)
    even_bundle = {n / 2 + 1, n / 2 - 1};
  else
    return {n / 2 + 2, n / 2 - 2};
  if (parity == Parity::Odd) std::swap(even_bundle.first, even_bundle.second);
  return even_bundle;
}

std::pair<long, long> lefschetz_consistency(const PolarizationType& D, BundleParity parity) {
  auto h = section_dims(D, parity);
  Census c = census(BilinearType::of(D.d1, D.d2));
  // The bundle's distribution is the most unbalanced one of the matching sign.
  bool odd_bundle = parity == Parity::Odd && (D.d1 % 2 || D.d2 % 2);
  std::pair<int, int> best{8, 8};
  for (const auto& [dist, count] : c) {
    int skew = dist.first - dist.second;
    if (odd_bundle ? skew < best.first - best.second : skew > best.first - best.second) best = dist;
  }
  int diff = best.first - best.second;
  if (diff % 4 != 0) throw HeisenbergError("census distribution not divisible by 4");
  return {h.first - h.second, diff / 4};
}

HeisenbergElement heis_involution(const HeisenbergElement& h, const PolarizationType& D) {
  return {h.phase, h.k.negated(D)};
}

HeisenbergElement GammaZ::apply(const HeisenbergElement& h) const {
  return {h.phase * ed_pairing(z, h.k, D), h.k};
}

bool GammaZ::commutes_with_involution() const {
  for (const auto& g : heis_generators(D))
    if (!heis_equal(apply(heis_involution(g, D)), heis_involution(apply(g), D))) return false;
  return true;
}

SymmetricCounts symmetric_counts(int g, const PolarizationType& D) {
  std::vector<long> ds;
  if (g == 2) {
    ds = {D.d1, D.d2};
  } else if (g == 1) {
    if (D.d1 != 1) throw HeisenbergError("genus one expects type (1, d)");
    ds = {D.d2};
  } else {
    throw HeisenbergError("genus must be 1 or 2");
  }
  int s = 0;
  for (long d : ds) s += d % 2 != 0;
  return {1L << (2 * s), 1L << (2 * (g - s))};
}

long two_torsion_count(const PolarizationType& D) {
  long count = 0;
  for (long a1 = 0; a1 < D.d1; ++a1)
    for (long a2 = 0; a2 < D.d2; ++a2)
      for (long b1 = 0; b1 < D.d1; ++b1)
        for (long b2 = 0; b2 < D.d2; ++b2)
          if (KElement::make(a1, a2, b1, b2, D).times(2, D).is_zero()) ++count;
  return count;
}

}  // namespace thetakit
