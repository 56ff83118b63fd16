// SPDX-License-Identifier: Apache-2.0
#include "thetakit/binary_form.hpp"

#include <algorithm>

namespace thetakit {

ProjectivePoint normalize_point(const std::vector<mpq_class>& coords) {
  mpz_class l = 1, g = 0;
  for (const auto& c : coords) l = lcm(l, mpz_class(c.get_den()));
  ProjectivePoint out;
  for (const auto& c : coords) {
    mpz_class v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    g = gcd(g, v);
  }
  if (g == 0) throw AlgebraError("zero vector is not a projective point");
  auto first = std::find_if(out.begin(), out.end(), [](const mpz_class& v) { return v != 0; });
  if (*first < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

ProjectivePoint make_point(std::initializer_list<long> coords) {
  std::vector<mpq_class> q;
  for (long c : coords) q.emplace_back(c);
  return normalize_point(q);
}

std::string point_to_string(const ProjectivePoint& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].get_str();
  return s + "]";
}

std::vector<mpq_class> binary_form_on_line(const Polynomial& f, const ProjectivePoint& p,
                                           const ProjectivePoint& q) {
  if (!f.domain().is_rational()) throw AlgebraError("line restriction requires coefficients in Q");
  if (p.size() != f.ring()->nvars() || q.size() != p.size())
    throw AlgebraError("point dimension does not match the ring");
  if (!f.is_homogeneous()) throw AlgebraError("line restriction requires a homogeneous form");
  RingPtr st = make_ring({"s", "t"});
  Polynomial s = Polynomial::variable(st, 0), t = Polynomial::variable(st, 1);
  std::vector<Polynomial> images;
  for (size_t i = 0; i < p.size(); ++i)
    images.push_back(Scalar(mpq_class(p[i])) * s + Scalar(mpq_class(q[i])) * t);
  Polynomial b = substitute(f, images);
  int d = std::max(f.total_degree(), 0);
  std::vector<mpq_class> coeffs(d + 1);
  for (const auto& term : b.terms()) coeffs[term.exp[1]] = term.coeff.rational();
  return coeffs;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > (1 << 22)) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw AlgebraError("coefficient too large for rational-root enumeration");
      break;
    }
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) fac.emplace_back(d, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs = {1};
  for (const auto& [pr, e] : fac) {
    size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= pr;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

// Integer coefficients with unit content.
std::vector<mpz_class> primitive_integers(const std::vector<mpq_class>& c) {
  mpz_class l = 1, g = 0;
  for (const auto& v : c) l = lcm(l, mpz_class(v.get_den()));
  std::vector<mpz_class> out;
  for (const auto& v : c) {
    out.push_back(v.get_num() * (l / v.get_den()));
    g = gcd(g, out.back());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace

BinaryRoots rational_roots(const std::vector<mpq_class>& coeffs_in) {
  BinaryRoots out;
  std::vector<mpq_class> c = coeffs_in;
  if (std::all_of(c.begin(), c.end(), [](const mpq_class& v) { return v == 0; }))
    throw AlgebraError("zero binary form has no root decomposition");
  // (1:0) is a root of order equal to the number of leading zero coefficients.
  unsigned lead = 0;
  while (c[lead] == 0) ++lead;
  if (lead) out.roots.push_back({{1, 0}, lead});
  c.erase(c.begin(), c.begin() + lead);
  unsigned trail = 0;
  while (c[c.size() - 1 - trail] == 0) ++trail;
  if (trail) out.roots.push_back({{0, 1}, trail});
  c.resize(c.size() - trail);
  // Remaining form has nonzero extreme coefficients; roots s/t = a/b with a | c_last, b | c_0.
  auto z = primitive_integers(c);
  if (z.size() > 1) {
    auto num_divs = positive_divisors(z.back());
    auto den_divs = positive_divisors(z.front());
    std::vector<std::pair<mpz_class, mpz_class>> cands;
    for (const auto& a : num_divs)
      for (const auto& b : den_divs) {
        if (gcd(a, b) != 1) continue;
        cands.emplace_back(a, b);
        cands.emplace_back(-a, b);
      }
    for (const auto& [a, b] : cands) {
      unsigned mult = 0;
      for (;;) {
        if (z.size() < 2) break;
        // Horner evaluation of sum z_k a^(n-k) b^k.
        mpz_class acc = 0, bpow = 1;
        size_t n = z.size() - 1;
        std::vector<mpz_class> apow(n + 1, 1);
        for (size_t k = 1; k <= n; ++k) apow[k] = apow[k - 1] * a;
        for (size_t k = 0; k <= n; ++k) {
          acc += z[k] * apow[n - k] * bpow;
          bpow *= b;
        }
        if (acc != 0) break;
        // Divide by (b s - a t): quotient coefficients over Q, then renormalize.
        std::vector<mpq_class> quo(n);
        mpq_class carry = 0;
        for (size_t k = 0; k < n; ++k) {
          mpq_class v = (mpq_class(z[k]) + carry) / mpq_class(b);
          quo[k] = v;
          carry = v * mpq_class(a);
        }
        z = primitive_integers(quo);
        ++mult;
      }
      if (mult) out.roots.push_back({{a, b}, mult});
    }
  }
  if (z.size() > 1)
    for (const auto& v : z) out.residual.emplace_back(v);
  return out;
}

BinaryFormFactorization restrict_to_line(const Polynomial& f, const ProjectivePoint& p,
                                         const ProjectivePoint& q) {
  if (p == q) throw AlgebraError("line needs two distinct points");
  BinaryFormFactorization out;
  auto coeffs = binary_form_on_line(f, p, q);
  out.degree = static_cast<unsigned>(coeffs.size() - 1);
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& v) { return v == 0; })) {
    out.identically_zero = true;
    return out;
  }
  auto rr = rational_roots(coeffs);
  for (const auto& [st, mult] : rr.roots) {
    std::vector<mpq_class> pt;
    for (size_t i = 0; i < p.size(); ++i) pt.emplace_back(st.first * p[i] + st.second * q[i]);
    out.roots.push_back({normalize_point(pt), mult});
  }
  if (!rr.residual.empty()) {
    RingPtr st = make_ring({"s", "t"});
    std::vector<Term> terms;
    uint16_t n = static_cast<uint16_t>(rr.residual.size() - 1);
    for (uint16_t k = 0; k <= n; ++k)
      terms.push_back({{static_cast<uint16_t>(n - k), k}, Scalar(rr.residual[k])});
    out.nonsplit_factor = Polynomial::from_terms(st, std::move(terms));
  }
  return out;
}

std::vector<ProjectivePoint> kernel_basis(const std::vector<std::vector<mpq_class>>& rows_in,
                                          size_t ncols) {
  auto rows = rows_in;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    mpq_class inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<ProjectivePoint> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(ncols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(normalize_point(v));
  }
  return basis;
}

}  // namespace thetakit
