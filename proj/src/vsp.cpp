// SPDX-License-Identifier: Apache-2.0
#include "thetakit/vsp.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "thetakit/ideal.hpp"
#include "thetakit/poly_matrix.hpp"

namespace thetakit {

const char* const x43_text = "x0*x2^3+x2^3*x4-x1^3*x3-x1*x3^3+x0^3*x4+x0*x4^3";
const char* const x43_G_text = "x0*x2^3-x1^3*x3-x1*x3^3";

namespace {

/// Row echelon form in place; returns pivot columns.
std::vector<size_t> echelon(RationalMatrix& m, size_t ncols, mpq_class* det_sign = nullptr) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    if (piv != r) {
      std::swap(m[r], m[piv]);
      if (det_sign) *det_sign = -*det_sign;
    }
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

mpq_class rational_coeff(const Scalar& s) {
  if (!s.is_rational()) throw AlgebraError("rational coefficients required");
  return s.rational();
}

std::string join(const std::vector<mpq_class>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

/// Gram matrix with entries d^2 q / dx_i dx_j (twice the usual symmetric matrix).
RationalMatrix gram(const Polynomial& q) {
  size_t n = q.ring()->nvars();
  RationalMatrix m(n, std::vector<mpq_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Polynomial d = q.derivative(i).derivative(j);
      if (!d.is_zero()) m[i][j] = rational_coeff(d.leading().coeff);
    }
  return m;
}

std::vector<mpq_class> evaluate_rational(const std::vector<Polynomial>& ps,
                                         const std::vector<mpq_class>& at) {
  std::vector<Scalar> pt;
  for (const auto& v : at) pt.emplace_back(v);
  std::vector<mpq_class> out;
  for (const auto& p : ps) out.push_back(p.evaluate(pt).rational());
  return out;
}

bool proportional(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return std::any_of(a.begin(), a.end(), [](const mpq_class& v) { return v != 0; });
}

}  // namespace

size_t rational_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return echelon(m, m[0].size()).size();
}

mpq_class rational_determinant(RationalMatrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw AlgebraError("determinant of a nonsquare matrix");
  mpq_class sign = 1;
  auto piv = echelon(m, n, &sign);
  if (piv.size() < n) return 0;
  mpq_class d = sign;
  for (size_t i = 0; i < n; ++i) d *= m[i][i];
  return d;
}

std::optional<std::vector<mpq_class>> rational_solve(RationalMatrix A, std::vector<mpq_class> b) {
  if (A.size() != b.size()) throw AlgebraError("right-hand side size mismatch");
  size_t ncols = A.empty() ? 0 : A[0].size();
  for (size_t i = 0; i < A.size(); ++i) A[i].push_back(b[i]);
  auto piv = echelon(A, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  std::vector<mpq_class> x(ncols, 0);
  for (size_t r = piv.size(); r-- > 0;) {
    size_t c = piv[r];
    mpq_class s = A[r][ncols];
    for (size_t j = c + 1; j < ncols; ++j) s -= A[r][j] * x[j];
    x[c] = s / A[r][c];
  }
  return x;
}

RationalMatrix catalecticant(const Polynomial& F) {
  if (F.ring()->nvars() != 3) throw AlgebraError("catalecticant expects a ternary form");
  if (!F.is_zero() && (!F.is_homogeneous() || F.total_degree() != 4))
    throw AlgebraError("catalecticant expects a quartic");
  static const std::array<std::array<int, 3>, 6> ops{
      {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
  RationalMatrix m(6, std::vector<mpq_class>(6, 0));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i; j < 6; ++j) {
      Polynomial d = F;
      for (size_t v = 0; v < 3; ++v)
        for (int k = 0; k < ops[i][v] + ops[j][v]; ++k) d = d.derivative(v);
      mpq_class val = d.is_zero() ? mpq_class(0) : rational_coeff(d.evaluate({Scalar(0L), Scalar(0L), Scalar(0L)}));
      m[i][j] = m[j][i] = val;
    }
  return m;
}

ApolarResult apolar_membership(const Polynomial& F, const std::vector<Polynomial>& forms) {
  int d = F.total_degree();
  if (d < 0) return {true, std::vector<mpq_class>(forms.size(), 0)};
  std::vector<Polynomial> powers;
  for (const auto& L : forms) {
    if (L.is_zero() || L.total_degree() != 1 || !L.is_homogeneous())
      throw AlgebraError("apolar membership expects nonzero linear forms");
    powers.push_back(L.pow(static_cast<unsigned>(d)));
  }
  std::map<Exponents, size_t> rows;
  for (const auto& p : powers)
    for (const auto& t : p.terms()) rows.emplace(t.exp, 0);
  for (const auto& t : F.terms()) rows.emplace(t.exp, 0);
  size_t r = 0;
  for (auto& [e, idx] : rows) idx = r++;
  RationalMatrix A(rows.size(), std::vector<mpq_class>(forms.size(), 0));
  std::vector<mpq_class> b(rows.size(), 0);
  for (size_t j = 0; j < powers.size(); ++j)
    for (const auto& t : powers[j].terms()) A[rows[t.exp]][j] = rational_coeff(t.coeff);
  for (const auto& t : F.terms()) b[rows[t.exp]] = rational_coeff(t.coeff);
  auto x = rational_solve(std::move(A), std::move(b));
  if (!x) return {};
  return {true, *x};
}

VspDimension vsp_dim(long n, long d, long h) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(d));
  long N = binom.get_si() - 1;
  return {h * (n + 1) - N - 1, h * (n + 1) >= N + 1};
}

TwoConicsRecord vsp_ord_example() {
  TwoConicsRecord rec{Polynomial(make_ring({"a1"})), false, false, "", {}, std::nullopt, 0};
  RingPtr ab = make_ring({"a1", "b1", "a2", "b2"});
  PolyMatrix M = PolyMatrix::parse(ab, {{"1", "2", "1"},
                                        {"a1^2", "a1*b1", "b1^2"},
                                        {"a2^2", "a2*b2", "b2^2"}});
  rec.determinant = determinant(M);
  Polynomial printed = parse_poly(
      "a1*b1*b2^2-b1^2*a2*b2+a1^2*a2*b2-2*a1^2*b2^2+2*a2^2*b1^2-a2^2*a1*b1", ab);
  rec.determinant_matches = rec.determinant == printed;

  RingPtr xyzw = make_ring({"X", "Y", "Z", "W"});
  Polynomial Q = parse_poly("X*W-Y*Z", xyzw);
  Polynomial Qp = parse_poly("Y*W-Z*W+X*Y-2*Y^2+2*Z^2-X*Z", xyzw);
  // Segre identifications preserving XW - YZ: X, W opposite corners, Y, Z the others.
  const std::array<const char*, 4> mono{"a1*a2", "a1*b2", "b1*a2", "b1*b2"};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    if (perm[0] + perm[3] != 3) continue;
    std::vector<Polynomial> images;
    for (int k = 0; k < 4; ++k) images.push_back(parse_poly(mono[perm[k]], ab));
    if (!substitute(Q, images).is_zero()) continue;
    Polynomial pulled = substitute(Qp, images);
    for (long sign : {1L, -1L}) {
      if (Scalar(sign) * pulled == rec.determinant) {
        rec.segre_matches = true;
        rec.segre_substitution = std::string("X=") + mono[perm[0]] + ", Y=" + mono[perm[1]] +
                                 ", Z=" + mono[perm[2]] + ", W=" + mono[perm[3]] +
                                 (sign < 0 ? ", sign -1" : "");
      }
    }
  } while (!rec.segre_matches && std::next_permutation(perm.begin(), perm.end()));

  RingPtr lm = make_ring({"l", "m"});
  RationalMatrix gq = gram(Q), gp = gram(Qp);
  PolyMatrix pencil(lm, 4, 4);
  Polynomial l = Polynomial::variable(lm, 0), m = Polynomial::variable(lm, 1);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      pencil.at(i, j) = Scalar(gq[i][j]) * l + Scalar(gp[i][j]) * m;
  Polynomial disc = determinant(pencil);
  rec.pencil_discriminant.assign(5, 0);
  for (const auto& t : disc.terms()) rec.pencil_discriminant[t.exp[1]] = rational_coeff(t.coeff);
  BinaryRoots roots = rational_roots(rec.pencil_discriminant);
  for (const auto& [root, mult] : roots.roots) {
    (void)mult;
    Polynomial member = Scalar(mpq_class(root.first)) * Q + Scalar(mpq_class(root.second)) * Qp;
    size_t rank = quadratic_form_rank(member);
    if (rank <= 2) {
      rec.certificate = root;
      rec.certificate_rank = rank;
      break;
    }
  }
  return rec;
}

Polynomial x43_quartic(Domain dom) { return parse_poly(x43_text, make_ring(indexed_names("x", 0, 4), dom)); }

std::vector<SegreRecord> segre_suite() {
  std::vector<SegreRecord> out;
  Polynomial F = x43_quartic();
  RingPtr r4 = make_ring(indexed_names("x", 0, 3));
  auto grad = gradient(F);
  const std::vector<mpq_class> p{10, 2, 1, 1, 0};

  {
    auto g = evaluate_rational(grad, p);
    std::vector<mpq_class> want{1, -13, 30, -14, 1001};
    mpq_class fp = F.evaluate({Scalar(10L), Scalar(2L), Scalar(1L), Scalar(1L), Scalar(0L)}).rational();
    out.push_back({"tangent-hyperplane", fp == 0 && proportional(g, want), join(want),
                   join(g) + (fp == 0 ? "" : ", p not on X")});
  }
  {
    Ideal sing = singular_locus_ideal(Ideal(F.ring(), {F}), 1);
    auto h = sing.hilbert_summary();
    out.push_back({"smooth", h.proj_dimension == -1, "dim -1", h.to_string()});
  }
  Polynomial G = parse_poly(x43_G_text, r4);
  {
    auto g = evaluate_rational(grad, {1, 0, 0, 0, 0});
    std::vector<Polynomial> images;
    for (size_t i = 0; i < 4; ++i) images.push_back(Polynomial::variable(r4, i));
    images.push_back(Polynomial(r4));
    Polynomial section = substitute(F, images);
    bool ok = proportional(g, {0, 0, 0, 0, 1}) && section == G;
    out.push_back({"section-H4", ok, std::string("T_q X = {x4=0}, G = ") + x43_G_text,
                   "gradient " + join(g) + ", section " + section.to_string()});
  }
  {
    auto gG = gradient(G);
    std::vector<Polynomial> partials;
    for (const char* s : {"x2^3", "-3*x1^2*x3-x3^3", "3*x0*x2^2", "-x1^3-3*x1*x3^2"})
      partials.push_back(parse_poly(s, r4));
    PolyMatrix H = hessian(G);
    PolyMatrix Hp = PolyMatrix::parse(r4, {{"0", "0", "3*x2^2", "0"},
                                           {"0", "-6*x1*x3", "0", "-3*x1^2-3*x3^2"},
                                           {"3*x2^2", "0", "6*x0*x2", "0"},
                                           {"0", "-3*x1^2-3*x3^2", "0", "-6*x1*x3"}});
    Polynomial root = parse_poly("9*x2^2*(x1^2-x3^2)", r4);
    Polynomial det = determinant(H);
    bool ok = gG == partials && H == Hp && det == root * root;
    out.push_back({"hessian", ok, "det H(G) = (9*x2^2*(x1^2-x3^2))^2", "det H(G) = " + det.to_string()});
  }
  {
    auto m = multiplicity_at(G, make_point({1, 0, 0, 0}));
    Polynomial d3 = G.derivative(2).derivative(2).derivative(2);
    mpq_class third = d3.evaluate({Scalar(1L), Scalar(0L), Scalar(0L), Scalar(0L)}).rational();
    out.push_back({"triple-point", m.multiplicity == 3 && third != 0, "multiplicity 3",
                   "multiplicity " + std::to_string(m.multiplicity) + ", d^3G/dx2^3 = " + third.get_str()});
  }
  {
    RationalMatrix eqs{{0, 2, -5, 1}, {2, 0, -5, -15}};
    auto basis = kernel_basis(eqs, 4);
    ProjectivePoint x = make_point({10, 2, 1, 1});
    std::string computed;
    bool ok = false;
    if (basis.size() == 2) {
      ProjectivePoint q = basis[0] == x ? basis[1] : basis[0];
      auto fac = restrict_to_line(G, x, q);
      std::map<ProjectivePoint, unsigned> got;
      for (const auto& rt : fac.roots) got[rt.point] = rt.multiplicity;
      for (const auto& [pt, mu] : got) computed += point_to_string(pt) + "^" + std::to_string(mu) + " ";
      ok = !fac.identically_zero && !fac.nonsplit_factor && got.size() == 2 && got[x] == 3 &&
           got[make_point({65, 1, 2, 8})] == 1;
    }
    out.push_back({"fourth-point", ok, "[10:2:1:1]^3 [65:1:2:8]^1", computed});
  }
  {
    auto g = evaluate_rational(grad, p);
    auto w = kernel_basis({g}, 5);
    RingPtr ur = make_ring(indexed_names("u", 0, 3));
    std::vector<Polynomial> images;
    for (size_t i = 0; i < 5; ++i) {
      Polynomial e(ur);
      for (size_t k = 0; k < 4; ++k)
        e += Scalar(mpq_class(w[k][i])) * Polynomial::variable(ur, k);
      images.push_back(e);
    }
    RationalMatrix A(5, std::vector<mpq_class>(4));
    for (size_t i = 0; i < 5; ++i)
      for (size_t k = 0; k < 4; ++k) A[i][k] = w[k][i];
    auto c = rational_solve(A, p);
    std::string computed = "p outside T_p X";
    bool ok = false;
    if (c) {
      auto m = multiplicity_at(substitute(F, images), normalize_point(*c));
      size_t rank = m.tangent_cone ? quadratic_form_rank(*m.tangent_cone) : 0;
      ok = m.multiplicity == 2 && rank >= 3;
      computed = "multiplicity " + std::to_string(m.multiplicity) + ", tangent cone rank " + std::to_string(rank);
    }
    out.push_back({"tangent-section", ok, "multiplicity 2, tangent cone rank >= 3", computed});
  }
  return out;
}

}  // namespace thetakit
