// SPDX-License-Identifier: Apache-2.0
#include "thetakit/pfaffian_loci.hpp"

#include <algorithm>
#include <random>

namespace thetakit {

namespace printed {
const char* const d9_y[5] = {
    "-x1^2*x2*x3+x2^2*x3*x4+x1*x3*x4^2",
    "x1*x3^2-x2*x3^3+x1*x4^3",
    "-x1^3*x2+x3^3*x4+x2*x4^3",
    "x1^2*x2*x3-x2^2*x3*x4-x1*x3*x4^2",
    "x1*x3^3-x1^3*x4-x3^2*x4",
};
const char* const d12_P = "2*(x1*x3^3+x3^3*x5-x2^3*x4-x2*x4^3+x1^3*x5+x1*x5^3)";
const char* const d13_f[3] = {
    "-x1^2*x3^3*x4+x1*x2^3*x4^2-x1^4*x4*x5+x1*x2*x3*x4^2*x5-x2^3*x3*x5^2+x1*x3*x5^4"
    "-x2*x3*x4^3*x6+x1^2*x2^2*x5*x6+x3^4*x5*x6-x1*x4^3*x5*x6-x1^2*x3*x5^2*x6"
    "-x2^2*x4*x5^2*x6+x1^3*x3*x6^2+x1*x2^2*x4*x6^2+x2*x3^2*x4*x6^2",
    "-x1*x2*x3^4+x2^4*x3*x4+x1*x3^2*x4^3-x1^3*x2*x3*x5-x2^2*x3^2*x4*x5-x2*x4^2*x5"
    "+x3^3*x4*x5^2+x1^2*x2*x3*x4*x6+x1^3*x4*x5*x6+x1*x4^2*x5^2*x6-x1*x2^2*x5*x6^2"
    "-x2*x3^2*x5*x6^2+x1*x3*x5^2*x6^2-x1^2*x3*x6^3-x2^2*x4*x6^3",
    "-x1^2*x2*x3^3+x1*x2^4*x4-x1^4*x2*x5+x1^2*x2*x4*x5^2+x1*x3^2*x4*x5^2-x2*x4^2*x5^3"
    "-x1^2*x3^2*x4*x6-x2^2*x3*x4^2*x6+x3^2*x4^2*x5*x6-x2^3*x5^2*x6+x1*x5^4*x6"
    "-x1*x2*x3*x5*x6^2+x3^3*x5*x6^2+x2*x3*x4*x6^3+x1*x4*x5*x6^3",
};
const char* const d14_f =
    "x1*x3^3-x2^3*x4-x1*x3*x4^2+x1^3*x5-x2^2*x3*x5-x2*x4*x5^2-x3*x5^3+x1*x2*x6"
    "+x3^2*x4*x6+x4^3*x6+x1*x5*x6^2+x2*x6^3";
const char* const d14_g = "x1*x3*x4^2-x2^2*x3*x5-x2*x4*x5^2+x1^2*x2*x6+x3^2*x4*x6+x1*x5*x6^2";
const char* const d8_f[4] = {
    "y1*y3*(x0^2+x4^2)-y2^2*(x1*x7+x3*x5)+(y1^2+y3^2)*x2*x6",
    "y1*y3*(x1^2+x5^2)-y2^2*(x2*x0+x4*x6)+(y1^2+y3^2)*x3*x7",
    "y1*y3*(x2^2+x6^2)-y2^2*(x3*x1+x5*x7)+(y1^2+y3^2)*x4*x0",
    "y1*y3*(x3^2+x7^2)-y2^2*(x4*x2+x6*x0)+(y1^2+y3^2)*x5*x1",
};
const char* const d8_delta = "2*w1^4-w0^3*w2-w0*w2^3";
const char* const d8_delta_pullback =
    "2*y2^8-14*y1^5*y3^3-14*y1^3*y3^5-2*y1^7*y3-2*y1*y3^7";
const char* const d8_quotient_map[4] = {"2*y1*y3", "-y2^2", "y1^2+y3^2", "-y2^2"};
}  // namespace printed

namespace {

size_t mod(long a, long n) { return static_cast<size_t>(((a % n) + n) % n); }

}  // namespace

RingPtr ambient_ring(size_t n, Domain dom) {
  return make_ring(indexed_names("x", 0, static_cast<int>(n) - 1), dom);
}

RestrictedCoordinates restricted_coordinates(size_t n, Domain dom) {
  if (n < 3) throw AlgebraError("ambient dimension too small for a minus eigenspace");
  RestrictedCoordinates rc;
  rc.n = n;
  rc.odd = n % 2 == 1;
  size_t m = rc.odd ? (n - 1) / 2 : n / 2 - 1;
  for (size_t i = 1; i <= m; ++i) rc.survivors.push_back(i);
  rc.ring = make_ring(indexed_names("x", 1, static_cast<int>(m)), dom);
  for (size_t k = 0; k < n; ++k) {
    if (k == 0 || (!rc.odd && k == n / 2))
      rc.images.push_back(Polynomial(rc.ring));
    else if (k <= m)
      rc.images.push_back(Polynomial::variable(rc.ring, k - 1));
    else
      rc.images.push_back(-Polynomial::variable(rc.ring, n - k - 1));
  }
  return rc;
}

Polynomial restrict_minus(const Polynomial& p, const RestrictedCoordinates& rc) {
  if (p.ring()->nvars() != rc.n) throw AlgebraError("restriction expects the ambient ring");
  return substitute(p, rc.images);
}

PolyMatrix restrict_minus(const PolyMatrix& m, const RestrictedCoordinates& rc) {
  return m.map([&rc](const Polynomial& p) { return restrict_minus(p, rc); });
}

PolyMatrix build_Rd(int d, Domain dom) {
  if (d < 2) throw AlgebraError("R_d needs d >= 2");
  long n = 2 * d + 1;
  RingPtr ring = ambient_ring(static_cast<size_t>(n), dom);
  PolyMatrix m(ring, d + 1, static_cast<size_t>(n));
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = Polynomial::variable(ring, mod(j + i, n)) * Polynomial::variable(ring, mod(j - i, n));
  return m;
}

PolyMatrix restricted_Rd(int d, Domain dom) {
  PolyMatrix r = build_Rd(d, dom);
  auto rc = restricted_coordinates(2 * d + 1, dom);
  std::vector<size_t> rows, cols;
  for (int i = 0; i <= d; ++i) rows.push_back(i);
  PolyMatrix t = restrict_minus(r.submatrix(rows, rows), rc);
  if (auto bad = t.antisymmetry_defect())
    throw AlgebraError("restricted R_" + std::to_string(d) + " not antisymmetric at (" +
                       std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  return t;
}

std::vector<Polynomial> kernel_pfaffians(const PolyMatrix& A) {
  if (!A.is_square() || A.rows() % 2 == 0)
    throw AlgebraError("kernel pfaffians need an odd-size square matrix");
  if (auto bad = A.antisymmetry_defect())
    throw AlgebraError("matrix not antisymmetric at (" + std::to_string(bad->first) + "," +
                       std::to_string(bad->second) + ")");
  std::vector<Polynomial> out;
  for (size_t i = 0; i < A.rows(); ++i) {
    std::vector<size_t> idx;
    for (size_t k = 0; k < A.rows(); ++k)
      if (k != i) idx.push_back(k);
    Polynomial p = pfaffian(A.principal(idx));
    out.push_back(i % 2 ? -p : p);
  }
  return out;
}

Ideal rank_locus_ideal(const PolyMatrix& A, int target_rank) {
  if (target_rank < 0 || target_rank % 2) throw AlgebraError("target rank must be even");
  if (static_cast<size_t>(target_rank) >= A.rows()) throw AlgebraError("target rank too large");
  std::vector<Polynomial> gens;
  for (const auto& idx : subsets(A.rows(), static_cast<size_t>(target_rank) + 2))
    gens.push_back(pfaffian(A.principal(idx)));
  return Ideal(A.ring(), std::move(gens));
}

PolyMatrix build_Md(int d, Domain dom) {
  if (d < 2) throw AlgebraError("M_d needs d >= 2");
  long n = 2 * d;
  auto names = indexed_names("x", 0, static_cast<int>(n) - 1);
  auto ys = indexed_names("y", 0, static_cast<int>(n) - 1);
  names.insert(names.end(), ys.begin(), ys.end());
  RingPtr ring = make_ring(names, dom);
  auto x = [&](long k) { return Polynomial::variable(ring, mod(k, n)); };
  auto y = [&](long k) { return Polynomial::variable(ring, static_cast<size_t>(n) + mod(k, n)); };
  PolyMatrix m(ring, d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) m.at(i, j) = x(i + j) * y(i - j) + x(i + j + d) * y(i - j + d);
  return m;
}

PolyMatrix specialize_xy(const PolyMatrix& M, int d, int xshift, int yshift, bool twist) {
  if (twist) throw AlgebraError("twisted specializations need cyclotomic coefficients");
  const RingPtr& ring = M.ring();
  long n = 2 * d;
  if (ring->nvars() != static_cast<size_t>(2 * n)) throw AlgebraError("not an M_d ring");
  std::vector<Polynomial> images;
  for (long k = 0; k < n; ++k) images.push_back(Polynomial::variable(ring, mod(k + xshift, n)));
  for (long k = 0; k < n; ++k)
    images.push_back(Polynomial::variable(ring, static_cast<size_t>(n) + mod(k + yshift, n)));
  return M.map([&images](const Polynomial& p) { return substitute(p, images); });
}

PolyMatrix diagonal_xx(const PolyMatrix& M, int d) {
  size_t n = static_cast<size_t>(2 * d);
  RingPtr target = ambient_ring(n, M.ring()->domain());
  std::vector<Polynomial> images;
  for (size_t k = 0; k < n; ++k) images.push_back(Polynomial::variable(target, k));
  for (size_t k = 0; k < n; ++k) images.push_back(Polynomial::variable(target, k));
  return M.map([&images](const Polynomial& p) { return substitute(p, images); });
}

PolyMatrix restricted_diagonal_Md(int d, int xshift, Domain dom) {
  PolyMatrix m = diagonal_xx(specialize_xy(build_Md(d, dom), d, xshift, 0), d);
  auto rc = restricted_coordinates(static_cast<size_t>(2 * d), dom);
  PolyMatrix r = restrict_minus(m, rc);
  return r;
}

std::vector<Polynomial> d8_quadrics(Domain dom) {
  auto names = indexed_names("x", 0, 7);
  for (const char* y : {"y1", "y2", "y3"}) names.push_back(y);
  RingPtr ring = make_ring(names, dom);
  Polynomial f = parse_poly(printed::d8_f[0], ring);
  std::vector<Polynomial> out;
  for (size_t k = 0; k < 4; ++k) {
    std::vector<Polynomial> images;
    for (size_t i = 0; i < 8; ++i) images.push_back(Polynomial::variable(ring, (i + k) % 8));
    for (size_t i = 8; i < 11; ++i) images.push_back(Polynomial::variable(ring, i));
    out.push_back(substitute(f, images));
  }
  return out;
}

static Polynomial upper_left_pfaffian(const PolyMatrix& m) {
  return pfaffian(m.principal({0, 1, 2, 3}));
}

Polynomial d12_pfaffian(Domain dom) { return upper_left_pfaffian(restricted_diagonal_Md(6, 0, dom)); }

Polynomial d14_f(Domain dom) { return upper_left_pfaffian(restricted_diagonal_Md(7, 0, dom)); }

Polynomial d14_g_times_two(Domain dom) {
  return upper_left_pfaffian(restricted_diagonal_Md(7, 1, dom));
}

const LocusRecord& find_record(const std::vector<LocusRecord>& records, const std::string& name) {
  for (const auto& r : records)
    if (r.name == name) return r;
  throw AlgebraError("no catalog record named " + name);
}

std::vector<LocusRecord> catalog(const std::string& c, Domain dom) {
  std::vector<LocusRecord> out;
  if (c == "d8") {
    auto q = d8_quadrics(dom);
    out.push_back({"quadrics", "four quadrics f, sigma f, sigma^2 f, sigma^3 f",
                   Ideal(q[0].ring(), q), std::nullopt});
    RingPtr yr = make_ring({"y1", "y2", "y3"}, dom);
    RingPtr wr = make_ring({"w0", "w1", "w2"}, dom);
    std::vector<Polynomial> w;
    for (size_t k = 0; k < 3; ++k) w.push_back(parse_poly(printed::d8_quotient_map[k], yr));
    Polynomial pull = substitute(parse_poly(printed::d8_delta, wr), w);
    out.push_back({"delta-pullback", "pullback of the quartic discriminant is a smooth octic",
                   Ideal(yr, {pull}), ExpectedHilbert{1, 8, std::nullopt}});
    RingPtr xr = ambient_ring(8, dom);
    out.push_back({"degeneration", "y=[0:0:1] fibre is a union of 16 linear 3-spaces",
                   Ideal::parse(xr, {"x2*x6", "x3*x7", "x0*x4", "x1*x5"}),
                   ExpectedHilbert{3, 16, std::nullopt}});
  } else if (c == "d9") {
    PolyMatrix t = restricted_Rd(4, dom);
    out.push_back({"kernel", "Steinerian map by 4x4 pfaffians of the restricted R_4",
                   Ideal(t.ring(), kernel_pfaffians(t)), std::nullopt});
  } else if (c == "d10") {
    PolyMatrix t = restricted_diagonal_Md(5, 0, dom);
    out.push_back({"determinant", "restricted M_5(x,x) never has maximal rank",
                   Ideal(t.ring(), {determinant(t)}), std::nullopt});
  } else if (c == "d11") {
    PolyMatrix t = restricted_Rd(5, dom);
    out.push_back({"sextic", "det of restricted R_5 defines a sextic 3-fold",
                   Ideal(t.ring(), {pfaffian(t)}), ExpectedHilbert{3, 6, std::nullopt}});
    out.push_back({"D1", "rank <= 2 locus: curve of degree 20 and genus 26",
                   rank_locus_ideal(t, 2), ExpectedHilbert{1, 20, 26}});
  } else if (c == "d12") {
    Polynomial p = d12_pfaffian(dom);
    out.push_back({"quartic", "pfaffian of the upper-left block of restricted M_6(x,x)",
                   Ideal(p.ring(), {p}), ExpectedHilbert{3, 4, std::nullopt}});
  } else if (c == "d13") {
    PolyMatrix t = restricted_Rd(6, dom);
    auto k = kernel_pfaffians(t);
    out.push_back({"D2-three", "D2 is a 3-fold of degree 21 cut by three pfaffians",
                   Ideal(t.ring(), {k[6], k[5], k[4]}), ExpectedHilbert{3, 21, std::nullopt}});
    out.push_back({"D2-full", "D2 defined by all 6x6 pfaffians of restricted R_6",
                   rank_locus_ideal(t, 4), ExpectedHilbert{3, 21, std::nullopt}});
  } else if (c == "d14") {
    Polynomial f = d14_f(dom);
    Polynomial g = Scalar(mpq_class(1, 2), dom) * d14_g_times_two(dom);
    Ideal fg(f.ring(), {f, g});
    out.push_back({"fg", "f = g = 0 is a 3-fold of degree 16", fg, ExpectedHilbert{3, 16, std::nullopt}});
    out.push_back({"fg-singular", "f = g = 0 is singular along a curve of degree 24",
                   singular_locus_ideal(fg, 2), ExpectedHilbert{1, 24, std::nullopt}});
  } else if (c == "d16") {
    PolyMatrix t = restricted_diagonal_Md(8, 0, dom);
    out.push_back({"pfaffians4", "4x4 pfaffians of restricted M_8(x,x): 3-fold of degree 40",
                   rank_locus_ideal(t, 2), ExpectedHilbert{3, 40, std::nullopt}});
  } else {
    throw AlgebraError("unknown catalog case '" + c + "'");
  }
  return out;
}

FiberSample steinerian_fiber(uint64_t seed, uint32_t prime) {
  Domain dom = Domain::prime_field(prime);
  PolyMatrix t = restricted_Rd(4, dom);
  auto y = kernel_pfaffians(t);
  auto names = t.ring()->vars();
  names.push_back("t");
  RingPtr ring = make_ring(names, dom);
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Scalar(static_cast<long>(rng() % (prime - 1) + 1), dom); };
  FiberSample s{{}, {}, Ideal(ring, {})};
  std::vector<Scalar> src, img;
  size_t k = 0;
  for (;;) {
    src.clear();
    img.clear();
    for (int i = 0; i < 4; ++i) src.push_back(draw());
    for (const auto& c : y) img.push_back(c.evaluate(src));
    auto nz = std::find_if(img.begin(), img.end(), [](const Scalar& v) { return !v.is_zero(); });
    if (nz != img.end()) {
      k = static_cast<size_t>(nz - img.begin());
      break;
    }
  }
  std::vector<Polynomial> yr;
  for (const auto& c : y) yr.push_back(c.convert(ring));
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < yr.size(); ++i)
    if (i != k) gens.push_back(img[k] * yr[i] - img[i] * yr[k]);
  Polynomial tv = Polynomial::variable(ring, "t");
  gens.push_back(tv * yr[k] - Polynomial::constant(ring, 1L));
  // Random affine chart through the source point.
  Polynomial chart(ring);
  Scalar at_src = Scalar::zero(dom);
  do {
    chart = Polynomial(ring);
    at_src = Scalar::zero(dom);
    for (size_t i = 0; i < 4; ++i) {
      Scalar c = draw();
      chart += c * Polynomial::variable(ring, i);
      at_src += c * src[i];
    }
  } while (at_src.is_zero());
  gens.push_back(chart - Polynomial::constant(ring, 1L));
  for (const auto& v : src) s.source.push_back(v.residue());
  for (const auto& v : img) s.image.push_back(v.residue());
  s.ideal = Ideal(ring, std::move(gens));
  return s;
}

}  // namespace thetakit
