// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetakit/ideal.hpp"
#include "thetakit/poly_matrix.hpp"

namespace thetakit {

/// x0 .. x_{n-1}.
RingPtr ambient_ring(size_t n, Domain dom = Domain::rationals());

/// Coordinates on the minus eigenspace {x_i = -x_{n-i}} of an n-dimensional space.
/// Odd n: x0 -> 0, survivors x1..x_{(n-1)/2}. Even n: also x_{n/2} -> 0, survivors
/// x1..x_{n/2-1}.
struct RestrictedCoordinates {
  size_t n = 0;
  bool odd = true;
  std::vector<size_t> survivors;
  RingPtr ring;
  /// images[k] is the restriction of x_k.
  std::vector<Polynomial> images;
};

RestrictedCoordinates restricted_coordinates(size_t n, Domain dom = Domain::rationals());
/// p must live in ambient_ring(rc.n) (same variable names).
Polynomial restrict_minus(const Polynomial& p, const RestrictedCoordinates& rc);
PolyMatrix restrict_minus(const PolyMatrix& m, const RestrictedCoordinates& rc);

/// (d+1) x (2d+1) matrix with entries x_{j+i} x_{j-i}, indices mod 2d+1.
PolyMatrix build_Rd(int d, Domain dom = Domain::rationals());
/// Leftmost (d+1) x (d+1) block of the restricted R_d; throws unless exactly antisymmetric.
PolyMatrix restricted_Rd(int d, Domain dom = Domain::rationals());

/// Component i = (-1)^i pf(A without row and column i); A antisymmetric of odd size.
std::vector<Polynomial> kernel_pfaffians(const PolyMatrix& A);

/// Pfaffians of all principal submatrices of size target_rank + 2.
Ideal rank_locus_ideal(const PolyMatrix& A, int target_rank);

/// d x d matrix x_{i+j} y_{i-j} + x_{i+j+d} y_{i-j+d}, indices mod 2d, in the ring
/// x0..x_{2d-1}, y0..y_{2d-1}.
PolyMatrix build_Md(int d, Domain dom = Domain::rationals());
/// Substitutes x_k -> x_{k+xshift}, y_k -> y_{k+yshift} (indices mod 2d). Twisted
/// specializations need roots of unity and are rejected.
PolyMatrix specialize_xy(const PolyMatrix& M, int d, int xshift, int yshift, bool twist = false);
/// y_k -> x_k; result lives in ambient_ring(2d).
PolyMatrix diagonal_xx(const PolyMatrix& M, int d);
/// restrict_minus(diagonal_xx(specialize_xy(M_d, xshift, 0))); throws unless antisymmetric.
PolyMatrix restricted_diagonal_Md(int d, int xshift = 0, Domain dom = Domain::rationals());

struct ExpectedHilbert {
  int proj_dimension;
  std::optional<long> degree;
  std::optional<long> genus;
};

struct LocusRecord {
  std::string name;
  std::string anchor;
  Ideal ideal;
  std::optional<ExpectedHilbert> expected;
};

/// Cases: d8, d9, d10, d11, d12, d13, d14, d16. Ideals are built over dom.
std::vector<LocusRecord> catalog(const std::string& case_name, Domain dom = Domain::rationals());
const LocusRecord& find_record(const std::vector<LocusRecord>& records, const std::string& name);

/// Forms as printed, used as comparison targets. Variables x1..x_m unless stated.
namespace printed {
extern const char* const d9_y[5];
extern const char* const d12_P;
extern const char* const d13_f[3];
extern const char* const d14_f;
extern const char* const d14_g;
/// In x0..x7, y1..y3.
extern const char* const d8_f[4];
/// In w0, w1, w2 and y1..y3 respectively.
extern const char* const d8_delta;
extern const char* const d8_delta_pullback;
extern const char* const d8_quotient_map[4];
}  // namespace printed

/// The d=8 quadric f and its shifts sigma^k f (x_i -> x_{i+k mod 8}) in x0..x7, y1..y3.
std::vector<Polynomial> d8_quadrics(Domain dom = Domain::rationals());

/// Upper-left 4x4 pfaffians used in the d=12 and d=14 cases.
Polynomial d12_pfaffian(Domain dom = Domain::rationals());
Polynomial d14_f(Domain dom = Domain::rationals());
/// Constructed pfaffian for M_7(sigma x, x); equals 2 * g.
Polynomial d14_g_times_two(Domain dom = Domain::rationals());

/// Fiber of the d=9 Steinerian map through a random source point over F_p: the ideal in
/// x1..x4, t cutting the fiber in a random affine chart, with t removing the base locus.
struct FiberSample {
  std::vector<uint32_t> source;
  std::vector<uint32_t> image;
  Ideal ideal;
};
FiberSample steinerian_fiber(uint64_t seed, uint32_t prime);

}  // namespace thetakit
