// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "thetakit/polynomial.hpp"

namespace thetakit {

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, size_t rows, size_t cols);
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  /// Entries parsed from text, row-major.
  static PolyMatrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& at(size_t i, size_t j) const { return cells_[i * cols_ + j]; }
  Polynomial& at(size_t i, size_t j) { return cells_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const;
  PolyMatrix principal(const std::vector<size_t>& idx) const { return submatrix(idx, idx); }
  /// Applies f to every entry; the results must share one ring.
  PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;

  /// First (i,j), i <= j, with M(i,j) != -M(j,i); nullopt when exactly antisymmetric.
  std::optional<std::pair<size_t, size_t>> antisymmetry_defect() const;
  bool is_antisymmetric() const { return is_square() && !antisymmetry_defect(); }
  bool is_symmetric() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  bool operator==(const PolyMatrix& o) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  size_t rows_, cols_;
  std::vector<Polynomial> cells_;
};

/// Berkowitz characteristic-polynomial recursion; division free.
Polynomial determinant(const PolyMatrix& m);

/// First-row expansion with memoization over index subsets; checks antisymmetry first.
Polynomial pfaffian(const PolyMatrix& m);

PolyMatrix hessian(const Polynomial& p);
PolyMatrix jacobian(const std::vector<Polynomial>& polys);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> subsets(size_t n, size_t k);

}  // namespace thetakit
