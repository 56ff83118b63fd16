// SPDX-License-Identifier: Apache-2.0
#include "thetakit/poly_matrix.hpp"

#include <unordered_map>

namespace thetakit {

PolyMatrix::PolyMatrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), cells_(rows * cols, Polynomial(ring_)) {
  if (rows == 0 || cols == 0) throw AlgebraError("matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty()) throw AlgebraError("matrix dimensions must be positive");
  PolyMatrix m(ring, rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw AlgebraError("ragged matrix rows");
    for (size_t j = 0; j < m.cols_; ++j) {
      if (!(*rows[i][j].ring() == *ring)) throw AlgebraError("matrix entry ring mismatch");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> cells;
  for (const auto& r : rows) {
    cells.emplace_back();
    for (const auto& s : r) cells.back().push_back(parse_poly(s, ring));
  }
  return from_rows(ring, cells);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<size_t>& row_idx,
                                 const std::vector<size_t>& col_idx) const {
  PolyMatrix s(ring_, row_idx.size(), col_idx.size());
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
  return s;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const {
  std::vector<std::vector<Polynomial>> out(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i].push_back(f(at(i, j)));
  return from_rows(out[0][0].ring(), out);
}

std::optional<std::pair<size_t, size_t>> PolyMatrix::antisymmetry_defect() const {
  if (!is_square()) return std::make_pair(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i; j < cols_; ++j)
      if (!(at(i, j) + at(j, i)).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("matrix product shape mismatch");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j)
      for (size_t k = 0; k < a.cols_; ++k)
        if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AlgebraError("matrix sum shape mismatch");
  PolyMatrix c = a;
  for (size_t k = 0; k < c.cells_.size(); ++k) c.cells_[k] += b.cells_[k];
  return c;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
}

std::vector<Polynomial> PolyMatrix::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != cols_) throw AlgebraError("matrix-vector shape mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_; ++i) {
    s += i ? ",\n [" : "[";
    for (size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw AlgebraError("determinant of a non-square matrix");
  const RingPtr& ring = m.ring();
  const size_t n = m.rows();
  // v holds the coefficients of det(tI - A_r) for the leading r x r block, highest first.
  std::vector<Polynomial> v = {Polynomial::constant(ring, 1L), -m.at(0, 0)};
  for (size_t r = 1; r < n; ++r) {
    std::vector<Polynomial> col = {Polynomial::constant(ring, 1L), -m.at(r, r)};
    std::vector<Polynomial> mk(r, Polynomial(ring));
    for (size_t i = 0; i < r; ++i) mk[i] = m.at(i, r);
    for (size_t k = 0; k < r; ++k) {
      Polynomial s(ring);
      for (size_t i = 0; i < r; ++i) s += m.at(r, i) * mk[i];
      col.push_back(-s);
      if (k + 1 < r) {
        std::vector<Polynomial> next(r, Polynomial(ring));
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j)
            if (!m.at(i, j).is_zero() && !mk[j].is_zero()) next[i] += m.at(i, j) * mk[j];
        mk = std::move(next);
      }
    }
    std::vector<Polynomial> w(r + 2, Polynomial(ring));
    for (size_t i = 0; i < r + 2; ++i)
      for (size_t j = 0; j <= std::min(i, r); ++j)
        if (!col[i - j].is_zero() && !v[j].is_zero()) w[i] += col[i - j] * v[j];
    v = std::move(w);
  }
  return n % 2 ? -v[n] : v[n];
}

namespace {

class PfaffianMemo {
 public:
  explicit PfaffianMemo(const PolyMatrix& m) : m_(m) {}

  Polynomial eval(uint64_t mask) {
    if (mask == 0) return Polynomial::constant(m_.ring(), 1L);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int i = __builtin_ctzll(mask);
    uint64_t rest = mask & ~(1ULL << i);
    Polynomial acc(m_.ring());
    bool positive = true;
    for (uint64_t bits = rest; bits; bits &= bits - 1) {
      int j = __builtin_ctzll(bits);
      const Polynomial& a = m_.at(i, j);
      if (!a.is_zero()) {
        Polynomial term = a * eval(rest & ~(1ULL << j));
        if (positive)
          acc += term;
        else
          acc -= term;
      }
      positive = !positive;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<uint64_t, Polynomial> memo_;
};

}  // namespace

Polynomial pfaffian(const PolyMatrix& m) {
  if (!m.is_square()) throw AlgebraError("pfaffian of a non-square matrix");
  if (m.rows() % 2) throw AlgebraError("pfaffian of an odd-size matrix");
  if (m.rows() > 62) throw AlgebraError("pfaffian size limit exceeded");
  if (auto bad = m.antisymmetry_defect())
    throw AlgebraError("matrix not antisymmetric at entries (" + std::to_string(bad->first) + "," +
                       std::to_string(bad->second) + ") and (" + std::to_string(bad->second) +
                       "," + std::to_string(bad->first) + ")");
  PfaffianMemo memo(m);
  return memo.eval((1ULL << m.rows()) - 1);
}

PolyMatrix hessian(const Polynomial& p) {
  size_t n = p.ring()->nvars();
  PolyMatrix h(p.ring(), n, n);
  auto g = gradient(p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h.at(i, j) = g[i].derivative(j);
  return h;
}

PolyMatrix jacobian(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw AlgebraError("jacobian of an empty list");
  const RingPtr& ring = polys[0].ring();
  PolyMatrix jm(ring, polys.size(), ring->nvars());
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < ring->nvars(); ++j) jm.at(i, j) = polys[i].derivative(j);
  return jm;
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  if (k > n) return out;
  std::vector<size_t> cur(k);
  for (size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace thetakit
