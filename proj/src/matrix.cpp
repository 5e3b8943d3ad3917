#include "braidcat/matrix.hpp"

namespace braidcat {

MatrixRF MatrixRF::identity(int n) {
  MatrixRF m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
  return m;
}

MatrixRF MatrixRF::flip(int da, int db) {
  MatrixRF m(db * da, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      m.at(j * da + i, i * db + j) = RatFunc(1);
  return m;
}

MatrixRF MatrixRF::operator*(const MatrixRF& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  MatrixRF r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const RatFunc& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const RatFunc& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  }
  return r;
}

MatrixRF MatrixRF::operator+(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix sum shape mismatch");
  MatrixRF r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

MatrixRF MatrixRF::operator-(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix difference shape mismatch");
  MatrixRF r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

MatrixRF MatrixRF::scaled(const RatFunc& s) const {
  MatrixRF r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

MatrixRF MatrixRF::kron(const MatrixRF& o) const {
  MatrixRF r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const RatFunc& v = at(i, j);
      if (v.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) {
          const RatFunc& u = o.at(k, l);
          if (u.is_zero()) continue;
          r.at(i * o.rows_ + k, j * o.cols_ + l) = v * u;
        }
    }
  return r;
}

MatrixRF MatrixRF::substitute(const std::map<Var, RatFunc>& bindings) const {
  MatrixRF r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = a_[i].substitute(bindings);
  return r;
}

MatrixRF MatrixRF::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  MatrixRF r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f(a_[i]);
  return r;
}

RatFunc MatrixRF::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of non-square matrix");
  MatrixRF m = *this;
  int n = rows_;
  RatFunc det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return RatFunc(0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det = det * m.at(col, col);
    RatFunc inv = m.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      RatFunc f = m.at(r, col) * inv;
      for (int c = col; c < n; ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(col, c);
    }
  }
  return det;
}

MatrixRF MatrixRF::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of non-square matrix");
  int n = rows_;
  MatrixRF m = *this;
  MatrixRF inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) throw ArithmeticError("matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(m.at(pivot, c), m.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    RatFunc p = m.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      m.at(col, c) = m.at(col, c) * p;
      inv.at(col, c) = inv.at(col, c) * p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col).is_zero()) continue;
      RatFunc f = m.at(r, col);
      for (int c = 0; c < n; ++c) {
        m.at(r, c) = m.at(r, c) - f * m.at(col, c);
        inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
      }
    }
  }
  return inv;
}

bool MatrixRF::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatrixRF::is_scalar_identity(RatFunc* scalar) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const RatFunc& s = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j) {
        if (at(i, j) != s) return false;
      } else if (!at(i, j).is_zero()) {
        return false;
      }
    }
  if (scalar) *scalar = s;
  return true;
}

std::pair<int, int> MatrixRF::first_difference(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return {0, 0};
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return {i, j};
  return {-1, -1};
}

}  // namespace braidcat
