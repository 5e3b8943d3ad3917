#ifndef BRAIDCAT_MATRIX_HPP
#define BRAIDCAT_MATRIX_HPP

#include <functional>
#include <map>
#include <vector>

#include "braidcat/ratfunc.hpp"

namespace braidcat {

// Dense matrix over the rational-function field; row major.
class MatrixRF {
public:
  MatrixRF() = default;
  MatrixRF(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static MatrixRF identity(int n);
  // Flip (permutation) matrix A (x) B -> B (x) A for dims (da, db).
  static MatrixRF flip(int da, int db);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RatFunc& at(int r, int c) {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const RatFunc& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  MatrixRF operator*(const MatrixRF& o) const;
  MatrixRF operator+(const MatrixRF& o) const;
  MatrixRF operator-(const MatrixRF& o) const;
  MatrixRF scaled(const RatFunc& s) const;
  MatrixRF kron(const MatrixRF& o) const;

  bool operator==(const MatrixRF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const MatrixRF& o) const { return !(*this == o); }

  MatrixRF substitute(const std::map<Var, RatFunc>& bindings) const;
  MatrixRF map(const std::function<RatFunc(const RatFunc&)>& f) const;

  RatFunc determinant() const;          // square only
  MatrixRF inverse() const;             // throws ArithmeticError if singular
  bool is_zero() const;
  // True when this equals scalar * identity; the scalar is returned.
  bool is_scalar_identity(RatFunc* scalar) const;

  // First differing entry against another matrix; (-1,-1) when equal.
  std::pair<int, int> first_difference(const MatrixRF& o) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

}  // namespace braidcat

#endif
