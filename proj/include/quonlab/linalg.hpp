#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "quonlab/common.hpp"
#include "quonlab/exact.hpp"

namespace quonlab {

/// Dense row-major matrix over Cplx or GaussianRational.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = qconj((*this)(r, c));
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int k = 0; k < a.cols_; ++k) {
        const S& av = a(r, k);
        if (qis_zero(av)) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) += av * b(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

/// Max |a_ij - b_ij| as a double (exact entries are converted).
template <class S>
double max_abs_diff(const Matrix<S>& a, const Matrix<S>& b) {
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(qto_complex(a(r, c)) - qto_complex(b(r, c))));
  return m;
}

template <class S>
double max_abs(const Matrix<S>& a) {
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(qto_complex(a(r, c))));
  return m;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<Cplx>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline Matrix<Cplx> from_eigen(const Eigen::MatrixXcd& e) {
  Matrix<Cplx> m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

/// LU with partial pivoting.
Cplx determinant(const Matrix<Cplx>& m);
/// Fraction-free (Bareiss) elimination; exact.
GaussianRational determinant(const Matrix<GaussianRational>& m);

bool is_singular(const Matrix<Cplx>& m);
bool is_singular(const Matrix<GaussianRational>& m);

/// Inverse; throws SingularError per the singularity policy
/// (|det| < 1e-12 * maxnorm^size in double mode, det == 0 in exact mode).
Matrix<Cplx> inverse(const Matrix<Cplx>& m);
Matrix<GaussianRational> inverse(const Matrix<GaussianRational>& m);

/// Least-squares solve A x = b via column-pivoted QR (double mode) or exact
/// elimination on the normal equations (exact mode, requires consistency).
Matrix<Cplx> solve(const Matrix<Cplx>& a, const Matrix<Cplx>& b);
Matrix<GaussianRational> solve(const Matrix<GaussianRational>& a, const Matrix<GaussianRational>& b);

/// Smallest eigenvalue of a hermitian matrix (double mode only).
double min_eigenvalue_hermitian(const Matrix<Cplx>& m);

}  // namespace quonlab
