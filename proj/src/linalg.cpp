#include "quonlab/linalg.hpp"

#include <limits>
#include <utility>

namespace quonlab {

Cplx determinant(const Matrix<Cplx>& m) {
  if (m.rows() == 0) return Cplx(1.0, 0.0);
  return to_eigen(m).partialPivLu().determinant();
}

GaussianRational determinant(const Matrix<GaussianRational>& m) {
  const int n = m.rows();
  if (n == 0) return GaussianRational(1);
  Matrix<GaussianRational> a = m;
  GaussianRational prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a(i, k).is_zero()) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return GaussianRational(0);
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Bareiss step: the division by the previous pivot is exact
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = GaussianRational(0);
    }
    prev = a(k, k);
  }
  GaussianRational det = a(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

bool is_singular(const Matrix<Cplx>& m) {
  if (m.rows() == 0) return false;
  // pivot-ratio test on the partially pivoted LU: a vanishing eigenvalue
  // (|q| on the unit circle, fermionic q_kk = -1) collapses a pivot, while a
  // tiny determinant of a well-conditioned block (a product of many factors
  // < 1) does not
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
  double pmin = std::numeric_limits<double>::infinity(), pmax = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double p = std::abs(lu.matrixLU()(i, i));
    pmin = std::min(pmin, p);
    pmax = std::max(pmax, p);
  }
  return pmax == 0.0 || pmin < 1e-12 * pmax;
}

bool is_singular(const Matrix<GaussianRational>& m) { return determinant(m).is_zero(); }

Matrix<Cplx> inverse(const Matrix<Cplx>& m) {
  if (is_singular(m)) throw SingularError("inverse: determinant below tolerance");
  return from_eigen(to_eigen(m).inverse());
}

Matrix<GaussianRational> inverse(const Matrix<GaussianRational>& m) {
  const int n = m.rows();
  Matrix<GaussianRational> a = m;
  Matrix<GaussianRational> inv = Matrix<GaussianRational>::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (!a(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw SingularError("inverse: exact matrix is singular");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    GaussianRational p = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      GaussianRational f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Matrix<Cplx> solve(const Matrix<Cplx>& a, const Matrix<Cplx>& b) {
  Eigen::MatrixXcd x = to_eigen(a).colPivHouseholderQr().solve(to_eigen(b));
  return from_eigen(x);
}

Matrix<GaussianRational> solve(const Matrix<GaussianRational>& a, const Matrix<GaussianRational>& b) {
  // normal equations; exact, valid for full column rank
  Matrix<GaussianRational> ah = a.adjoint();
  return inverse(ah * a) * (ah * b);
}

double min_eigenvalue_hermitian(const Matrix<Cplx>& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace quonlab
