#pragma once

#include <cmath>
#include <random>

#include "quonlab/params.hpp"

namespace quonlab {

/// Deterministic samplers for the randomized suites. Off-diagonal entries are
/// drawn uniformly on the disc of radius max_abs and mirrored hermitianly;
/// diagonal entries are real uniform in [-max_abs, max_abs].
class QSampler {
 public:
  explicit QSampler(std::uint64_t seed) : rng_(seed) {}

  QMatrix<Cplx> strict(int nletters, double max_abs = 0.9) {
    QMatrix<Cplx> q = QMatrix<Cplx>::zero(nletters);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < nletters; ++i) {
      q.set(i, i, Cplx(max_abs * (2.0 * unit(rng_) - 1.0), 0.0));
      for (int j = i + 1; j < nletters; ++j) {
        double r = max_abs * std::sqrt(unit(rng_));
        double th = 2.0 * M_PI * unit(rng_);
        q.set_hermitian_pair(i, j, Cplx(r * std::cos(th), r * std::sin(th)));
      }
    }
    return q;
  }

  /// Strict sample on a rational grid (denominator 128), suitable for exact
  /// identity checks.
  QMatrix<GaussianRational> strict_exact(int nletters, double max_abs = 0.9) {
    QMatrix<GaussianRational> q(QMatrix<Cplx>::zero(nletters).alphabet());
    const long den = 128;
    const long lim = static_cast<long>(max_abs * den);
    std::uniform_int_distribution<long> coord(-lim, lim);
    for (int i = 0; i < nletters; ++i) {
      q.set(i, i, GaussianRational::from_ratio(coord(rng_), 0, den));
      for (int j = i + 1; j < nletters; ++j) {
        long a, b;
        do {
          a = coord(rng_);
          b = coord(rng_);
        } while (a * a + b * b > lim * lim);
        GaussianRational v = GaussianRational::from_ratio(a, b, den);
        q.set(i, j, v);
        q.set(j, i, v.conj());
      }
    }
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace quonlab
