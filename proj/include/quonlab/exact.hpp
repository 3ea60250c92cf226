#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "quonlab/common.hpp"

namespace quonlab {

/// Exact complex number with arbitrary-precision rational real and imaginary
/// parts. Conversion from double is exact (binary expansion), so hermitian
/// double inputs stay hermitian after conversion.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(runtime/explicit)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational from_double(double re, double im) {
    return GaussianRational(mpq_class(re), mpq_class(im));
  }
  static GaussianRational from_ratio(long pre, long pim, long den) {
    mpq_class re(pre, den), im(pim, den);
    re.canonicalize();
    im.canonicalize();
    return GaussianRational(std::move(re), std::move(im));
  }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, an exact nonnegative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Cplx to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw SingularError("GaussianRational: division by zero");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n2;
    im_ = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const { return re_.get_str() + (sgn(im_) >= 0 ? "+" : "") + im_.get_str() + "i"; }

 private:
  mpq_class re_, im_;
};

// Uniform scalar helpers so templated code works on Cplx and GaussianRational.
inline Cplx qconj(const Cplx& z) { return std::conj(z); }
inline GaussianRational qconj(const GaussianRational& z) { return z.conj(); }
inline double qabs2(const Cplx& z) { return std::norm(z); }
inline mpq_class qabs2(const GaussianRational& z) { return z.norm2(); }
inline bool qis_zero(const Cplx& z) { return z == Cplx(0.0, 0.0); }
inline bool qis_zero(const GaussianRational& z) { return z.is_zero(); }
inline Cplx qto_complex(const Cplx& z) { return z; }
inline Cplx qto_complex(const GaussianRational& z) { return z.to_complex(); }

template <class S>
inline constexpr bool kExactScalar = false;
template <>
inline constexpr bool kExactScalar<GaussianRational> = true;

}  // namespace quonlab
