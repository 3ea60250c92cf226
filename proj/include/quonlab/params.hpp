#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "quonlab/common.hpp"
#include "quonlab/exact.hpp"

namespace quonlab {

/// The hermitian family of deformation parameters q_ij over a finite ordered
/// alphabet. Letters are referenced by index; alphabet() keeps the external
/// labels. Immutable after construction apart from set(), which is intended
/// for builders.
template <class S>
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::vector<std::string> alphabet)
      : alphabet_(std::move(alphabet)),
        entries_(alphabet_.size() * alphabet_.size(), S(0)) {}

  static QMatrix zero(int nletters) {
    std::vector<std::string> labels;
    for (int i = 0; i < nletters; ++i) labels.push_back(std::to_string(i + 1));
    return QMatrix(std::move(labels));
  }

  int size() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& label(int i) const { return alphabet_[i]; }

  const S& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * size() + j]; }
  void set(int i, int j, S v) { entries_[static_cast<size_t>(i) * size() + j] = std::move(v); }

  /// Sets q_ij and q_ji = conj(q_ij) together.
  void set_hermitian_pair(int i, int j, const S& v) {
    set(i, j, v);
    set(j, i, qconj(v));
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
      if (alphabet_[i] == label) return i;
    }
    throw std::invalid_argument("QMatrix: unknown letter '" + label + "'");
  }

  /// Restriction to a sub-alphabet (kept indices, in order).
  QMatrix restricted(const std::vector<int>& keep) const {
    std::vector<std::string> labels;
    for (int i : keep) labels.push_back(alphabet_[i]);
    QMatrix out(std::move(labels));
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t b = 0; b < keep.size(); ++b)
        out.set(static_cast<int>(a), static_cast<int>(b), (*this)(keep[a], keep[b]));
    return out;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<S> entries_;
};

struct ValidationIssue {
  enum class Kind { NotHermitian, ModulusNotBelowOne, NotFinite };
  Kind kind;
  int i, j;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool hermitian_ok = true;
  bool strict_ok = true;
  bool ok(bool strict) const { return hermitian_ok && (!strict || strict_ok); }
};

namespace detail {
// -0.0 canonicalized to +0.0, then bit-level comparison
inline bool bit_equal(double a, double b) {
  if (a == 0.0) a = 0.0;
  if (b == 0.0) b = 0.0;
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}
inline bool conj_equal(const Cplx& a, const Cplx& b) {
  return bit_equal(a.real(), b.real()) && bit_equal(a.imag(), -b.imag());
}
inline bool conj_equal(const GaussianRational& a, const GaussianRational& b) { return a == b.conj(); }
inline bool finite_entry(const Cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
inline bool finite_entry(const GaussianRational&) { return true; }
inline bool modulus_below_one(const Cplx& v) { return std::norm(v) < 1.0; }
inline bool modulus_below_one(const GaussianRational& v) { return v.norm2() < 1; }
}  // namespace detail

/// Checks hermiticity exactly (bit-level for doubles after canonicalizing -0)
/// and, when strict, |q_ij| < 1 for every pair.
template <class S>
ValidationReport validate(const QMatrix<S>& q, bool strict) {
  ValidationReport rep;
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      if (!detail::finite_entry(q(i, j))) {
        rep.issues.push_back({ValidationIssue::Kind::NotFinite, i, j});
        rep.hermitian_ok = false;
        continue;
      }
      if (j >= i && !detail::conj_equal(q(i, j), q(j, i))) {
        rep.issues.push_back({ValidationIssue::Kind::NotHermitian, i, j});
        rep.hermitian_ok = false;
      }
      if (strict && !detail::modulus_below_one(q(i, j))) {
        rep.issues.push_back({ValidationIssue::Kind::ModulusNotBelowOne, i, j});
        rep.strict_ok = false;
      }
    }
  }
  return rep;
}

/// Exact copy of a double QMatrix (binary expansions are exact, so
/// hermiticity carries over).
inline QMatrix<GaussianRational> to_exact(const QMatrix<Cplx>& q) {
  QMatrix<GaussianRational> out(q.alphabet());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      out.set(i, j, GaussianRational::from_double(q(i, j).real(), q(i, j).imag()));
  return out;
}

inline QMatrix<Cplx> to_double(const QMatrix<GaussianRational>& q) {
  QMatrix<Cplx> out(q.alphabet());
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) out.set(i, j, q(i, j).to_complex());
  return out;
}

}  // namespace quonlab
