#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quonlab/gram.hpp"
#include "quonlab/linalg.hpp"
#include "quonlab/params.hpp"
#include "quonlab/permutations.hpp"

namespace quonlab {

/// Laurent monomial in the commuting indeterminates Q_{k,l} (k != l, 0-based):
/// a sorted exponent map. The empty monomial is the unit.
class Monomial {
 public:
  Monomial() = default;

  static Monomial q(int k, int l, int exp = 1);

  Monomial times(const Monomial& o) const;
  /// The diagonal S_n action: Q_{k,l} -> Q_{p(k),p(l)}.
  Monomial twisted(const Permutation& p) const;
  bool is_unit() const { return factors_.empty(); }
  const std::vector<std::pair<std::pair<int, int>, int>>& factors() const { return factors_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<std::pair<std::pair<int, int>, int>> factors_;  // ((k,l), exp), sorted, exp != 0
};

/// Integer-coefficient Laurent polynomial in the Q_{k,l}.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly unit() { return scalar(1); }
  static LaurentPoly scalar(long long c);
  static LaurentPoly monomial(Monomial m, long long c = 1);
  /// Q_{{k,l}} = Q_{k,l} Q_{l,k}.
  static LaurentPoly q_curly(int k, int l);
  /// Q_T = prod_{k != l in T} Q_{k,l}.
  static LaurentPoly q_set(const std::vector<int>& T);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, long long>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly twisted(const Permutation& p) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<Monomial, long long> terms_;
};

/// Element of the twisted group algebra K_n~[S_n]: a finitely supported map
/// from permutations to Laurent polynomials, multiplied with the twist
/// pi Q_{k,l} = Q_{pi(k),pi(l)} pi.
class TwistedElement {
 public:
  TwistedElement() : degree_(0) {}
  explicit TwistedElement(int degree) : degree_(degree) {}

  static TwistedElement unit(int degree);
  /// The bare group element 1 * p.
  static TwistedElement bare(const Permutation& p);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }

  void add_term(const Permutation& p, const LaurentPoly& c);
  TwistedElement& operator+=(const TwistedElement& o);
  TwistedElement& operator-=(const TwistedElement& o);
  TwistedElement operator*(const TwistedElement& o) const;
  TwistedElement operator-() const;
  /// Left-multiplies every coefficient by c (scalars of K_n commute with
  /// coefficients but not with permutations).
  TwistedElement scaled(const LaurentPoly& c) const;

  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
  friend bool operator==(const TwistedElement&, const TwistedElement&) = default;

 private:
  int degree_;
  std::map<Permutation, LaurentPoly> terms_;
};

/// The lift pi~ = Q_pi * pi, Q_pi = prod over inversions (k,l) of
/// Q_{pi(k),pi(l)}; encodes all inversions of pi.
TwistedElement lift(const Permutation& p);
/// Q_pi^{-1} * pi (the lift with inverted monomial); appears in eta.
TwistedElement anti_lift(const Permutation& p);

enum class ZagierKind { Alpha, Beta, Gamma, Delta, GammaBar, Xi, Eta };

namespace zagier {
TwistedElement alpha(int n);
/// alpha over the Young subgroup S_{n_1} x ... x S_{n_k}.
TwistedElement alpha_comp(const std::vector<int>& parts);
TwistedElement beta(int n);
TwistedElement gamma(int n);
TwistedElement delta(int n);
TwistedElement gamma_bar(int n);
TwistedElement xi(int n);
TwistedElement eta(int n);
/// Alternating-sum form of gamma: sum_k (-1)^{n-k} sum over descent-shape
/// permutations (pi(1)<...<pi(k)=n>...>pi(n)) of the lift of pi^{-1}.
TwistedElement gamma_alternating_sum(int n);

struct GammaBarInverse {
  TwistedElement numerator;  // sum over S_n of pi~ . (descent product)
  LaurentPoly denominator;   // (1 - Q_{{0,1}})(1 - Q_{{0,1,2}}) ... , central up to twist
};
/// Closed form of gamma_bar^{-1} = numerator * denominator^{-1}.
GammaBarInverse gamma_bar_inverse_closed(int n);
}  // namespace zagier

TwistedElement make_zagier(ZagierKind kind, int n);

/// Substitutes Q_{k,l} -> q(word[k], word[l]); the result is the coefficient
/// map of the element acting on that particular word.
template <class S>
std::map<Permutation, S> specialize(const TwistedElement& x, const QMatrix<S>& q, const Word& word) {
  if (word.size() != x.degree()) throw std::invalid_argument("specialize: degree/word mismatch");
  std::map<Permutation, S> out;
  for (const auto& [p, poly] : x.terms()) {
    S val(0);
    for (const auto& [m, c] : poly.terms()) {
      S v(c);
      for (const auto& [kl, e] : m.factors()) {
        const S& base = q(word[kl.first], word[kl.second]);
        if (e > 0) {
          for (int t = 0; t < e; ++t) v *= base;
        } else {
          if (qis_zero(base)) throw SingularError("specialize: negative power of a zero parameter");
          for (int t = 0; t < -e; ++t) v /= base;
        }
      }
      val += v;
    }
    if (!qis_zero(val)) out.emplace(p, std::move(val));
  }
  return out;
}

/// One-parameter specialization Q_{k,l} -> q (Zagier's setting).
Cplx specialize_uniform(const LaurentPoly& poly, Cplx q);

/// Matrix of right multiplication by x on the weight's word space, columns
/// indexed by input words, rows by output words (JT-induced label order):
/// column j of the matrix is a_j . x expanded in the word basis. With this
/// convention M(xy) = M(y) M(x), and M(alpha_n) is exactly the Gram block.
/// With restrict_first_letter set, rows/columns are restricted to words with
/// that first letter (the transition-matrix index set).
template <class S>
struct RightMultMatrix {
  std::vector<Word> labels;
  Matrix<S> matrix;
};

template <class S>
RightMultMatrix<S> right_mult_matrix(const TwistedElement& x, const QMatrix<S>& q,
                                     const Weight& weight,
                                     std::optional<int> restrict_first_letter = std::nullopt) {
  std::vector<Word> words;
  for (const CosetRep& r : coset_reps(weight)) {
    if (!restrict_first_letter || r.word[0] == *restrict_first_letter) words.push_back(r.word);
  }
  std::map<Word, int> index;
  for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
  RightMultMatrix<S> out;
  out.labels = words;
  out.matrix = Matrix<S>(static_cast<int>(words.size()), static_cast<int>(words.size()));
  for (size_t j = 0; j < words.size(); ++j) {
    std::map<Permutation, S> coeffs = specialize(x, q, words[j]);
    for (const auto& [tau, c] : coeffs) {
      Word target = words[j].acted(tau);
      auto it = index.find(target);
      if (it == index.end()) {
        if (restrict_first_letter) continue;  // action leaves the restricted span
        throw std::logic_error("right_mult_matrix: target word missing");
      }
      out.matrix(it->second, static_cast<int>(j)) += c;
    }
  }
  return out;
}

/// The inverse of a (specialized) element, represented by its right-
/// multiplication matrix on the weight's word space plus, for generic
/// weights, the per-column coefficient maps read back from the matrix.
template <class S>
struct InvertedElement {
  std::vector<Word> labels;
  Matrix<S> matrix;  // inverse of the right-multiplication matrix
  /// column_coeffs[j][tau] = coefficient of tau when acting on labels[j]
  std::vector<std::map<Permutation, S>> column_coeffs;
};

template <class S>
InvertedElement<S> invert_element(const TwistedElement& x, const QMatrix<S>& q, const Weight& weight) {
  RightMultMatrix<S> m = right_mult_matrix(x, q, weight);
  InvertedElement<S> out;
  out.labels = m.labels;
  out.matrix = inverse(m.matrix);
  bool generic = true;
  for (int r = 1; r < weight.size(); ++r) generic = generic && weight[r] != weight[r - 1];
  if (generic) {
    std::map<Word, int> index;
    for (size_t i = 0; i < m.labels.size(); ++i) index.emplace(m.labels[i], static_cast<int>(i));
    for (size_t j = 0; j < m.labels.size(); ++j) {
      std::map<Permutation, S> col;
      for (const Permutation& tau : johnson_trotter(weight.size())) {
        S v = out.matrix(index.at(m.labels[j].acted(tau)), static_cast<int>(j));
        if (!qis_zero(v)) col.emplace(tau, std::move(v));
      }
      out.column_coeffs.push_back(std::move(col));
    }
  }
  return out;
}

}  // namespace quonlab
