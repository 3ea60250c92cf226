#pragma once

#include <compare>
#include <map>
#include <vector>

#include "quonlab/gram.hpp"
#include "quonlab/params.hpp"
#include "quonlab/permutations.hpp"

namespace quonlab {

enum class OpKind : std::uint8_t { Create, Annihilate };

struct OpFactor {
  OpKind kind;
  int letter;
  friend bool operator==(const OpFactor&, const OpFactor&) = default;
  friend std::strong_ordering operator<=>(const OpFactor&, const OpFactor&) = default;
};

/// A product of creation/annihilation operators, left to right.
class MixedMonomial {
 public:
  MixedMonomial() = default;
  explicit MixedMonomial(std::vector<OpFactor> factors) : factors_(std::move(factors)) {}

  /// a+_{w_1} a+_{w_2} ... a+_{w_n}
  static MixedMonomial creation(const Word& w) {
    std::vector<OpFactor> f;
    for (int l : w.letters()) f.push_back({OpKind::Create, l});
    return MixedMonomial(std::move(f));
  }
  /// a_{w_1} a_{w_2} ... a_{w_n}
  static MixedMonomial annihilation(const Word& w) {
    std::vector<OpFactor> f;
    for (int l : w.letters()) f.push_back({OpKind::Annihilate, l});
    return MixedMonomial(std::move(f));
  }

  const std::vector<OpFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Anti-involution: reverses the product and swaps tags (coefficients are
  /// conjugated at the polynomial level).
  MixedMonomial dagger() const {
    std::vector<OpFactor> f(factors_.rbegin(), factors_.rend());
    for (OpFactor& x : f) x.kind = x.kind == OpKind::Create ? OpKind::Annihilate : OpKind::Create;
    return MixedMonomial(std::move(f));
  }

  MixedMonomial concat(const MixedMonomial& o) const {
    std::vector<OpFactor> f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return MixedMonomial(std::move(f));
  }

  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
  friend std::strong_ordering operator<=>(const MixedMonomial& a, const MixedMonomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<OpFactor> factors_;
};

template <class S>
class OperatorPolynomial {
 public:
  OperatorPolynomial() = default;

  static OperatorPolynomial monomial(MixedMonomial m, S c = S(1)) {
    OperatorPolynomial p;
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const std::map<MixedMonomial, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(MixedMonomial m, S c) {
    if (qis_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (qis_zero(it->second)) terms_.erase(it);
    }
  }

  OperatorPolynomial& operator+=(const OperatorPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  OperatorPolynomial& operator-=(const OperatorPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  /// Noncommutative product: concatenation of monomials.
  OperatorPolynomial operator*(const OperatorPolynomial& o) const {
    OperatorPolynomial out;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) out.add_term(m1.concat(m2), c1 * c2);
    return out;
  }
  OperatorPolynomial scaled(const S& c) const {
    OperatorPolynomial out;
    for (const auto& [m, v] : terms_) out.add_term(m, c * v);
    return out;
  }

  OperatorPolynomial dagger() const {
    OperatorPolynomial out;
    for (const auto& [m, c] : terms_) out.add_term(m.dagger(), qconj(c));
    return out;
  }

  friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a += b;
  }
  friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a -= b;
  }

  friend bool operator==(const OperatorPolynomial&, const OperatorPolynomial&) = default;

 private:
  std::map<MixedMonomial, S> terms_;
};

/// Linear combination of creation-word basis states a+_{i_1}...a+_{i_n}|0>;
/// the empty word is the vacuum.
template <class S>
class FockVector {
 public:
  FockVector() = default;

  static FockVector vacuum() { return basis(Word{}); }
  static FockVector basis(const Word& w, S amp = S(1)) {
    FockVector v;
    v.add_term(w, std::move(amp));
    return v;
  }

  const std::map<Word, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S amplitude(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }
  int max_word_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return m;
  }

  void add_term(Word w, S amp) {
    if (qis_zero(amp)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(amp));
    } else {
      it->second += amp;
      if (qis_zero(it->second)) terms_.erase(it);
    }
  }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  FockVector scaled(const S& c) const {
    FockVector out;
    for (const auto& [w, v] : terms_) out.add_term(w, c * v);
    return out;
  }

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  std::map<Word, S> terms_;
};

template <class S>
double max_abs_diff(const FockVector<S>& a, const FockVector<S>& b) {
  double m = 0.0;
  for (const auto& [w, c] : a.terms()) m = std::max(m, std::abs(qto_complex(c - b.amplitude(w))));
  for (const auto& [w, c] : b.terms()) m = std::max(m, std::abs(qto_complex(c - a.amplitude(w))));
  return m;
}

namespace detail {

/// Core rewriting: applies one mixed monomial to one basis word. Annihilators
/// commute rightward one step at a time via a_i a_j+ = q_ij a_j+ a_i + d_ij;
/// each step strictly decreases the number of (annihilator, creator-to-the-
/// right) pairs, so this terminates. Annihilators reaching the vacuum kill
/// the term.
template <class S>
void apply_mono_to_word(const MixedMonomial& mono, const Word& w, const S& amp,
                        const QMatrix<S>& q, FockVector<S>& out) {
  std::vector<std::pair<S, std::vector<OpFactor>>> work;
  {
    std::vector<OpFactor> seq = mono.factors();
    for (int l : w.letters()) seq.push_back({OpKind::Create, l});
    work.emplace_back(amp, std::move(seq));
  }
  while (!work.empty()) {
    auto [coef, seq] = std::move(work.back());
    work.pop_back();
    int pos = -1;
    for (size_t p = 0; p + 1 < seq.size(); ++p) {
      if (seq[p].kind == OpKind::Annihilate && seq[p + 1].kind == OpKind::Create) {
        pos = static_cast<int>(p);
        break;
      }
    }
    if (pos < 0) {
      // normally ordered; any remaining annihilator hits the vacuum
      bool killed = false;
      for (const OpFactor& f : seq) killed = killed || f.kind == OpKind::Annihilate;
      if (killed) continue;
      std::vector<int> letters;
      for (const OpFactor& f : seq) letters.push_back(f.letter);
      out.add_term(Word(std::move(letters)), coef);
      continue;
    }
    int i = seq[pos].letter, j = seq[pos + 1].letter;
    if (i == j) {
      std::vector<OpFactor> contracted(seq.begin(), seq.begin() + pos);
      contracted.insert(contracted.end(), seq.begin() + pos + 2, seq.end());
      work.emplace_back(coef, std::move(contracted));
    }
    std::swap(seq[pos], seq[pos + 1]);
    work.emplace_back(coef * q(i, j), std::move(seq));
  }
}

}  // namespace detail

/// Applies an operator polynomial to a state; the result is again a
/// creation-word combination.
template <class S>
FockVector<S> apply(const OperatorPolynomial<S>& op, const FockVector<S>& v, const QMatrix<S>& q) {
  FockVector<S> out;
  for (const auto& [mono, c] : op.terms()) {
    FockVector<S> part;
    for (const auto& [w, amp] : v.terms()) detail::apply_mono_to_word(mono, w, amp, q, part);
    out += part.scaled(c);
  }
  return out;
}

/// <u|w> = <0| a_{u_n} ... a_{u_1} a+_{w_1} ... a+_{w_m} |0>.
template <class S>
S inner_product(const Word& u, const Word& w, const QMatrix<S>& q) {
  std::vector<OpFactor> f;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    f.push_back({OpKind::Annihilate, *it});
  FockVector<S> out;
  detail::apply_mono_to_word(MixedMonomial(std::move(f)), w, S(1), q, out);
  return out.amplitude(Word{});
}

/// <u, v> for arbitrary states, conjugate-linear in the first argument;
/// expands over the (non-orthogonal) word basis via inner_product.
template <class S>
S pairing(const FockVector<S>& u, const FockVector<S>& v, const QMatrix<S>& q) {
  S out(0);
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      out += qconj(cu) * cv * inner_product(wu, wv, q);
    }
  }
  return out;
}

/// Gram block assembled entirely from Fock-space inner products; the
/// independent oracle for gram_weight.
template <class S>
GramBlock<S> oracle_gram(const Weight& weight, const QMatrix<S>& q, Exec exec = Exec::Parallel) {
  GramBlock<S> out;
  out.weight = weight;
  for (const CosetRep& r : coset_reps(weight)) out.labels.push_back(r.word);
  const int m = static_cast<int>(out.labels.size());
  out.matrix = Matrix<S>(m, m);
  Matrix<S>& a = out.matrix;
  const std::vector<Word>& labels = out.labels;
#pragma omp parallel for collapse(2) schedule(dynamic) if (exec == Exec::Parallel)
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      a(r, c) = inner_product(labels[r], labels[c], q);
    }
  }
  return out;
}

}  // namespace quonlab
