#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <vector>

#include "quonlab/fock.hpp"
#include "quonlab/gram.hpp"
#include "quonlab/twisted.hpp"

namespace quonlab {

/// Generalized Lie element Y_w: an annihilator-only operator polynomial with
/// unit coefficient on the plain monomial a_{w_1}...a_{w_n}.
template <class S>
struct YElement {
  Word word;
  OperatorPolynomial<S> body;
};

template <class S>
YElement<S> y_closed_form(const Word& word, const QMatrix<S>& q);
template <class S>
YElement<S> y_from_gamma_bar(const Word& word, const QMatrix<S>& q);

/// Y via the noncommutative recursion
/// Y_{i_1..i_n} = Y_{i_1..i_{n-1}} a_{i_n} - q_{i_n i_1}...q_{i_n i_{n-1}} a_{i_n} Y_{i_1..i_{n-1}}.
/// Debug builds cross-check the commutator expansion and the gamma_bar route
/// for short words.
template <class S>
YElement<S> y_element(const Word& word, const QMatrix<S>& q) {
  if (word.empty()) throw std::invalid_argument("y_element: empty word");
  OperatorPolynomial<S> body =
      OperatorPolynomial<S>::monomial(MixedMonomial::annihilation(Word({word[0]})));
  for (int m = 1; m < word.size(); ++m) {
    S f(1);
    for (int t = 0; t < m; ++t) f *= q(word[m], word[t]);
    OperatorPolynomial<S> last =
        OperatorPolynomial<S>::monomial(MixedMonomial::annihilation(Word({word[m]})));
    body = body * last - (last * body).scaled(f);
  }
#ifndef NDEBUG
  if constexpr (kExactScalar<S>) {
    if (word.size() <= 4) {
      assert(body == y_closed_form(word, q).body);
      assert(body == y_from_gamma_bar(word, q).body);
    }
  }
#endif
  return {word, std::move(body)};
}

/// Y via the iterated q-commutator closed form,
/// [..[[a_{i_1},a_{i_2}]_{q_{i_2 i_1}}, a_{i_3}]_{q_{i_3 i_1} q_{i_3 i_2}}, ..],
/// expanded directly over bracket-branch subsets: choosing the -f a x branch
/// at nesting level m prepends a_{i_m}, so the term for a subset T of levels
/// is (-1)^{|T|} (prod of the level factors) times the letters of T in
/// decreasing order, then i_1, then the rest in increasing order.
template <class S>
YElement<S> y_closed_form(const Word& word, const QMatrix<S>& q) {
  const int n = word.size();
  OperatorPolynomial<S> body;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    S coeff(1);
    std::vector<int> prefix, suffix;
    for (int m = n - 1; m >= 1; --m) {
      if (mask & (1u << (m - 1))) {
        S f(1);
        for (int t = 0; t < m; ++t) f *= q(word[m], word[t]);
        coeff *= -f;
        prefix.push_back(word[m]);
      }
    }
    for (int m = 1; m < n; ++m) {
      if (!(mask & (1u << (m - 1)))) suffix.push_back(word[m]);
    }
    prefix.push_back(word[0]);
    prefix.insert(prefix.end(), suffix.begin(), suffix.end());
    body.add_term(MixedMonomial::annihilation(Word(std::move(prefix))), coeff);
  }
  return {word, std::move(body)};
}

/// Y via the right action of gamma_bar on the monomial a_{w_1}...a_{w_n}.
template <class S>
YElement<S> y_from_gamma_bar(const Word& word, const QMatrix<S>& q) {
  TwistedElement gb = zagier::gamma_bar(word.size());
  std::map<Permutation, S> coeffs = specialize(gb, q, word);
  OperatorPolynomial<S> body;
  for (const auto& [p, c] : coeffs) {
    body.add_term(MixedMonomial::annihilation(word.acted(p)), c);
  }
  return {word, std::move(body)};
}

/// Left twisted derivative of a creation polynomial:
/// on a+_{j_1}...a+_{j_n}, sums over positions p with j_p = l the prefix
/// weight q_{l j_1}...q_{l j_{p-1}} times the monomial with position p omitted.
template <class S>
OperatorPolynomial<S> twisted_derivative(int letter, const OperatorPolynomial<S>& creation_poly,
                                         const QMatrix<S>& q) {
  OperatorPolynomial<S> out;
  for (const auto& [mono, c] : creation_poly.terms()) {
    std::vector<int> letters;
    for (const OpFactor& f : mono.factors()) {
      if (f.kind != OpKind::Create) {
        throw std::invalid_argument("twisted_derivative: monomial is not pure creation");
      }
      letters.push_back(f.letter);
    }
    for (size_t p = 0; p < letters.size(); ++p) {
      if (letters[p] != letter) continue;
      S pref(1);
      for (size_t t = 0; t < p; ++t) pref *= q(letter, letters[t]);
      std::vector<OpFactor> rest;
      for (size_t t = 0; t < letters.size(); ++t) {
        if (t != p) rest.push_back({OpKind::Create, letters[t]});
      }
      out.add_term(MixedMonomial(std::move(rest)), c * pref);
    }
  }
  return out;
}

/// d^(pos) of a word (pos is the 0-based letter position, 1 <= pos <= n-1):
/// q_{i_pos i_{pos+1}} ... q_{i_pos i_{n-1}} * (1 - |q_{i_pos i_0} ... q_{i_pos i_{pos-1}}|^2).
template <class S>
S d_coefficient(int pos, const Word& word, const QMatrix<S>& q) {
  const int n = word.size();
  if (pos < 1 || pos >= n) throw std::invalid_argument("d_coefficient: position out of range");
  S suffix(1);
  for (int m = pos + 1; m < n; ++m) suffix *= q(word[pos], word[m]);
  S prefix(1);
  for (int m = 0; m < pos; ++m) prefix *= q(word[pos], word[m]);
  return suffix * (S(1) - prefix * qconj(prefix));
}

/// Transition coefficient e_{w.p, w} for p in S_1 x S_{n-1}, by the
/// d-recursion: e_{w.p, w} = d^{(r)}_w * e_{w'.p', w'} with r = p(n-1),
/// w' = w minus position r and p' = t_{r,n-1} p restricted to n-1 points.
template <class S>
S e_coefficient(const Word& word, const Permutation& p, const QMatrix<S>& q) {
  const int n = word.size();
  if (n == 1) return S(1);
  if (p(0) != 0) throw std::invalid_argument("e_coefficient: permutation must fix position 0");
  int r = p(n - 1);
  S d = d_coefficient(r, word, q);
  Permutation next = cycle(r, n - 1, n).compose(p);
  std::vector<int> im(next.images().begin(), next.images().end() - 1);
  return d * e_coefficient(word.dropped(r), Permutation(std::move(im)), q);
}

/// The (n-1)! x (n-1)! transition matrix E over the words of the weight with
/// first letter k (JT-induced order), from the d-recursion. Columns are the
/// expanded words: E[j][i] = e_{j,i}. Distinct letters required.
template <class S>
RightMultMatrix<S> transition_matrix(int k, const Weight& weight, const QMatrix<S>& q) {
  for (int r = 1; r < weight.size(); ++r) {
    if (weight[r] == weight[r - 1])
      throw std::invalid_argument("transition_matrix: weight letters must be distinct");
  }
  RightMultMatrix<S> out;
  for (const CosetRep& rep : coset_reps(weight)) {
    if (rep.word[0] == k) out.labels.push_back(rep.word);
  }
  const int m = static_cast<int>(out.labels.size());
  out.matrix = Matrix<S>(m, m);
  for (int i = 0; i < m; ++i) {
    const Word& wi = out.labels[i];
    std::vector<int> pos(q.size(), -1);
    for (int t = 0; t < wi.size(); ++t) pos[wi[t]] = t;
    for (int j = 0; j < m; ++j) {
      const Word& wj = out.labels[j];
      std::vector<int> im(wi.size());
      for (int t = 0; t < wi.size(); ++t) im[t] = pos[wj[t]];  // wi.p == wj
      out.matrix(j, i) = e_coefficient(wi, Permutation(std::move(im)), q);
    }
  }
  return out;
}

enum class ExpansionMode { Expanded, Reduced };

template <class S>
struct ExpansionTerm {
  Word word;        // i, first letter k
  Word coset_word;  // j = i.pi
  S coefficient;    // entry (or coset sum of entries) of the inverted block
};

/// Normally ordered number-operator series for letter k, truncated at
/// max_degree: N_k = a+_k a_k + sum over words i (i_1 = k, |i| >= 2) of
/// coefficient * (Y_j)^dagger Y_i. The degree-1 term is stored as the term
/// (k ; k ; 1) whose Y is a_k.
template <class S>
struct NumberOperatorExpansion {
  int letter_k = 0;
  int alphabet_size = 0;
  int max_degree = 1;
  ExpansionMode mode = ExpansionMode::Reduced;
  std::vector<ExpansionTerm<S>> terms;
  std::map<Word, YElement<S>> y_table;

  /// X^dagger of a word, assembled from the term coefficients:
  /// X+_i = sum_j coeff(i,j) (Y_j)^dagger.
  OperatorPolynomial<S> x_dagger(const Word& word) const {
    OperatorPolynomial<S> out;
    for (const ExpansionTerm<S>& t : terms) {
      if (t.word != word) continue;
      out += y_table.at(t.coset_word).body.dagger().scaled(t.coefficient);
    }
    return out;
  }
};

namespace detail {

inline void enumerate_first_letter_words(int k, int nletters, int n, std::vector<Word>& out) {
  std::vector<int> cur{k};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(Word(cur));
      return;
    }
    for (int l = 0; l < nletters; ++l) {
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace detail

/// Builds the Theorem-1 expansion. Expanded mode emits one term per
/// pi in S_1 x S_{n-1} with coefficient Ahat^{-1}[rho_i][rho_i pi], where
/// Ahat is the specialized generic block of the word's weight and rho_i the
/// minimal coset representative; reduced mode groups pi by the coset word
/// j = i.pi and sums the same entries. Requires strict q.
template <class S>
NumberOperatorExpansion<S> expansion(int k, const QMatrix<S>& q, int max_degree,
                                     ExpansionMode mode = ExpansionMode::Reduced,
                                     Exec exec = Exec::Parallel) {
  if (k < 0 || k >= q.size()) throw std::invalid_argument("expansion: letter out of range");
  if (max_degree < 1) throw std::invalid_argument("expansion: max_degree must be >= 1");
  if (!validate(q, /*strict=*/true).ok(true)) {
    throw std::invalid_argument("expansion: strict q required (hermitian, all |q_ij| < 1)");
  }
  NumberOperatorExpansion<S> out;
  out.letter_k = k;
  out.alphabet_size = q.size();
  out.max_degree = max_degree;
  out.mode = mode;
  Word deg1(std::vector<int>{k});
  out.terms.push_back({deg1, deg1, S(1)});
  out.y_table.emplace(deg1, y_element(deg1, q));

  for (int n = 2; n <= max_degree; ++n) {
    check_size_cap(n, "expansion");
    std::vector<Word> words;
    detail::enumerate_first_letter_words(k, q.size(), n, words);
    std::map<Weight, Matrix<S>> inverted;  // one inverted block per weight
    for (const Word& w : words) {
      Weight weight = Weight::of_word(w);
      if (inverted.count(weight)) continue;
      Matrix<S> block = specialized_generic_block(weight, q, exec);
      try {
        inverted.emplace(weight, inverse(block));
      } catch (const SingularError&) {
        std::string name;
        for (int l : weight.word().letters()) name += q.label(l);
        throw SingularError("expansion: singular block for weight " + name);
      }
    }
    std::vector<Permutation> jt = johnson_trotter(n);
    std::map<Permutation, int> jt_index;
    for (size_t i = 0; i < jt.size(); ++i) jt_index.emplace(jt[i], static_cast<int>(i));
    std::vector<Permutation> group = first_position_fixed(n);

    for (const Word& i_word : words) {
      Weight weight = Weight::of_word(i_word);
      const Matrix<S>& ainv = inverted.at(weight);
      Permutation rho = min_coset_rep(weight, i_word);
      int row = jt_index.at(rho);
      if (!out.y_table.count(i_word)) out.y_table.emplace(i_word, y_element(i_word, q));
      if (mode == ExpansionMode::Expanded) {
        for (const Permutation& pi : group) {
          Word j_word = i_word.acted(pi);
          if (!out.y_table.count(j_word)) out.y_table.emplace(j_word, y_element(j_word, q));
          out.terms.push_back({i_word, j_word, ainv(row, jt_index.at(rho.compose(pi)))});
        }
      } else {
        std::map<Word, S> acc;
        for (const Permutation& pi : group) {
          Word j_word = i_word.acted(pi);
          auto it = acc.find(j_word);
          S v = ainv(row, jt_index.at(rho.compose(pi)));
          if (it == acc.end()) {
            acc.emplace(std::move(j_word), std::move(v));
          } else {
            it->second += v;
          }
        }
        for (auto& [j_word, coeff] : acc) {
          if (!out.y_table.count(j_word)) out.y_table.emplace(j_word, y_element(j_word, q));
          out.terms.push_back({i_word, j_word, std::move(coeff)});
        }
      }
    }
  }
  return out;
}

/// Applies the truncated series to a state. Throws if the state contains
/// words longer than the truncation (the result would be wrong there).
template <class S>
FockVector<S> act_series(const NumberOperatorExpansion<S>& exp, const FockVector<S>& v,
                         const QMatrix<S>& q, Exec exec = Exec::Parallel) {
  if (v.max_word_length() > exp.max_degree) {
    throw std::invalid_argument("act_series: truncation too small for this state");
  }
  const int nterms = static_cast<int>(exp.terms.size());
  std::vector<FockVector<S>> parts(nterms);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (int t = 0; t < nterms; ++t) {
    const ExpansionTerm<S>& term = exp.terms[t];
    FockVector<S> mid = apply(exp.y_table.at(term.word).body, v, q);
    if (mid.is_zero()) continue;
    parts[t] = apply(exp.y_table.at(term.coset_word).body.dagger(), mid, q).scaled(term.coefficient);
  }
  FockVector<S> out;
  for (FockVector<S>& p : parts) out += p;  // fixed order keeps results bitwise stable
  return out;
}

/// Independent determination of the expansion coefficients by a dense linear
/// solve on the Fock oracle: requires N_k|w> = (count of k in w)|w> on every
/// word up to max_degree, solving weight by weight in increasing length.
/// Never touches the twisted-algebra path.
template <class S>
NumberOperatorExpansion<S> solve_coefficients_oracle(int k, const QMatrix<S>& q, int max_degree) {
  if (!validate(q, /*strict=*/true).ok(true)) {
    throw std::invalid_argument("solve_coefficients_oracle: strict q required");
  }
  NumberOperatorExpansion<S> out;
  out.letter_k = k;
  out.alphabet_size = q.size();
  out.max_degree = max_degree;
  out.mode = ExpansionMode::Reduced;
  Word deg1(std::vector<int>{k});
  out.terms.push_back({deg1, deg1, S(1)});
  out.y_table.emplace(deg1, y_element(deg1, q));

  for (int n = 2; n <= max_degree; ++n) {
    check_size_cap(n, "solve_coefficients_oracle");
    for (const Weight& weight : weights_of_length(n, q.size())) {
      bool has_k = false;
      for (int r = 0; r < n; ++r) has_k = has_k || weight[r] == k;
      if (!has_k) continue;
      std::vector<Word> all_words;
      for (const CosetRep& rep : coset_reps(weight)) all_words.push_back(rep.word);
      std::vector<Word> fwords;
      for (const Word& w : all_words) {
        if (w[0] == k) fwords.push_back(w);
      }
      const int nw = static_cast<int>(all_words.size());
      const int f = static_cast<int>(fwords.size());
      std::map<Word, int> widx;
      for (int i = 0; i < nw; ++i) widx.emplace(all_words[i], i);

      std::vector<YElement<S>> ys;
      for (const Word& w : fwords) ys.push_back(y_element(w, q));

      // columns of ystates: Y^dagger_j |0>
      Matrix<S> ystates(nw, f);
      for (int j = 0; j < f; ++j) {
        FockVector<S> st = apply(ys[j].body.dagger(), FockVector<S>::vacuum(), q);
        for (const auto& [w, c] : st.terms()) ystates(widx.at(w), j) = c;
      }
      // ymat[i][w]: vacuum amplitude of Y_i |w>
      Matrix<S> ymat(f, nw);
      for (int i = 0; i < f; ++i) {
        for (int w = 0; w < nw; ++w) {
          ymat(i, w) = apply(ys[i].body, FockVector<S>::basis(all_words[w]), q).amplitude(Word{});
        }
      }
      // residual targets: r(w) = count_k |w> - (already solved terms)|w>
      int count = 0;
      for (int r = 0; r < n; ++r) count += weight[r] == k;
      Matrix<S> targets(nw, nw);
      for (int w = 0; w < nw; ++w) {
        FockVector<S> acted = act_series(out, FockVector<S>::basis(all_words[w]), q, Exec::Serial);
        targets(widx.at(all_words[w]), w) += S(count);
        for (const auto& [ww, c] : acted.terms()) targets(widx.at(ww), w) -= c;
      }
      // alpha = coordinates of r(w) in the Y^dagger basis
      Matrix<S> alpha = solve(ystates, targets);
      if (max_abs_diff(ystates * alpha, targets) > 1e-8) {
        throw SingularError("solve_coefficients_oracle: residual not in the Y-dagger span");
      }
      // U ymat = alpha  =>  U = alpha ymat^H (ymat ymat^H)^{-1}
      Matrix<S> ymat_h = ymat.adjoint();
      Matrix<S> u = (alpha * ymat_h) * inverse(ymat * ymat_h);
      for (int i = 0; i < f; ++i) {
        if (!out.y_table.count(fwords[i])) out.y_table.emplace(fwords[i], ys[i]);
        for (int j = 0; j < f; ++j) {
          if (!qis_zero(u(j, i))) out.terms.push_back({fwords[i], fwords[j], u(j, i)});
        }
      }
    }
  }
  return out;
}

/// H|v> = sum_k E_k N_k |v>; energies indexed by letter, one expansion per
/// letter of the alphabet.
template <class S>
FockVector<S> hamiltonian_apply(const std::vector<S>& energies,
                                const std::vector<NumberOperatorExpansion<S>>& expansions,
                                const FockVector<S>& v, const QMatrix<S>& q) {
  if (static_cast<int>(energies.size()) != static_cast<int>(expansions.size())) {
    throw std::invalid_argument("hamiltonian_apply: one energy per expansion");
  }
  for (size_t l = 0; l < expansions.size(); ++l) {
    if (expansions[l].letter_k != static_cast<int>(l)) {
      throw std::invalid_argument("hamiltonian_apply: expansions must cover letters 0..m in order");
    }
  }
  FockVector<S> out;
  for (size_t l = 0; l < expansions.size(); ++l) {
    if (qis_zero(energies[l])) continue;
    out += act_series(expansions[l], v, q).scaled(energies[l]);
  }
  return out;
}

}  // namespace quonlab
