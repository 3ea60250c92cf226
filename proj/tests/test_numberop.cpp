#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quonlab/numberop.hpp"
#include "quonlab/rng.hpp"

using namespace quonlab;

namespace {
QMatrix<Cplx> sample_q(int n, std::uint64_t seed) {
  QSampler s(seed);
  return s.strict(n);
}
}  // namespace

TEST_CASE("Y of a single letter is the annihilator") {
  QMatrix<Cplx> q = sample_q(2, 1);
  YElement<Cplx> y = y_element(Word({1}), q);
  CHECK(y.body == OperatorPolynomial<Cplx>::monomial(MixedMonomial::annihilation(Word({1}))));
}

TEST_CASE("Y of two letters is the q-commutator") {
  QMatrix<Cplx> q = sample_q(2, 2);
  YElement<Cplx> y = y_element(Word({0, 1}), q);
  OperatorPolynomial<Cplx> expected =
      OperatorPolynomial<Cplx>::monomial(MixedMonomial::annihilation(Word({0, 1})));
  expected.add_term(MixedMonomial::annihilation(Word({1, 0})), -q(1, 0));
  CHECK(y.body == expected);
}

TEST_CASE("Y at q = 0 is the plain monomial") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(3);
  Word w({0, 2, 1, 2});
  CHECK(y_element(w, q).body ==
        OperatorPolynomial<Cplx>::monomial(MixedMonomial::annihilation(w)));
}

TEST_CASE("the three Y constructions agree, including degenerate words") {
  QSampler s(3);
  QMatrix<GaussianRational> q = s.strict_exact(3);
  for (const Word& w : {Word({0, 1}), Word({0, 1, 2}), Word({0, 0}), Word({0, 1, 1}),
                        Word({0, 2, 1, 0}), Word({1, 1, 1})}) {
    YElement<GaussianRational> rec = y_element(w, q);
    CHECK(rec.body == y_closed_form(w, q).body);
    CHECK(rec.body == y_from_gamma_bar(w, q).body);
  }
}

TEST_CASE("twisted derivative basics") {
  QMatrix<Cplx> q = sample_q(2, 4);
  SUBCASE("single matching letter gives the unit") {
    OperatorPolynomial<Cplx> d =
        twisted_derivative(0, OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word({0}))), q);
    CHECK(d == OperatorPolynomial<Cplx>::monomial(MixedMonomial()));
  }
  SUBCASE("no matching letter gives zero") {
    OperatorPolynomial<Cplx> d =
        twisted_derivative(0, OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word({1}))), q);
    CHECK(d.is_zero());
  }
  SUBCASE("prefix factor: d_1(a_2+ a_1+) = q_12 a_2+") {
    OperatorPolynomial<Cplx> d = twisted_derivative(
        0, OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word({1, 0}))), q);
    OperatorPolynomial<Cplx> expected =
        OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word({1})), q(0, 1));
    CHECK(d == expected);
  }
  SUBCASE("annihilators are rejected") {
    CHECK_THROWS_AS(
        twisted_derivative(0, OperatorPolynomial<Cplx>::monomial(MixedMonomial::annihilation(Word({0}))), q),
        std::invalid_argument);
  }
}

TEST_CASE("d coefficients") {
  QMatrix<Cplx> q = sample_q(3, 5);
  Word w2({0, 1});
  CHECK(std::abs(d_coefficient(1, w2, q) - (Cplx(1.0) - q(1, 0) * std::conj(q(1, 0)))) < 1e-15);
  QMatrix<Cplx> zero = QMatrix<Cplx>::zero(3);
  Word w4({0, 1, 2, 1});
  CHECK(d_coefficient(1, w4, zero) == Cplx(0.0));  // suffix product vanishes
  CHECK(d_coefficient(3, w4, zero) == Cplx(1.0));  // empty suffix, zero prefix modulus
  CHECK_THROWS_AS(d_coefficient(0, w2, q), std::invalid_argument);
  CHECK_THROWS_AS(d_coefficient(2, w2, q), std::invalid_argument);
}

TEST_CASE("n = 2 transition matrix inverts to the degree-2 coefficient") {
  QMatrix<Cplx> q = sample_q(2, 6);
  Weight w({0, 1});
  RightMultMatrix<Cplx> e = transition_matrix(0, w, q);
  REQUIRE(e.matrix.rows() == 1);
  Cplx expected_e = Cplx(1.0) - q(1, 0) * std::conj(q(1, 0));
  CHECK(std::abs(e.matrix(0, 0) - expected_e) < 1e-14);

  NumberOperatorExpansion<Cplx> nop = expansion(0, q, 2);
  Cplx coeff(0.0);
  for (const auto& t : nop.terms) {
    if (t.word == Word({0, 1}) && t.coset_word == Word({0, 1})) coeff = t.coefficient;
  }
  CHECK(std::abs(coeff - Cplx(1.0) / expected_e) < 1e-13);
}

TEST_CASE("expansion structure") {
  QMatrix<Cplx> q = sample_q(2, 7);
  SUBCASE("max_degree 1 is just a_k+ a_k") {
    NumberOperatorExpansion<Cplx> nop = expansion(0, q, 1);
    REQUIRE(nop.terms.size() == 1);
    CHECK(nop.terms[0].word == Word({0}));
    CHECK(nop.terms[0].coefficient == Cplx(1.0));
    CHECK(nop.x_dagger(Word({0})) ==
          OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word({0}))));
  }
  SUBCASE("every term is multihomogeneous and starts with k") {
    NumberOperatorExpansion<Cplx> nop = expansion(1, q, 3);
    for (const auto& t : nop.terms) {
      CHECK(t.word[0] == 1);
      CHECK(t.coset_word[0] == 1);
      CHECK(t.word.sorted() == t.coset_word.sorted());
    }
  }
  SUBCASE("strict q is required") {
    QMatrix<Cplx> bad = QMatrix<Cplx>::zero(2);
    bad.set_hermitian_pair(0, 1, Cplx(1.2, 0.0));
    CHECK_THROWS_AS(expansion(0, bad, 2), std::invalid_argument);
  }
}

TEST_CASE("act_series basics") {
  QMatrix<Cplx> q = sample_q(2, 8);
  NumberOperatorExpansion<Cplx> nop = expansion(0, q, 3);
  SUBCASE("vacuum is annihilated") {
    CHECK(act_series(nop, FockVector<Cplx>::vacuum(), q).is_zero());
  }
  SUBCASE("single-particle eigenstate") {
    FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0}));
    CHECK(max_abs_diff(act_series(nop, v, q), v) < 1e-12);
  }
  SUBCASE("truncation too small") {
    FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0, 1, 0, 1}));
    CHECK_THROWS_AS(act_series(nop, v, q), std::invalid_argument);
  }
}

TEST_CASE("exact diagonality for words of length <= 3 over two letters") {
  QSampler s(9);
  QMatrix<GaussianRational> q = s.strict_exact(2);
  for (int k = 0; k < 2; ++k) {
    NumberOperatorExpansion<GaussianRational> red = expansion(k, q, 3, ExpansionMode::Reduced);
    NumberOperatorExpansion<GaussianRational> exp = expansion(k, q, 3, ExpansionMode::Expanded);
    std::vector<Word> words;
    for (int a = 0; a < 2; ++a) {
      words.push_back(Word({a}));
      for (int b = 0; b < 2; ++b) {
        words.push_back(Word({a, b}));
        for (int c = 0; c < 2; ++c) words.push_back(Word({a, b, c}));
      }
    }
    for (const Word& w : words) {
      GaussianRational count(0);
      for (int l : w.letters()) {
        if (l == k) count += GaussianRational(1);
      }
      FockVector<GaussianRational> target = FockVector<GaussianRational>::basis(w, count);
      FockVector<GaussianRational> got = act_series(red, FockVector<GaussianRational>::basis(w), q);
      CHECK(got == target);
      CHECK(act_series(exp, FockVector<GaussianRational>::basis(w), q) == target);
    }
  }
}

TEST_CASE("oracle coefficients: degree 1 and 2") {
  QMatrix<Cplx> q = sample_q(2, 10);
  NumberOperatorExpansion<Cplx> oracle = solve_coefficients_oracle(0, q, 2);
  NumberOperatorExpansion<Cplx> direct = expansion(0, q, 2);
  REQUIRE(oracle.terms[0].word == Word({0}));
  CHECK(oracle.terms[0].coefficient == Cplx(1.0));
  std::map<std::pair<Word, Word>, Cplx> a, b;
  for (const auto& t : oracle.terms) a[{t.word, t.coset_word}] += t.coefficient;
  for (const auto& t : direct.terms) b[{t.word, t.coset_word}] += t.coefficient;
  for (const auto& [key, v] : b) {
    auto it = a.find(key);
    Cplx ov = it == a.end() ? Cplx(0.0) : it->second;
    CHECK(std::abs(v - ov) < 1e-10);
  }
}

TEST_CASE("oracle and inverted-block coefficients agree exactly in exact mode") {
  QSampler s(12);
  QMatrix<GaussianRational> q = s.strict_exact(2);
  NumberOperatorExpansion<GaussianRational> oracle = solve_coefficients_oracle(0, q, 3);
  NumberOperatorExpansion<GaussianRational> direct = expansion(0, q, 3);
  std::map<std::pair<Word, Word>, GaussianRational> a, b;
  for (const auto& t : oracle.terms) a[{t.word, t.coset_word}] += t.coefficient;
  for (const auto& t : direct.terms) b[{t.word, t.coset_word}] += t.coefficient;
  CHECK(a.size() == b.size());
  for (const auto& [key, v] : b) {
    auto it = a.find(key);
    REQUIRE(it != a.end());
    CHECK(it->second == v);
  }
}

TEST_CASE("hamiltonian") {
  QMatrix<Cplx> q = sample_q(2, 11);
  std::vector<NumberOperatorExpansion<Cplx>> nops;
  nops.push_back(expansion(0, q, 3));
  nops.push_back(expansion(1, q, 3));
  SUBCASE("zero energies give the zero operator") {
    FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0, 1}));
    CHECK(hamiltonian_apply<Cplx>({Cplx(0.0), Cplx(0.0)}, nops, v, q).is_zero());
  }
  SUBCASE("E_1 = 2 doubles the count eigenvalue") {
    FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0, 0}));
    FockVector<Cplx> out = hamiltonian_apply<Cplx>({Cplx(2.0), Cplx(0.0)}, nops, v, q);
    CHECK(max_abs_diff(out, FockVector<Cplx>::basis(Word({0, 0}), Cplx(4.0))) < 1e-10);
  }
  SUBCASE("vacuum maps to zero") {
    CHECK(hamiltonian_apply<Cplx>({Cplx(1.0), Cplx(1.0)}, nops, FockVector<Cplx>::vacuum(), q)
              .is_zero());
  }
  SUBCASE("additivity across letters") {
    FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0, 1, 1}));
    FockVector<Cplx> out = hamiltonian_apply<Cplx>({Cplx(1.5), Cplx(0.25)}, nops, v, q);
    CHECK(max_abs_diff(out, FockVector<Cplx>::basis(Word({0, 1, 1}), Cplx(1.5 + 0.5))) < 1e-10);
  }
}
