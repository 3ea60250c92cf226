#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quonlab/gram.hpp"
#include "quonlab/rng.hpp"
#include "quonlab/twisted.hpp"

using namespace quonlab;

TEST_CASE("lift basics") {
  CHECK(lift(Permutation::identity(3)) == TwistedElement::unit(3));
  // lift(21) = Q_{2,1} (21): one inversion with values (2,1), 0-based (1,0)
  TwistedElement t = lift(Permutation::from_one_line("21"));
  REQUIRE(t.terms().size() == 1);
  const LaurentPoly& c = t.terms().begin()->second;
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms().begin()->first == Monomial::q(1, 0));
  CHECK(c.terms().begin()->second == 1);
}

TEST_CASE("unit is a two-sided unit; degree mismatch rejected") {
  TwistedElement x = zagier::beta(3);
  CHECK(TwistedElement::unit(3) * x == x);
  CHECK(x * TwistedElement::unit(3) == x);
  CHECK_THROWS_AS(x * TwistedElement::unit(2), std::invalid_argument);
}

TEST_CASE("t1~ squared picks up Q_{1,2} Q_{2,1}") {
  TwistedElement t = lift(adjacent(0, 2));
  TwistedElement sq = t * t;
  REQUIRE(sq.terms().size() == 1);
  CHECK(sq.terms().begin()->first == Permutation::identity(2));
  CHECK(sq.terms().begin()->second == LaurentPoly::q_curly(0, 1));
}

TEST_CASE("product rule: sigma~ pi~ carries the inversion-intersection factor") {
  for (const Permutation& sg : johnson_trotter(3)) {
    for (const Permutation& pi : johnson_trotter(3)) {
      TwistedElement lhs = lift(sg) * lift(pi);
      LaurentPoly extra = LaurentPoly::unit();
      auto inv_pi = inversions(pi.inverse());
      for (const auto& [a, b] : inversions(sg)) {
        for (const auto& [c, d] : inv_pi) {
          if (a == c && b == d) extra = extra * LaurentPoly::q_curly(sg(a), sg(b));
        }
      }
      TwistedElement rhs = lift(sg.compose(pi)).scaled(extra);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("alpha(2) is 1 + Q_{2,1} (21)") {
  TwistedElement a2 = zagier::alpha(2);
  CHECK(a2 == TwistedElement::unit(2) + lift(Permutation::from_one_line("21")));
}

TEST_CASE("alpha factorization through beta (symbolic)") {
  CHECK(zagier::alpha(3) == zagier::alpha_comp({2, 1}) * zagier::beta(3));
  CHECK(zagier::alpha(4) == zagier::alpha_comp({3, 1}) * zagier::beta(4));
  CHECK(zagier::beta(4) * zagier::gamma(4) == zagier::delta(4));
}

TEST_CASE("xi(2) = (1 - Q_{{1,2}}) id") {
  TwistedElement x = zagier::xi(2);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first == Permutation::identity(2));
  CHECK(x.terms().begin()->second == LaurentPoly::unit() - LaurentPoly::q_curly(0, 1));
}

TEST_CASE("gamma product form equals the alternating sum (symbolic)") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(zagier::gamma(n) == zagier::gamma_alternating_sum(n));
  }
}

TEST_CASE("w eta w = xi (symbolic)") {
  for (int n = 2; n <= 4; ++n) {
    TwistedElement w = TwistedElement::bare(longest(n));
    CHECK(w * zagier::eta(n) * w == zagier::xi(n));
  }
}

TEST_CASE("specialization") {
  QSampler s(3);
  QMatrix<Cplx> q = s.strict(2);
  SUBCASE("q = 0 kills inverted terms") {
    auto sp = specialize(lift(Permutation::from_one_line("21")), QMatrix<Cplx>::zero(2), Word({0, 1}));
    CHECK(sp.empty());
  }
  SUBCASE("word length must match the degree") {
    CHECK_THROWS_AS(specialize(zagier::alpha(2), q, Word({0, 1, 1})), std::invalid_argument);
  }
  SUBCASE("uniform one-parameter specialization gives q^{inversions}") {
    Cplx qq(0.3, 0.2);
    TwistedElement a3 = zagier::alpha(3);
    for (const auto& [p, poly] : a3.terms()) {
      CHECK(std::abs(specialize_uniform(poly, qq) - std::pow(qq, inversion_count(p))) < 1e-14);
    }
  }
}

TEST_CASE("right multiplication by alpha realizes the Gram blocks") {
  QSampler s(5);
  QMatrix<Cplx> q = s.strict(3);
  for (const Weight& w : {Weight({0, 1}), Weight({0, 1, 2}), Weight({0, 0, 2}), Weight({0, 0})}) {
    RightMultMatrix<Cplx> m = right_mult_matrix(zagier::alpha(w.size()), q, w);
    GramBlock<Cplx> g = gram_weight(w, q);
    CHECK(m.labels == g.labels);
    CHECK(max_abs_diff(m.matrix, g.matrix) < 1e-13);
  }
}

TEST_CASE("right multiplication by the unit is the identity") {
  QSampler s(6);
  QMatrix<Cplx> q = s.strict(2);
  RightMultMatrix<Cplx> m = right_mult_matrix(TwistedElement::unit(3), q, Weight({0, 0, 1}));
  CHECK(max_abs_diff(m.matrix, Matrix<Cplx>::identity(3)) == 0.0);
}

TEST_CASE("invert_element") {
  QSampler s(8);
  SUBCASE("inverse of the unit is the unit") {
    QMatrix<Cplx> q = s.strict(3);
    InvertedElement<Cplx> inv = invert_element(TwistedElement::unit(3), q, Weight({0, 1, 2}));
    CHECK(max_abs_diff(inv.matrix, Matrix<Cplx>::identity(6)) == 0.0);
  }
  SUBCASE("gamma_bar inverse at random strict q") {
    for (int n : {2, 3, 4}) {
      QMatrix<Cplx> q = s.strict(n);
      std::vector<int> letters(n);
      for (int i = 0; i < n; ++i) letters[i] = i;
      Weight w(letters);
      TwistedElement gb = zagier::gamma_bar(n);
      RightMultMatrix<Cplx> m = right_mult_matrix(gb, q, w);
      InvertedElement<Cplx> inv = invert_element(gb, q, w);
      CHECK(max_abs_diff(m.matrix * inv.matrix, Matrix<Cplx>::identity(m.matrix.rows())) < 1e-11);
      CHECK(max_abs_diff(inv.matrix * m.matrix, Matrix<Cplx>::identity(m.matrix.rows())) < 1e-11);
    }
  }
  SUBCASE("singular specialization is rejected") {
    QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
    q.set_hermitian_pair(0, 1, Cplx(1.0, 0.0));
    CHECK_THROWS_AS(invert_element(zagier::alpha(2), q, Weight({0, 1})), SingularError);
  }
}

TEST_CASE("laurent monomials multiply by adding exponents") {
  Monomial a = Monomial::q(0, 1, 2).times(Monomial::q(1, 0, -1));
  Monomial b = Monomial::q(0, 1, -2).times(Monomial::q(1, 0, 1));
  CHECK(a.times(b).is_unit());
  CHECK(Monomial().is_unit());
}

TEST_CASE("delta_3 support and coefficients") {
  // (1 - t2~ t_{1,3}~)(1 - t2~ t_{2,3}~) collapses onto the identity and
  // t_{1,2}: products t2~ t_{k,3}~ equal Q_{{2,3}} t_{k,2}~
  TwistedElement d3 = zagier::delta(3);
  REQUIRE(d3.terms().size() == 2);
  LaurentPoly idc = d3.terms().at(Permutation::identity(3));
  CHECK(idc == LaurentPoly::unit() - LaurentPoly::q_curly(1, 2));
}
