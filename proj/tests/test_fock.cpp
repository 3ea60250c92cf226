#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quonlab/fock.hpp"
#include "quonlab/rng.hpp"

using namespace quonlab;

namespace {
OperatorPolynomial<Cplx> annih(std::initializer_list<int> letters) {
  return OperatorPolynomial<Cplx>::monomial(MixedMonomial::annihilation(Word(letters)));
}
OperatorPolynomial<Cplx> create(std::initializer_list<int> letters) {
  return OperatorPolynomial<Cplx>::monomial(MixedMonomial::creation(Word(letters)));
}
}  // namespace

TEST_CASE("annihilator kills the vacuum") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  CHECK(apply(annih({0}), FockVector<Cplx>::vacuum(), q).is_zero());
}

TEST_CASE("a_1 a_1+ |0> = |0>") {
  QSampler s(2);
  QMatrix<Cplx> q = s.strict(2);
  OperatorPolynomial<Cplx> op = annih({0}) * create({0});
  FockVector<Cplx> out = apply(op, FockVector<Cplx>::vacuum(), q);
  CHECK(max_abs_diff(out, FockVector<Cplx>::vacuum()) < 1e-15);
}

TEST_CASE("a_1 a_2+ a_1+ |0> = q_12 |2>") {
  QSampler s(3);
  QMatrix<Cplx> q = s.strict(2);
  OperatorPolynomial<Cplx> op = annih({0}) * create({1}) * create({0});
  FockVector<Cplx> out = apply(op, FockVector<Cplx>::vacuum(), q);
  CHECK(max_abs_diff(out, FockVector<Cplx>::basis(Word({1}), q(0, 1))) < 1e-15);
}

TEST_CASE("inner products against printed entries") {
  QSampler s(4);
  QMatrix<Cplx> q = s.strict(3);
  CHECK(std::abs(inner_product(Word({0, 1}), Word({0, 1}), q) - Cplx(1.0)) < 1e-15);
  CHECK(std::abs(inner_product(Word({0, 1}), Word({1, 0}), q) - q(0, 1)) < 1e-15);
  CHECK(std::abs(inner_product(Word({0, 0, 2}), Word({0, 2, 0}), q) -
                 (q(0, 2) + q(0, 0) * q(0, 2))) < 1e-15);
  // length/weight mismatches vanish
  CHECK(inner_product(Word({0}), Word({0, 1}), q) == Cplx(0.0));
  CHECK(inner_product(Word({0, 1}), Word({0, 2}), q) == Cplx(0.0));
}

TEST_CASE("exact amplitudes stay exact") {
  QSampler s(5);
  QMatrix<GaussianRational> q = s.strict_exact(2);
  GaussianRational ip = inner_product(Word({0, 0}), Word({0, 0}), q);
  CHECK(ip == GaussianRational(1) + q(0, 0));
}

TEST_CASE("inner product hermiticity, words up to length 4") {
  QSampler s(6);
  QMatrix<Cplx> q = s.strict(2);
  std::vector<Word> words = {Word({0, 1}), Word({1, 0}), Word({0, 0, 1, 1}), Word({1, 1, 0, 0}),
                             Word({0, 1, 0, 1})};
  for (const Word& u : words) {
    for (const Word& w : words) {
      CHECK(std::abs(inner_product(u, w, q) - std::conj(inner_product(w, u, q))) < 1e-13);
    }
  }
}

TEST_CASE("dagger reverses, swaps and conjugates; adjoint identity holds") {
  QSampler s(7);
  QMatrix<Cplx> q = s.strict(2);
  OperatorPolynomial<Cplx> op =
      OperatorPolynomial<Cplx>::monomial(MixedMonomial({{OpKind::Annihilate, 0}, {OpKind::Create, 1}}),
                                         Cplx(0.5, 0.25));
  OperatorPolynomial<Cplx> opd = op.dagger();
  REQUIRE(opd.terms().size() == 1);
  CHECK(opd.terms().begin()->first ==
        MixedMonomial({{OpKind::Annihilate, 1}, {OpKind::Create, 0}}));
  CHECK(opd.terms().begin()->second == Cplx(0.5, -0.25));
  CHECK(opd.dagger() == op);

  FockVector<Cplx> u = FockVector<Cplx>::basis(Word({0, 1}));
  FockVector<Cplx> w = FockVector<Cplx>::basis(Word({1, 1}));
  CHECK(std::abs(pairing(apply(op, u, q), w, q) - pairing(u, apply(opd, w, q), q)) < 1e-13);
}

TEST_CASE("oracle gram block matches the inversion-product construction") {
  QSampler s(8);
  QMatrix<GaussianRational> q = s.strict_exact(3);
  for (const Weight& w : {Weight({0, 1}), Weight({0, 0, 1}), Weight({1, 2, 2})}) {
    CHECK(oracle_gram(w, q).matrix == gram_weight(w, q).matrix);
  }
}

TEST_CASE("operator polynomial algebra") {
  OperatorPolynomial<Cplx> a = create({0});
  OperatorPolynomial<Cplx> sum = a;
  sum += a;
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms().begin()->second == Cplx(2.0));
  sum -= a;
  sum -= a;
  CHECK(sum.is_zero());
}
