#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quonlab/params.hpp"
#include "quonlab/rng.hpp"

using namespace quonlab;

TEST_CASE("all-zero family is valid and strict-valid") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  ValidationReport rep = validate(q, true);
  CHECK(rep.ok(true));
  CHECK(rep.issues.empty());
}

TEST_CASE("hermitian pair is valid") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  q.set(0, 1, Cplx(0.3, 0.1));
  q.set(1, 0, Cplx(0.3, -0.1));
  CHECK(validate(q, true).ok(true));
}

TEST_CASE("conjugate mismatch is rejected") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  q.set(0, 1, Cplx(0.5, 0.0));
  q.set(1, 0, Cplx(0.4, 0.0));
  ValidationReport rep = validate(q, false);
  CHECK(!rep.hermitian_ok);
  REQUIRE(rep.issues.size() == 1);
  CHECK(rep.issues[0].kind == ValidationIssue::Kind::NotHermitian);
}

TEST_CASE("strict mode rejects |q| >= 1, non-strict does not") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  q.set_hermitian_pair(0, 1, Cplx(1.0, 0.0));
  CHECK(validate(q, false).ok(false));
  CHECK(!validate(q, true).ok(true));
}

TEST_CASE("negative zero canonicalization in the bit-level check") {
  QMatrix<Cplx> q = QMatrix<Cplx>::zero(2);
  q.set(0, 1, Cplx(0.25, 0.0));
  q.set(1, 0, Cplx(0.25, -0.0));
  CHECK(validate(q, false).hermitian_ok);
}

TEST_CASE("valid q implies real diagonal") {
  QSampler sampler(11);
  for (int i = 0; i < 10; ++i) {
    QMatrix<Cplx> q = sampler.strict(3);
    REQUIRE(validate(q, true).ok(true));
    for (int k = 0; k < q.size(); ++k) CHECK(q(k, k).imag() == 0.0);
  }
}

TEST_CASE("restriction to a sub-alphabet stays valid") {
  QSampler sampler(13);
  for (int i = 0; i < 10; ++i) {
    QMatrix<Cplx> q = sampler.strict(4);
    QMatrix<Cplx> sub = q.restricted({0, 2, 3});
    CHECK(sub.size() == 3);
    CHECK(validate(sub, true).ok(true));
    CHECK(sub(1, 2) == q(2, 3));
  }
}

TEST_CASE("exact conversion preserves hermiticity exactly") {
  QSampler sampler(17);
  QMatrix<Cplx> q = sampler.strict(3);
  QMatrix<GaussianRational> qe = to_exact(q);
  CHECK(validate(qe, true).ok(true));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(qe(i, j) == qe(j, i).conj());
}

TEST_CASE("exact sampler stays strictly inside the disc") {
  QSampler sampler(19);
  for (int i = 0; i < 5; ++i) {
    QMatrix<GaussianRational> q = sampler.strict_exact(3);
    CHECK(validate(q, true).ok(true));
  }
}
