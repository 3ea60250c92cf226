#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quonlab/permutations.hpp"

using namespace quonlab;

TEST_CASE("inversions of small permutations") {
  CHECK(inversions(Permutation::identity(3)).empty());
  CHECK(inversions(Permutation::from_one_line("321")) ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(inversions(Permutation::from_one_line("132")) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("johnson-trotter order") {
  auto names = [](const std::vector<Permutation>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.one_line());
    return out;
  };
  CHECK(names(johnson_trotter(1)) == std::vector<std::string>{"1"});
  CHECK(names(johnson_trotter(2)) == std::vector<std::string>{"12", "21"});
  CHECK(names(johnson_trotter(3)) ==
        std::vector<std::string>{"123", "132", "312", "321", "231", "213"});
}

TEST_CASE("johnson-trotter: each permutation once, adjacent transpositions") {
  for (int n : {3, 4, 5}) {
    std::vector<Permutation> ps = johnson_trotter(n);
    std::set<Permutation> seen(ps.begin(), ps.end());
    CHECK(static_cast<int>(seen.size()) == static_cast<int>(ps.size()));
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long long>(ps.size()) == fact);
    for (size_t i = 1; i < ps.size(); ++i) {
      int diff_positions = 0;
      for (int r = 0; r < n; ++r) diff_positions += ps[i](r) != ps[i - 1](r);
      CHECK(diff_positions == 2);
    }
  }
}

TEST_CASE("special elements") {
  CHECK(cycle(0, 2, 3).one_line() == "312");
  CHECK(adjacent(0, 2).one_line() == "21");
  CHECK(longest(4).one_line() == "4321");
  CHECK(cycle(1, 1, 3) == Permutation::identity(3));
}

TEST_CASE("composition conventions") {
  // right action on positions: (w.p)[r] = w[p(r)], and w.(p s) = (w.p).s
  Word w({5, 6, 7, 8});
  for (const Permutation& p : johnson_trotter(4)) {
    for (const Permutation& s : {Permutation::from_one_line("2134"),
                                 Permutation::from_one_line("4123")}) {
      CHECK(w.acted(p.compose(s)) == w.acted(p).acted(s));
    }
    CHECK(p.compose(p.inverse()) == Permutation::identity(4));
    CHECK(p.compose(Permutation::identity(4)) == p);
  }
}

TEST_CASE("inversion count complement under the longest element") {
  for (int n : {2, 3, 4}) {
    Permutation w = longest(n);
    for (const Permutation& p : johnson_trotter(n)) {
      CHECK(inversion_count(p) + inversion_count(p.compose(w)) == n * (n - 1) / 2);
    }
  }
}

TEST_CASE("coset representatives") {
  SUBCASE("full weight 11: single coset") {
    std::vector<CosetRep> reps = coset_reps(Weight({0, 0}));
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].rep == Permutation::identity(2));
  }
  SUBCASE("weight 113 orders words 113,131,311") {
    std::vector<CosetRep> reps = coset_reps(Weight({0, 0, 2}));
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].word == Word({0, 0, 2}));
    CHECK(reps[1].word == Word({0, 2, 0}));
    CHECK(reps[2].word == Word({2, 0, 0}));
    CHECK(reps[1].rep.one_line() == "132");
    CHECK(reps[2].rep.one_line() == "312");
  }
  SUBCASE("generic weight: all n! permutations") {
    CHECK(coset_reps(Weight({3, 5, 7})).size() == 6);
  }
}

TEST_CASE("coset factorization is unique: p = h . rep") {
  for (const Weight& weight : {Weight({0, 0, 1}), Weight({0, 0, 1, 1}), Weight({0, 1, 2, 2})}) {
    std::vector<CosetRep> reps = coset_reps(weight);
    std::vector<Permutation> stab = weight.stabilizer();
    std::set<Permutation> covered;
    for (const CosetRep& rep : reps) {
      for (const Permutation& h : stab) {
        CHECK(covered.insert(h.compose(rep.rep)).second);
      }
    }
    CHECK(covered.size() == johnson_trotter(weight.size()).size());
  }
}

TEST_CASE("minimal coset representative is minimal") {
  for (const Weight& weight : {Weight({0, 0, 1, 2}), Weight({0, 1, 1, 1})}) {
    std::vector<Permutation> stab = weight.stabilizer();
    for (const CosetRep& rep : coset_reps(weight)) {
      Permutation r = min_coset_rep(weight, rep.word);
      CHECK(weight.word().acted(r) == rep.word);
      for (const Permutation& h : stab) {
        CHECK(inversion_count(r) <= inversion_count(h.compose(r)));
      }
    }
  }
}

TEST_CASE("young subgroup sizes and stabilizers") {
  CHECK(young_subgroup({1, 3}).size() == 6);
  CHECK(young_subgroup({2, 2}).size() == 4);
  CHECK(first_position_fixed(4).size() == 6);
  Weight w({0, 0, 0, 2});
  CHECK(w.stabilizer().size() == 6);
  CHECK(w.arrangement_count() == 4);
  for (const Permutation& h : w.stabilizer()) CHECK(w.word().acted(h) == w.word());
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(johnson_trotter(size_cap() + 1), SizeCapError);
}

TEST_CASE("bad one-line input") {
  CHECK_THROWS_AS(Permutation::from_one_line("122"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}
