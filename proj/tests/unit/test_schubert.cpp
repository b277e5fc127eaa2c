#include "qschubert/schubert.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace qs_test;

TEST_SUITE("schubert") {

TEST_CASE("divided differences") {
  CHECK(divided_difference(x(1), 1) == Polynomial(1));
  CHECK(divided_difference(x(1) * x(2), 1).is_zero());
  CHECK(divided_difference(x(1).pow(2) * x(2), 2) == x(1).pow(2));
  CHECK_THROWS_AS(divided_difference(q(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(divided_difference(x(1), 0), std::invalid_argument);
}

TEST_CASE("small values") {
  CHECK(schubert_poly(P("3,2,1")) == x(1).pow(2) * x(2));
  CHECK(schubert_poly(P("1,2,3")) == Polynomial(1));
  CHECK(schubert_poly(P("2,1,3")) == x(1));
  CHECK(staircase_monomial(4) == x(1).pow(3) * x(2).pow(2) * x(3));
  CHECK(elementary_poly(1, 2) == x(1) + x(2));
  CHECK(elementary_poly(2, 2) == x(1) * x(2));
  CHECK(elementary_poly(3, 2).is_zero());
  CHECK(elementary_poly(0, 2) == Polynomial(1));
}

TEST_CASE("frozen classical Schubert polynomials") {
  for (const auto& [n, table] : oracle().at("schubert").items()) {
    CAPTURE(n);
    for (const auto& [w, poly] : table.items()) {
      CAPTURE(w);
      CHECK(schubert_poly(Permutation::parse(w)) == polynomial_from_json(poly));
    }
  }
}

TEST_CASE("independence of the reduced word") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto a = reduced_word(w, WordChoice::Smallest);
      const auto b = reduced_word(w, WordChoice::Largest);
      CHECK(schubert_poly_from_word(n, a) == schubert_poly(w));
      CHECK(schubert_poly_from_word(n, b) == schubert_poly(w));
    }
  }
  std::mt19937 rng(11);
  const auto s5 = all_permutations(5);
  for (int t = 0; t < 20; ++t) {
    const auto& w = s5[rng() % s5.size()];
    CHECK(schubert_poly_from_word(5, reduced_word(w, WordChoice::Largest)) == schubert_poly(w));
  }
}

TEST_CASE("stability under embedding") {
  for (const auto& w : all_permutations(3)) CHECK(schubert_poly(w.embed(5)) == schubert_poly(w));
}

TEST_CASE("e-decomposition") {
  const auto& id = e_decomposition(P("1,2,3"));
  CHECK(id.coeffs == std::map<BlockSequence, Integer>{{{0, 0}, 1}});
  const auto& w312 = e_decomposition(P("3,1,2"));
  CHECK(w312.coeffs == std::map<BlockSequence, Integer>{{{1, 1}, 1}, {{0, 2}, -1}});
  const auto& s1 = e_decomposition(P("2,1,3"));
  CHECK(s1.coeffs == std::map<BlockSequence, Integer>{{{1, 0}, 1}});

  for (const auto& w : all_permutations(4)) {
    const auto& dec = e_decomposition(w);
    for (const auto& [k, a] : dec.coeffs) {
      int total = 0;
      for (std::size_t p = 0; p < k.size(); ++p) {
        CHECK(k[p] <= static_cast<int>(p) + 1);
        total += k[p];
      }
      CHECK(total == w.length());
    }
    CHECK(dec.recombine([](int k, int l) { return elementary_poly(k, l); }) == schubert_poly(w));
  }
}

TEST_CASE("block sequences") {
  CHECK(block_sequences(3, 0).size() == 1);
  CHECK(block_sequences(3, 3).size() == 1);
  CHECK(block_sequences(4, 3).size() == 6);
}

}
