#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qs_test;

TEST_SUITE("universal") {

TEST_CASE("path polynomials") {
  CHECK(path_poly(1, 2) == g(1, 0) + g(2, 0));
  CHECK(path_poly(2, 2) == g(1, 0) * g(2, 0) + g(1, 1));
  CHECK(path_poly(3, 2).is_zero());
  CHECK(path_poly(0, 3) == Polynomial(1));
  CHECK(path_poly_range(1, 2, 2) == g(2, 0));
  CHECK(path_poly_range(2, 1, 2) == path_poly(2, 2));
  CHECK(path_poly_range(3, 2, 3).is_zero());
  CHECK(path_poly_range(0, 3, 2) == Polynomial(1));
}

TEST_CASE("frozen path polynomials from cover enumeration") {
  for (const auto& e : oracle().at("path_poly")) {
    const int k = e.at("k"), l = e.at("l");
    CAPTURE(k);
    CAPTURE(l);
    CHECK(path_poly(k, l) == polynomial_from_json(e.at("poly")));
  }
}

TEST_CASE("path alphabet") {
  PathAlphabet a(3);
  CHECK(a.variables().size() == 6);
  CHECK(a.admissible(1, 2));
  CHECK(!a.admissible(2, 2));
  CHECK(!a.admissible(0, 0));
}

TEST_CASE("g in terms of c") {
  CHECK(g_from_c(1, 0) == c(1, 1));
  CHECK(g_from_c(3, 0) == c(1, 3) - c(1, 2));
  CHECK(g_from_c(1, 1) == c(2, 2) - c(1, 1) * c(1, 2) + c(1, 1).pow(2));
  for (int i = 1; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(c_to_g(g_from_c(i, j)) == g(i, j));
      CHECK(g_from_c(i, j).is_homogeneous());
      CHECK(*g_from_c(i, j).grades().begin() == j + 1);
    }
  CHECK(c_value(0, 3) == Polynomial(1));
  CHECK(c_value(4, 3).is_zero());
  CHECK(c_value(-1, 3).is_zero());
}

TEST_CASE("universal Schubert polynomials") {
  CHECK(universal_schubert_c(P("1,2,3")) == Polynomial(1));
  CHECK(universal_schubert_c(P("2,1,3")) == c(1, 1));
  CHECK(universal_schubert_c(P("3,1,2")) == c(1, 1) * c(1, 2) - c(2, 2));
  CHECK(universal_schubert_g(P("1,2,3")) == Polynomial(1));
  CHECK(universal_schubert_g(P("2,1,3")) == g(1, 0));
  CHECK(universal_schubert_g(P("3,1,2")) == g(1, 0).pow(2) - g(1, 1));
}

TEST_CASE("specializations") {
  const Polynomial p = g(1, 0).pow(2) - g(1, 1);
  CHECK(specialize_quantum(p) == x(1).pow(2) - q(1));
  CHECK(specialize_classical(p) == x(1).pow(2));
  CHECK(specialize_quantum(g(1, 2)).is_zero());
  const Polynomial plain = x(1) * q(2) + Polynomial(3);
  CHECK(specialize_quantum(plain) == plain);
  CHECK(set_q_zero(plain) == Polynomial(3));

  for (const auto& w : all_permutations(4)) {
    CHECK(specialize_quantum(universal_schubert_g(w)) == quantum_schubert(w));
    CHECK(specialize_classical(universal_schubert_g(w)) == schubert_poly(w));
    CHECK(set_q_zero(quantum_schubert(w)) == schubert_poly(w));
    CHECK(universal_schubert_g(w).is_homogeneous());
  }
}

TEST_CASE("quantum elementary polynomials") {
  CHECK(quantum_e(1, 3) == x(1) + x(2) + x(3));
  CHECK(quantum_e(2, 2) == x(1) * x(2) + q(1));
  CHECK(quantum_e(3, 3) == x(1) * x(2) * x(3) + q(1) * x(3) + x(1) * q(2));
  for (const auto& [n, table] : oracle().at("quantum_e").items())
    for (const auto& [kl, poly] : table.items()) {
      const auto comma = kl.find(',');
      const int k = std::stoi(kl.substr(0, comma)), l = std::stoi(kl.substr(comma + 1));
      CAPTURE(kl);
      CHECK(quantum_e(k, l) == polynomial_from_json(poly));
    }
}

TEST_CASE("quantum Schubert polynomials") {
  CHECK(quantum_schubert(P("2,1,3")) == x(1));
  CHECK(quantum_schubert(P("3,1,2")) == x(1).pow(2) - q(1));
  CHECK(quantum_schubert(P("1,2,3")) == Polynomial(1));
  for (const auto& [n, table] : oracle().at("quantum_schubert").items())
    for (const auto& [w, poly] : table.items()) {
      CAPTURE(w);
      CHECK(quantum_schubert(Permutation::parse(w)) == polynomial_from_json(poly));
    }
}

TEST_CASE("kernel Chern classes") {
  CHECK(kernel_chern_check(1, 2).holds);
  for (int k = 1; k <= 5; ++k) CHECK(kernel_chern_check(k, k).holds);
  CHECK(kernel_chern_check(2, 4).holds);
}

}
