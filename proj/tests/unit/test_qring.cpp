#include "qschubert/qring.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace qs_test;

namespace {

QuantumClass term(int n, const MultiDegree& d, const char* w, int coeff = 1) {
  QuantumClass out(n, n - 1);
  out.add(d, P(w), Integer(coeff));
  return out;
}

QuantumClass sum(QuantumClass a, const QuantumClass& b) {
  a.add_scaled(b, Integer(1), MultiDegree::zero(a.q_count()));
  return a;
}

}  // namespace

TEST_SUITE("qring") {

TEST_CASE("relations") {
  CHECK(relations(2) == std::vector<Polynomial>{x(1) + x(2), x(1) * x(2) + q(1)});
  const auto r3 = relations(3);
  CHECK(r3.size() == 3);
  CHECK(r3[0] == x(1) + x(2) + x(3));
  CHECK(r3[2] == x(1) * x(2) * x(3) + q(1) * x(3) + x(1) * q(2));
  for (int n = 2; n <= 4; ++n) {
    const auto& ring = quantum_ring(n);
    for (int k = 1; k <= n; ++k) {
      CHECK(ring.expand_in_quantum_basis(relations(n)[k - 1]).is_zero());
      CHECK(set_q_zero(relations(n)[k - 1]) == elementary_poly(k, n));
    }
  }
}

TEST_CASE("basis self expansion") {
  for (int n = 2; n <= 4; ++n) {
    const auto& ring = quantum_ring(n);
    for (const auto& w : all_permutations(n)) {
      CHECK(ring.expand_in_quantum_basis(quantum_schubert(w)) == QuantumClass::basis(w, n - 1));
      CHECK(ring.expand_via_operators(quantum_schubert(w)) == QuantumClass::basis(w, n - 1));
    }
  }
}

TEST_CASE("small products") {
  CHECK(quantum_ring(2).expand_in_quantum_basis(x(1).pow(2)) == term(2, D({1}), "1,2"));
  CHECK(quantum_ring(2).quantum_product(P("2,1"), P("2,1")) == term(2, D({1}), "1,2"));
  const auto sq = quantum_ring(3).quantum_product(P("2,1,3"), P("2,1,3"));
  CHECK(sq == sum(term(3, D({0, 0}), "3,1,2"), term(3, D({1, 0}), "1,2,3")));
  CHECK(sq.to_string() == "σ[3,1,2] + q1·σ[1,2,3]");
  CHECK(quantum_ring(3).classical_product(P("2,1,3"), P("2,1,3")) == term(3, D({0, 0}), "3,1,2"));
  for (const auto& v : all_permutations(3))
    CHECK(quantum_ring(3).quantum_product(P("1,2,3"), v) == QuantumClass::basis(v, 2));
}

TEST_CASE("frozen product tables") {
  for (const auto& [n_text, table] : oracle().at("products").items()) {
    const int n = std::stoi(n_text);
    const auto& ring = quantum_ring(n);
    for (const auto& e : table) {
      const auto u = Permutation::parse(e.at("u").get<std::string>());
      const auto v = Permutation::parse(e.at("v").get<std::string>());
      CAPTURE(e.at("u"));
      CAPTURE(e.at("v"));
      CHECK(ring.quantum_product(u, v) == quantum_class_from_json(e.at("product"), n - 1));
    }
  }
}

TEST_CASE("multi products") {
  const auto& ring = quantum_ring(3);
  const auto s1 = P("2,1,3");
  const std::vector<Permutation> one{P("3,1,2")};
  CHECK(ring.quantum_product_multi(one) == QuantumClass::basis(P("3,1,2"), 2));
  const std::vector<Permutation> three{s1, s1, s1};
  const auto left = ring.multiply(ring.quantum_product(s1, s1), s1);
  const auto right = ring.multiply(ring.quantum_product(s1, s1), s1);
  CHECK(ring.quantum_product_multi(three) == left);
  CHECK(left == right);
  const std::vector<Permutation> with_id{s1, P("1,2,3"), P("1,3,2")};
  const std::vector<Permutation> without_id{s1, P("1,3,2")};
  CHECK(ring.quantum_product_multi(with_id) == ring.quantum_product_multi(without_id));
  CHECK_THROWS_AS(ring.quantum_product_multi(std::vector<Permutation>{}), std::invalid_argument);
}

TEST_CASE("Gromov-Witten invariants") {
  const auto& ring = quantum_ring(3);
  const auto s1 = P("2,1,3");
  const std::vector<Permutation> pair{s1, s1};
  CHECK(ring.gromov_witten(pair, P("3,2,1"), D({1, 0})) == 1);
  CHECK(ring.gromov_witten(pair, P("3,2,1"), D({0, 1})) == 0);
  const std::vector<Permutation> triple{s1, s1, P("3,2,1")};
  CHECK(ring.gromov_witten(triple, P("1,2,3"), D({1, 0})) == 1);
  for (int n = 2; n <= 4; ++n) {
    const auto& r = quantum_ring(n);
    for (const auto& u : all_permutations(n)) {
      const std::vector<Permutation> one{u};
      CHECK(r.gromov_witten(one, dual(u), MultiDegree::zero(n - 1)) == 1);
      for (int l = 0; l < n - 1; ++l) CHECK(r.gromov_witten(one, dual(u), MultiDegree::unit(n - 1, l + 1)) == 0);
    }
  }
}

TEST_CASE("products are deterministic across threads") {
  const auto& ring = quantum_ring(4);
  const auto s4 = all_permutations(4);
  std::vector<QuantumClass> first, second;
  for (std::size_t i = 0; i < s4.size(); ++i) first.push_back(ring.quantum_product(s4[i], s4[23 - i]));
  std::vector<std::thread> pool;
  second.resize(s4.size());
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < s4.size(); i += 4)
        second[i] = ring.quantum_product(s4[i], s4[23 - i]);
    });
  for (auto& th : pool) th.join();
  CHECK(first == second);
}

TEST_CASE("quantum class json") {
  std::mt19937 rng(3);
  const auto& ring = quantum_ring(4);
  const auto s4 = all_permutations(4);
  for (int t = 0; t < 30; ++t) {
    auto c = ring.quantum_product(s4[rng() % 24], s4[rng() % 24]);
    const auto copy = c;
    c.add_scaled(copy, Integer(1) << 90, D({0, 1, 0}));
    CHECK(quantum_class_from_json(to_json(c)) == c);
  }
  const QuantumClass empty(4, 3);
  CHECK(quantum_class_from_json(to_json(empty), 3) == empty);
  CHECK_THROWS(ring.quantum_product(P("2,1,3"), P("2,1,3,4")));
}

}
