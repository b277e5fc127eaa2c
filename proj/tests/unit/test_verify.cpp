#include "qschubert/qring.hpp"
#include "qschubert/universal.hpp"
#include "qschubert/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qs_test;
namespace v = qschubert::verify;

namespace {

void check_suite(const std::string& name, const v::SuiteOptions& o) {
  const auto results = v::run_suite(name, o);
  CHECK(!results.empty());
  std::size_t cases = 0;
  for (const auto& r : results) {
    CAPTURE(name);
    CAPTURE(r.property);
    CAPTURE(r.counterexample);
    CHECK(r.passed);
    cases += r.cases;
  }
  CHECK(cases > 0);
}

v::SuiteOptions with_n(int n) {
  v::SuiteOptions o;
  o.n = n;
  o.samples = 20;
  return o;
}

v::SuiteOptions with_shape(const char* text) {
  v::SuiteOptions o;
  o.shape = FlagShape::parse(text);
  o.samples = 20;
  return o;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("three routes to the path polynomials agree") {
  for (int l = 1; l <= 5; ++l)
    for (int k = 0; k <= l; ++k) {
      CAPTURE(k);
      CAPTURE(l);
      CHECK(v::path_poly_recursion(k, l) == path_poly(k, l));
      CHECK(v::path_poly_determinant(k, l) == path_poly(k, l));
    }
}

TEST_CASE("quantum Monk rule matches the ring") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int r = 1; r < n; ++r)
        CHECK(v::quantum_monk(r, w) == quantum_ring(n).quantum_product(Permutation::transposition(n, r), w));
  CHECK_THROWS_AS(v::quantum_monk(0, P("2,1")), std::invalid_argument);
}

TEST_CASE("multiindex inequalities") {
  const auto es = v::valid_es(3, 3);
  CHECK(!es.empty());
  for (const auto& e : v::valid_es(4, 6)) {
    const auto [sum, rhs] = lemma_es_check(e);
    CHECK(sum <= rhs);
    CHECK(rhs >= 2);
    CHECK((rhs == 2) == (sum == 1));
    CHECK(v::lemma_es_square_form(e) == rhs);
  }
}

TEST_CASE("suites pass on small rings") {
  for (const auto& name : v::suite_names()) {
    if (name == "kernel-chern-partial") continue;
    check_suite(name, with_n(3));
  }
  for (const char* shape : {"1:3", "2:4", "1:3:4"}) {
    check_suite("kernel-chern-partial", with_shape(shape));
    check_suite("associativity", with_shape(shape));
    check_suite("positivity", with_shape(shape));
    check_suite("duality", with_shape(shape));
  }
}

TEST_CASE("suite arguments") {
  CHECK_THROWS_AS(v::run_suite("no-such-suite", with_n(3)), std::invalid_argument);
  CHECK_THROWS_AS(v::run_suite("associativity", v::SuiteOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(v::run_suite("kernel-chern-partial", with_n(3)), std::invalid_argument);
}

TEST_CASE("sampled suites are reproducible") {
  auto o = with_n(4);
  o.seed = 42;
  const auto a = v::run_suite("associativity", o);
  const auto b = v::run_suite("associativity", o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].passed);
  }
}

}
