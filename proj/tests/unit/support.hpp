#pragma once

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"
#include "qschubert/quantum_class.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

namespace qs_test {

using namespace qschubert;

inline Polynomial x(int i) { return Polynomial(Variable::x(i)); }
inline Polynomial q(int i) { return Polynomial(Variable::q(i)); }
inline Polynomial g(int i, int j) { return Polynomial(Variable::g(i, j)); }
inline Polynomial c(int k, int l) { return Polynomial(Variable::c(k, l)); }
inline Polynomial s(int i, int j) { return Polynomial(Variable::sigma(i, j)); }
inline Permutation P(const char* text) { return Permutation::parse(text); }
inline MultiDegree D(std::vector<int> d) { return MultiDegree(std::move(d)); }

/// Values frozen from the sympy oracle in tests/oracles.
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(QSCHUBERT_TEST_DATA "/frozen_oracle.json");
    if (!in) throw std::runtime_error("missing frozen_oracle.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

}  // namespace qs_test
