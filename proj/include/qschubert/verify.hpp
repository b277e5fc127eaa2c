#pragma once

// Independent oracles and the named property suites behind `verify`.

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"
#include "qschubert/quantum_class.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qschubert::verify {

/// E_k(l) from E_k(l) = E_k(l-1) + sum_{j=0}^{k} E_{k-j-1}(l-j-1) g_{l-j}[j].
Polynomial path_poly_recursion(int k, int l);

/// E_k(l) as the coefficient of lambda^{l-k} in det(G_l + lambda I).
Polynomial path_poly_determinant(int k, int l);

/// sigma_{s_r} * sigma_w in QH*(F(n)) by the quantum Monk rule.
QuantumClass quantum_monk(int r, const Permutation& w);

/// sum e_i + (e_1^2 + (e_2-e_1)^2 + ... + e_{n-1}^2) / 2 with the
/// multiindex zero-padded to `length`.
int lemma_es_square_form(const MultiDegree& e);

/// Every e of the given length with 0 <= e_i, e_i - e_{i-1} <= 1 and
/// 1 <= sum e_i <= max_total.
std::vector<MultiDegree> valid_es(int length, int max_total);

struct PropertyResult {
  std::string property;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

struct SuiteOptions {
  std::optional<int> n;
  std::optional<FlagShape> shape;
  std::uint64_t seed = 1;
  /// Random samples for suites that do not enumerate exhaustively.
  int samples = 100;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite or missing --n/--shape.
std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qschubert::verify
