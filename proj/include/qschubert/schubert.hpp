#pragma once

// Classical Schubert polynomials from divided differences and their
// expansion in products of elementary symmetric polynomials
//   S_w(x) = sum a_k e_{k_1}(1) e_{k_2}(2) ... e_{k_{n-1}}(n-1).

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace qschubert {

/// (P - s_i P) / (x_i - x_{i+1}). Throws std::invalid_argument when `p`
/// contains a non-x variable or i < 1.
Polynomial divided_difference(const Polynomial& p, int i);

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Polynomial staircase_monomial(int n);

/// S_w(x), memoized by one-line notation.
const Polynomial& schubert_poly(const Permutation& w);

/// S_w(x) computed along an explicit word with w = w_0 o s_{i_1} o ... o s_{i_k}.
/// Not memoized; used to check independence of the word.
Polynomial schubert_poly_from_word(int n, std::span<const int> word);

/// e_k(x_1, ..., x_l): 1 for k == 0, 0 for k > l.
Polynomial elementary_poly(int k, int l);

/// Block sequence (k_1, ..., k_{n-1}) with 0 <= k_p <= p.
using BlockSequence = std::vector<int>;

/// All block sequences for S_n with sum == total, in lexicographic order.
std::vector<BlockSequence> block_sequences(int n, int total);

struct EDecomposition {
  int n = 0;
  Permutation w;
  std::map<BlockSequence, Integer> coeffs;

  /// sum a_k prod_p factor(k_p, p).
  template <class Factor>
  Polynomial recombine(Factor&& factor) const {
    Polynomial out;
    for (const auto& [k, a] : coeffs) {
      Polynomial term(a);
      for (std::size_t p = 0; p < k.size(); ++p) term *= factor(k[p], static_cast<int>(p) + 1);
      out += term;
    }
    return out;
  }

  /// Lines "a · e_{k1}(1)·e_{k2}(2)…" (factors with k_p = 0 omitted).
  std::string to_string() const;
};

/// Memoized; the recombination is checked against S_w(x) before returning.
const EDecomposition& e_decomposition(const Permutation& w);

}  // namespace qschubert
