#pragma once

// The small quantum cohomology ring of the complete flag manifold in C^n:
//   Z[x_1..x_n, q_1..q_{n-1}] / (e^q_1(n), ..., e^q_n(n))
// with Schubert basis sigma_w = S_w(x, q).

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"
#include "qschubert/quantum_class.hpp"
#include "qschubert/quotient.hpp"

#include <span>
#include <vector>

namespace qschubert {

/// [e^q_1(n), ..., e^q_n(n)].
std::vector<Polynomial> relations(int n);

class QuantumRing {
 public:
  explicit QuantumRing(int n);

  int n() const { return n_; }
  const std::vector<Polynomial>& relations() const { return quantum_.presentation().relations; }
  const QuotientEngine& quantum_engine() const { return quantum_; }
  const QuotientEngine& classical_engine() const { return classical_; }

  /// Exact per-grade solve over basis keys and ideal multipliers.
  QuantumClass expand_in_quantum_basis(const Polynomial& p) const;
  /// Same result computed through the multiplication maps of x_1..x_n.
  QuantumClass expand_via_operators(const Polynomial& p) const;

  QuantumClass quantum_product(const Permutation& u, const Permutation& v) const;
  /// Left fold; throws std::invalid_argument on an empty sequence.
  QuantumClass quantum_product_multi(std::span<const Permutation> ws) const;
  /// c * sigma_w.
  QuantumClass multiply(const QuantumClass& c, const Permutation& w) const;

  /// Coefficient of q^d sigma_{dual(w)} in the product of ws; 0 when the
  /// grading condition fails.
  Integer gromov_witten(std::span<const Permutation> ws, const Permutation& w, const MultiDegree& d) const;

  /// S_u(x) S_v(x) modulo (e_1(n), ..., e_n(n)), keyed with d = 0.
  QuantumClass classical_product(const Permutation& u, const Permutation& v) const;

 private:
  void check(const Permutation& w) const;

  int n_;
  QuotientEngine quantum_;
  QuotientEngine classical_;
};

/// Shared immutable ring for S_n, built on first use.
const QuantumRing& quantum_ring(int n);

}  // namespace qschubert
