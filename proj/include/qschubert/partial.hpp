#pragma once

// Quantum cohomology of the partial flag manifold F^N, N = {n_1 < ... < n_m}
// inside C^n, through the tilde-E polynomials and the (sigma, q)
// substitution of the path alphabet.

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"
#include "qschubert/quantum_class.hpp"
#include "qschubert/quotient.hpp"

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qschubert {

/// Pairs (i, j) naming g_i[j-i], the path from vertex i to vertex j.
using PathIndex = std::pair<int, int>;

struct IndexSets {
  std::set<PathIndex> sigma;
  std::set<PathIndex> q;
  bool contains(PathIndex ij) const { return sigma.contains(ij) || q.contains(ij); }
};

IndexSets index_sets(const FlagShape& shape);

/// E_k(n_l)(g) with g_i[j-i] := 0 for (i, j) outside both index sets.
/// 1 <= l <= m+1; k == 0 gives 1.
Polynomial tilde_E(int k, int l, const FlagShape& shape);

/// g_{n_{l-1}+1}[j-1] -> sigma^l_j (1 <= j <= n_l - n_{l-1}),
/// g_{n_{l-1}+1}[n_{l+1}-n_{l-1}-1] -> (-1)^{n_{l+1}-n_l-1} q_l (l <= m),
/// every other admissible g_i[j] -> 0.
Substitution sigma_q_substitution(const FlagShape& shape);

/// universal_schubert_c(w) with c_i(j) -> c_i(n_k) for n_k <= j < n_{k+1}.
/// Throws std::invalid_argument unless w is in S^(N).
Polynomial partial_universal_schubert_c(const Permutation& w, const FlagShape& shape);

/// c_k(n_l) := tilde_E(k, l), then the (sigma, q) substitution. Memoized.
const Polynomial& partial_quantum_schubert(const Permutation& w, const FlagShape& shape);

/// [tilde-e^q_1(m+1), ..., tilde-e^q_n(m+1)].
std::vector<Polynomial> partial_relations(const FlagShape& shape);

/// Ring generators sigma^l_i, block by block.
std::vector<Variable> sigma_generators(const FlagShape& shape);

class PartialRing {
 public:
  explicit PartialRing(const FlagShape& shape);

  const FlagShape& shape() const { return shape_; }
  const std::vector<Permutation>& basis_labels() const { return quantum_.presentation().labels; }
  const std::vector<Polynomial>& relations() const { return quantum_.presentation().relations; }
  const QuotientEngine& quantum_engine() const { return quantum_; }
  const QuotientEngine& classical_engine() const { return classical_; }

  QuantumClass expand(const Polynomial& p) const { return quantum_.expand(p); }
  QuantumClass quantum_product(const Permutation& u, const Permutation& v) const;
  QuantumClass quantum_product_multi(std::span<const Permutation> ws) const;
  QuantumClass multiply(const QuantumClass& c, const Permutation& w) const;
  /// Coefficient of q^d sigma_{dual(w, N)}; 0 when the grading fails.
  Integer gromov_witten(std::span<const Permutation> ws, const Permutation& w, const MultiDegree& d) const;
  /// The q = 0 ring, keyed with d = 0.
  QuantumClass classical_product(const Permutation& u, const Permutation& v) const;

 private:
  void check(const Permutation& w) const;

  FlagShape shape_;
  QuotientEngine quantum_;
  QuotientEngine classical_;
};

/// Shared immutable ring per shape, built on first use.
const PartialRing& partial_ring(const FlagShape& shape);

QuantumClass partial_quantum_product(const Permutation& u, const Permutation& v, const FlagShape& shape);
Integer partial_gw(std::span<const Permutation> ws, const Permutation& w, const MultiDegree& d,
                   const FlagShape& shape);

/// Candidate closed forms for c_j(ker(E_{l+1} -> E_l)).
enum class KernelReading {
  /// Case 1 g_{n_{l-1}+1}[j-1] for j < n_l - n_{l-1}, case 2 g_{n_{l+1}-j+1}[j-1] after.
  Printed,
  /// As Printed with the boundary moved to j <= n_l - n_{l-1}.
  ShiftedBoundary,
  /// Case 1 g_{n_l+1}[j-1] for j < n_{l+1} - n_l, case 2 g_{n_{l+1}-j+1}[j-1] after.
  UpperBlock,
};

std::string to_string(KernelReading r);

struct KernelChernPartialReport {
  /// True when the UpperBlock reading matches in every grade.
  bool holds = false;
  /// c_1..c_J of the kernel after the (sigma, q) substitution, J = n_{l+1} - n_{l-1}.
  std::vector<Polynomial> kernel;
  std::vector<KernelReading> matching;
  /// First grade where the Printed reading fails, or -1.
  int printed_mismatch = -1;
};

/// c(E_{l+1}) / c(E_l) with c_k(E_l) := tilde_E(k, l), inverted as a graded
/// series through grade n_{l+1} - n_{l-1} and compared after the (sigma, q)
/// substitution with each reading. Requires 1 <= l <= m.
KernelChernPartialReport kernel_chern_partial_check(int l, const FlagShape& shape);

}  // namespace qschubert
