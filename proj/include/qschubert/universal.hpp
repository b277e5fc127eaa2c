#pragma once

// Universal Schubert polynomials in the Chern-class alphabet c_k(l) and
// the Dynkin path alphabet g_i[j], the path polynomials E_k(l)(g), and
// their quantum (g_i[1] = q_i) and classical specializations.
//
// Vertices x_1, ..., x_n sit on a line; g_i[j] is the path covering the
// j+1 consecutive vertices x_i, ..., x_{i+j}.

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"

#include <vector>

namespace qschubert {

/// The admissible path variables over n vertices: g_i[j] with i >= 1,
/// j >= 0 and i + j <= n.
class PathAlphabet {
 public:
  explicit PathAlphabet(int vertices);

  int vertices() const { return vertices_; }
  bool admissible(int i, int j) const { return i >= 1 && j >= 0 && i + j <= vertices_; }
  /// Every admissible g_i[j], ordered by (j, i).
  std::vector<Variable> variables() const;

 private:
  int vertices_;
};

/// E_k(l)(g): sum over sets of vertex-disjoint paths inside x_1..x_l that
/// cover exactly k vertices.
const Polynomial& path_poly(int k, int l);

/// E_i(a,b)(g): as path_poly, with every path inside x_a..x_b. 1 for i == 0
/// and 0 for i > b - a + 1 (also when a > b).
Polynomial path_poly_range(int i, int a, int b);

/// c-variable value honouring c_0(l) = 1 and c_k(l) = 0 for k < 0 or k > l.
Polynomial c_value(int k, int l);

/// g_i[j] written in the c_k(l): the unique polynomial P with
/// P(c_k(l) := E_k(l)) == g_i[j]. Grade j + 1.
const Polynomial& g_from_c(int i, int j);

/// c_k(l) := E_k(l)(g) for every c-variable occurring in `p`.
Polynomial c_to_g(const Polynomial& p);

/// sum a_k c_{k_1}(1) ... c_{k_{n-1}}(n-1) over the e-decomposition of S_w.
const Polynomial& universal_schubert_c(const Permutation& w);

/// universal_schubert_c with c_k(l) := E_k(l)(g).
const Polynomial& universal_schubert_g(const Permutation& w);

/// g_i[0] -> x_i, g_i[1] -> q_i, g_i[j] -> 0 for j >= 2.
Polynomial specialize_quantum(const Polynomial& p);
/// specialize_quantum followed by q_i -> 0.
Polynomial specialize_classical(const Polynomial& p);
/// q_i -> 0 on a polynomial in x and q.
Polynomial set_q_zero(const Polynomial& p);

/// e^q_k(l): quantum elementary polynomial in x and q.
const Polynomial& quantum_e(int k, int l);

/// S_w(x, q) = sum a_k prod_p e^q_{k_p}(p).
const Polynomial& quantum_schubert(const Permutation& w);

struct KernelChernReport {
  bool holds = true;
  /// First grade where the two sides differ, or -1.
  int bad_grade = -1;
  Polynomial lhs;
  Polynomial rhs;
};

/// With g_i[j] := 0 whenever i < k+1 <= i+j <= l, checks
///   (sum_i E_i(k)) * (sum_i E_i(k+1, l)) == sum_i E_i(l)
/// grade by grade. Requires 1 <= k <= l.
KernelChernReport kernel_chern_check(int k, int l);

}  // namespace qschubert
