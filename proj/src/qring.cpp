#include "qschubert/qring.hpp"

#include "qschubert/memo.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"

#include <stdexcept>

namespace qschubert {

namespace {

Presentation complete_presentation(int n, bool quantum) {
  if (n < 1) throw std::invalid_argument("flag manifold needs n >= 1");
  Presentation p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.generators.push_back(Variable::x(i));
  if (quantum) p.q_grades.assign(static_cast<std::size_t>(n - 1), 2);
  for (int k = 1; k <= n; ++k) p.relations.push_back(quantum ? quantum_e(k, n) : elementary_poly(k, n));
  p.labels = all_permutations(n);
  for (const auto& w : p.labels) p.basis.push_back(quantum ? quantum_schubert(w) : schubert_poly(w));
  return p;
}

}  // namespace

std::vector<Polynomial> relations(int n) {
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) out.push_back(quantum_e(k, n));
  return out;
}

QuantumRing::QuantumRing(int n)
    : n_(n), quantum_(complete_presentation(n, true)), classical_(complete_presentation(n, false)) {}

void QuantumRing::check(const Permutation& w) const {
  if (w.size() != n_)
    throw std::invalid_argument(w.bracketed() + " is not in S_" + std::to_string(n_));
}

QuantumClass QuantumRing::expand_in_quantum_basis(const Polynomial& p) const { return quantum_.expand(p); }

QuantumClass QuantumRing::expand_via_operators(const Polynomial& p) const {
  return quantum_.act(p, quantum_.unit(Permutation::identity(n_)));
}

QuantumClass QuantumRing::multiply(const QuantumClass& c, const Permutation& w) const {
  check(w);
  return quantum_.act(quantum_schubert(w), c);
}

QuantumClass QuantumRing::quantum_product(const Permutation& u, const Permutation& v) const {
  check(u);
  check(v);
  // Act with the shorter polynomial.
  if (quantum_schubert(u).size() <= quantum_schubert(v).size()) return multiply(quantum_.unit(v), u);
  return multiply(quantum_.unit(u), v);
}

QuantumClass QuantumRing::quantum_product_multi(std::span<const Permutation> ws) const {
  if (ws.empty()) throw std::invalid_argument("quantum_product_multi: empty sequence");
  check(ws.front());
  QuantumClass acc = quantum_.unit(ws.front());
  for (std::size_t i = 1; i < ws.size(); ++i) acc = multiply(acc, ws[i]);
  return acc;
}

Integer QuantumRing::gromov_witten(std::span<const Permutation> ws, const Permutation& w,
                                   const MultiDegree& d) const {
  check(w);
  if (ws.empty() || d.size() != n_ - 1) return 0;
  int total = w.length();
  for (const auto& u : ws) total += u.length();
  if (total != hyperquot_dim(n_, d)) return 0;
  return quantum_product_multi(ws).coefficient(d, dual(w));
}

QuantumClass QuantumRing::classical_product(const Permutation& u, const Permutation& v) const {
  check(u);
  check(v);
  const QuantumClass c = classical_.act(schubert_poly(u), classical_.unit(v));
  QuantumClass out(n_, n_ - 1);
  for (const auto& [key, coeff] : c.terms()) out.add(MultiDegree::zero(n_ - 1), key.second, coeff);
  return out;
}

const QuantumRing& quantum_ring(int n) {
  static MemoTable<int, std::unique_ptr<QuantumRing>> rings;
  return *rings.get(n, [&] { return std::make_unique<QuantumRing>(n); });
}

}  // namespace qschubert
