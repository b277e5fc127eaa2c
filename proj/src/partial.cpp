#include "qschubert/partial.hpp"

#include "qschubert/memo.hpp"
#include "qschubert/universal.hpp"

#include <stdexcept>

namespace qschubert {

namespace {

void require_in_sn(const Permutation& w, const FlagShape& shape) {
  if (w.size() != shape.ambient() || !in_sn(w, shape))
    throw std::invalid_argument(w.bracketed() + " is not in S^(" + shape.to_string() + ")");
}

Substitution kill_outside(const FlagShape& shape) {
  const IndexSets sets = index_sets(shape);
  Substitution sub;
  for (Variable g : PathAlphabet(shape.ambient()).variables())
    if (!sets.contains({g.first(), g.first() + g.second()})) sub.emplace(g, Polynomial());
  return sub;
}

Polynomial g_or_zero(int i, int j, int n) {
  if (!PathAlphabet(n).admissible(i, j)) return Polynomial();
  return Polynomial(Variable::g(i, j));
}

Polynomial reading(KernelReading r, int l, int j, const FlagShape& shape) {
  const int lo = shape.step(l - 1), mid = shape.step(l), hi = shape.step(l + 1), n = shape.ambient();
  switch (r) {
    case KernelReading::Printed:
      return j < mid - lo ? g_or_zero(lo + 1, j - 1, n) : g_or_zero(hi - j + 1, j - 1, n);
    case KernelReading::ShiftedBoundary:
      return j <= mid - lo ? g_or_zero(lo + 1, j - 1, n) : g_or_zero(hi - j + 1, j - 1, n);
    case KernelReading::UpperBlock:
      return j < hi - mid ? g_or_zero(mid + 1, j - 1, n) : g_or_zero(hi - j + 1, j - 1, n);
  }
  return Polynomial();
}

Presentation partial_presentation(const FlagShape& shape, bool quantum) {
  Presentation p;
  p.n = shape.ambient();
  p.generators = sigma_generators(shape);
  if (quantum)
    for (int l = 1; l <= shape.step_count(); ++l) p.q_grades.push_back(shape.q_grade(l));
  for (const auto& r : partial_relations(shape)) p.relations.push_back(quantum ? r : set_q_zero(r));
  p.labels = sn_elements(shape);
  for (const auto& w : p.labels) {
    const Polynomial& b = partial_quantum_schubert(w, shape);
    p.basis.push_back(quantum ? b : set_q_zero(b));
  }
  return p;
}

}  // namespace

IndexSets index_sets(const FlagShape& shape) {
  IndexSets out;
  for (int l = 1; l <= shape.step_count() + 1; ++l) {
    const int i = shape.step(l - 1) + 1;
    for (int j = i; j <= shape.step(l); ++j) out.sigma.emplace(i, j);
    for (int a = 1; a <= shape.step(l); ++a) out.q.emplace(a, shape.step(l));
  }
  return out;
}

Polynomial tilde_E(int k, int l, const FlagShape& shape) {
  if (l < 1 || l > shape.step_count() + 1) throw std::invalid_argument("tilde_E: block index out of range");
  if (k == 0) return Polynomial(1);
  return substitute(path_poly(k, shape.step(l)), kill_outside(shape));
}

Substitution sigma_q_substitution(const FlagShape& shape) {
  Substitution sub;
  for (Variable g : PathAlphabet(shape.ambient()).variables()) sub.emplace(g, Polynomial());
  const int m = shape.step_count();
  for (int l = 1; l <= m + 1; ++l) {
    const int i = shape.step(l - 1) + 1;
    for (int j = 1; j <= shape.block_size(l); ++j) sub[Variable::g(i, j - 1)] = Polynomial(Variable::sigma(j, l));
    if (l <= m) {
      const int sign_exp = shape.step(l + 1) - shape.step(l) - 1;
      const Polynomial q(Variable::q(l));
      sub[Variable::g(i, shape.q_grade(l) - 1)] = sign_exp % 2 == 0 ? q : -q;
    }
  }
  return sub;
}

Polynomial partial_universal_schubert_c(const Permutation& w, const FlagShape& shape) {
  require_in_sn(w, shape);
  const Polynomial& full = universal_schubert_c(w);
  Substitution sub;
  for (Variable v : full.variables()) {
    if (v.kind() != VarKind::C) continue;
    int k = 0;
    while (k + 1 <= shape.step_count() + 1 && shape.step(k + 1) <= v.second()) ++k;
    sub.emplace(v, c_value(v.first(), shape.step(k)));
  }
  return substitute(full, sub);
}

const Polynomial& partial_quantum_schubert(const Permutation& w, const FlagShape& shape) {
  static MemoTable<std::pair<std::string, Permutation>, Polynomial> memo;
  return memo.get({shape.to_string(), w}, [&] {
    const Polynomial c_form = partial_universal_schubert_c(w, shape);
    Substitution to_g;
    for (Variable v : c_form.variables()) {
      int l = 0;
      for (int t = 1; t <= shape.step_count() + 1; ++t)
        if (shape.step(t) == v.second()) l = t;
      if (l == 0) throw std::logic_error("partial_quantum_schubert: stray variable " + v.to_string());
      to_g.emplace(v, tilde_E(v.first(), l, shape));
    }
    return substitute(substitute(c_form, to_g), sigma_q_substitution(shape));
  });
}

std::vector<Polynomial> partial_relations(const FlagShape& shape) {
  const Substitution sub = sigma_q_substitution(shape);
  std::vector<Polynomial> out;
  for (int k = 1; k <= shape.ambient(); ++k)
    out.push_back(substitute(tilde_E(k, shape.step_count() + 1, shape), sub));
  return out;
}

std::vector<Variable> sigma_generators(const FlagShape& shape) {
  std::vector<Variable> out;
  for (int l = 1; l <= shape.step_count() + 1; ++l)
    for (int i = 1; i <= shape.block_size(l); ++i) out.push_back(Variable::sigma(i, l));
  return out;
}

PartialRing::PartialRing(const FlagShape& shape)
    : shape_(shape), quantum_(partial_presentation(shape, true)), classical_(partial_presentation(shape, false)) {}

void PartialRing::check(const Permutation& w) const { require_in_sn(w, shape_); }

QuantumClass PartialRing::multiply(const QuantumClass& c, const Permutation& w) const {
  check(w);
  return quantum_.act(partial_quantum_schubert(w, shape_), c);
}

QuantumClass PartialRing::quantum_product(const Permutation& u, const Permutation& v) const {
  check(u);
  check(v);
  if (partial_quantum_schubert(u, shape_).size() <= partial_quantum_schubert(v, shape_).size())
    return multiply(quantum_.unit(v), u);
  return multiply(quantum_.unit(u), v);
}

QuantumClass PartialRing::quantum_product_multi(std::span<const Permutation> ws) const {
  if (ws.empty()) throw std::invalid_argument("quantum_product_multi: empty sequence");
  check(ws.front());
  QuantumClass acc = quantum_.unit(ws.front());
  for (std::size_t i = 1; i < ws.size(); ++i) acc = multiply(acc, ws[i]);
  return acc;
}

Integer PartialRing::gromov_witten(std::span<const Permutation> ws, const Permutation& w,
                                   const MultiDegree& d) const {
  check(w);
  if (ws.empty() || d.size() != shape_.step_count()) return 0;
  int total = w.length();
  for (const auto& u : ws) total += u.length();
  int expected = shape_.dimension();
  for (int l = 1; l <= shape_.step_count(); ++l) expected += d[l - 1] * shape_.q_grade(l);
  if (total != expected) return 0;
  return quantum_product_multi(ws).coefficient(d, dual(w, shape_));
}

QuantumClass PartialRing::classical_product(const Permutation& u, const Permutation& v) const {
  check(u);
  check(v);
  const QuantumClass c = classical_.act(set_q_zero(partial_quantum_schubert(u, shape_)), classical_.unit(v));
  const int m = shape_.step_count();
  QuantumClass out(shape_.ambient(), m);
  for (const auto& [key, coeff] : c.terms()) out.add(MultiDegree::zero(m), key.second, coeff);
  return out;
}

const PartialRing& partial_ring(const FlagShape& shape) {
  static MemoTable<std::string, std::unique_ptr<PartialRing>> rings;
  return *rings.get(shape.to_string(), [&] { return std::make_unique<PartialRing>(shape); });
}

QuantumClass partial_quantum_product(const Permutation& u, const Permutation& v, const FlagShape& shape) {
  return partial_ring(shape).quantum_product(u, v);
}

Integer partial_gw(std::span<const Permutation> ws, const Permutation& w, const MultiDegree& d,
                   const FlagShape& shape) {
  return partial_ring(shape).gromov_witten(ws, w, d);
}

std::string to_string(KernelReading r) {
  switch (r) {
    case KernelReading::Printed:
      return "printed";
    case KernelReading::ShiftedBoundary:
      return "shifted-boundary";
    case KernelReading::UpperBlock:
      return "upper-block";
  }
  return "?";
}

KernelChernPartialReport kernel_chern_partial_check(int l, const FlagShape& shape) {
  if (l < 1 || l > shape.step_count())
    throw std::invalid_argument("kernel_chern_partial_check: needs 1 <= l <= m");
  const int top = shape.q_grade(l);

  // Graded pieces 0..top of c(E_l), its inverse, and c(E_{l+1}).
  std::vector<Polynomial> lower(static_cast<std::size_t>(top + 1)), upper(lower.size()), inv(lower.size());
  for (int k = 0; k <= top; ++k) {
    lower[static_cast<std::size_t>(k)] = k <= shape.step(l) ? tilde_E(k, l, shape) : Polynomial();
    upper[static_cast<std::size_t>(k)] = k <= shape.step(l + 1) ? tilde_E(k, l + 1, shape) : Polynomial();
  }
  inv[0] = Polynomial(1);
  for (int t = 1; t <= top; ++t)
    for (int s = 1; s <= t; ++s)
      inv[static_cast<std::size_t>(t)] -= lower[static_cast<std::size_t>(s)] * inv[static_cast<std::size_t>(t - s)];

  const Substitution sub = sigma_q_substitution(shape);
  KernelChernPartialReport report;
  for (int j = 1; j <= top; ++j) {
    Polynomial cj;
    for (int s = 0; s <= j; ++s) cj += upper[static_cast<std::size_t>(j - s)] * inv[static_cast<std::size_t>(s)];
    report.kernel.push_back(substitute(cj, sub));
  }
  for (KernelReading r : {KernelReading::Printed, KernelReading::ShiftedBoundary, KernelReading::UpperBlock}) {
    bool all = true;
    for (int j = 1; j <= top; ++j) {
      if (substitute(reading(r, l, j, shape), sub) == report.kernel[static_cast<std::size_t>(j - 1)]) continue;
      all = false;
      if (r == KernelReading::Printed && report.printed_mismatch < 0) report.printed_mismatch = j;
    }
    if (all) report.matching.push_back(r);
    if (all && r == KernelReading::UpperBlock) report.holds = true;
  }
  return report;
}

}  // namespace qschubert
