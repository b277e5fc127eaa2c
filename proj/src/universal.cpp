#include "qschubert/universal.hpp"

#include "qschubert/memo.hpp"
#include "qschubert/schubert.hpp"

#include <functional>
#include <stdexcept>

namespace qschubert {

namespace {

// Covers of x_a..x_b by disjoint paths, keeping those of exactly k vertices.
Polynomial enumerate_covers(int k, int a, int b) {
  Polynomial out;
  std::vector<Monomial::Factor> chosen;
  std::function<void(int, int)> walk = [&](int pos, int left) {
    if (left == 0) {
      out.add_term(Monomial(chosen), Integer(1));
      return;
    }
    if (pos > b || b - pos + 1 < left) return;
    walk(pos + 1, left);  // x_pos uncovered
    for (int j = 0; pos + j <= b && j + 1 <= left; ++j) {
      chosen.emplace_back(Variable::g(pos, j), 1);
      walk(pos + j + 1, left - j - 1);
      chosen.pop_back();
    }
  };
  walk(a, k);
  return out;
}

}  // namespace

PathAlphabet::PathAlphabet(int vertices) : vertices_(vertices) {
  if (vertices < 1) throw std::invalid_argument("PathAlphabet needs at least one vertex");
}

std::vector<Variable> PathAlphabet::variables() const {
  std::vector<Variable> out;
  for (int j = 0; j < vertices_; ++j)
    for (int i = 1; i + j <= vertices_; ++i) out.push_back(Variable::g(i, j));
  return out;
}

const Polynomial& path_poly(int k, int l) {
  static MemoTable<std::pair<int, int>, Polynomial> memo;
  if (k < 0 || l < 0) throw std::invalid_argument("path_poly: negative index");
  return memo.get({k, l}, [&] { return enumerate_covers(k, 1, l); });
}

Polynomial path_poly_range(int i, int a, int b) {
  if (i < 0) throw std::invalid_argument("path_poly_range: negative index");
  if (a < 1) throw std::invalid_argument("path_poly_range: vertices start at 1");
  if (i == 0) return Polynomial(1);
  if (a > b || i > b - a + 1) return Polynomial();
  return enumerate_covers(i, a, b);
}

Polynomial c_value(int k, int l) {
  if (k == 0) return Polynomial(1);
  if (k < 0 || k > l) return Polynomial();
  return Polynomial(Variable::c(k, l));
}

const Polynomial& g_from_c(int i, int j) {
  static MemoTable<std::pair<int, int>, Polynomial> memo;
  if (i < 1 || j < 0) throw std::invalid_argument("g_from_c: needs i >= 1, j >= 0");
  return memo.get({i, j}, [&] {
    // Isolate the bare path in E_{j+1}(i+j):
    //   E_k(l) = E_k(l-1) + sum_{t=0}^{k-1} E_{k-t-1}(l-t-1) g_{l-t}[t]
    // with k = j+1, l = i+j; the t = j summand is g_i[j] itself.
    const int k = j + 1, l = i + j;
    Polynomial out = c_value(k, l) - c_value(k, l - 1);
    for (int t = 0; t < j; ++t) out -= c_value(k - t - 1, l - t - 1) * g_from_c(l - t, t);
    return out;
  });
}

Polynomial c_to_g(const Polynomial& p) {
  Substitution sub;
  for (Variable v : p.variables())
    if (v.kind() == VarKind::C) sub.emplace(v, path_poly(v.first(), v.second()));
  return substitute(p, sub);
}

const Polynomial& universal_schubert_c(const Permutation& w) {
  static MemoTable<Permutation, Polynomial> memo;
  return memo.get(w, [&] { return e_decomposition(w).recombine(c_value); });
}

const Polynomial& universal_schubert_g(const Permutation& w) {
  static MemoTable<Permutation, Polynomial> memo;
  return memo.get(w, [&] { return c_to_g(universal_schubert_c(w)); });
}

Polynomial specialize_quantum(const Polynomial& p) {
  Substitution sub;
  for (Variable v : p.variables()) {
    if (v.kind() != VarKind::G) continue;
    const int i = v.first(), j = v.second();
    if (j == 0)
      sub.emplace(v, Polynomial(Variable::x(i)));
    else if (j == 1)
      sub.emplace(v, Polynomial(Variable::q(i)));
    else
      sub.emplace(v, Polynomial());
  }
  return substitute(p, sub);
}

Polynomial set_q_zero(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    bool has_q = false;
    for (const auto& f : m.factors()) has_q = has_q || f.first.kind() == VarKind::Q;
    if (!has_q) out.add_term(m, c);
  }
  return out;
}

Polynomial specialize_classical(const Polynomial& p) { return set_q_zero(specialize_quantum(p)); }

const Polynomial& quantum_e(int k, int l) {
  static MemoTable<std::pair<int, int>, Polynomial> memo;
  return memo.get({k, l}, [&] { return specialize_quantum(path_poly(k, l)); });
}

const Polynomial& quantum_schubert(const Permutation& w) {
  static MemoTable<Permutation, Polynomial> memo;
  return memo.get(w, [&] {
    return e_decomposition(w).recombine([](int k, int l) -> const Polynomial& { return quantum_e(k, l); });
  });
}

KernelChernReport kernel_chern_check(int k, int l) {
  if (k < 1 || l < k) throw std::invalid_argument("kernel_chern_check: needs 1 <= k <= l");
  Substitution kill;
  for (int i = 1; i <= k; ++i)
    for (int end = k + 1; end <= l; ++end) kill.emplace(Variable::g(i, end - i), Polynomial());

  Polynomial total_k, total_rest, total_l;
  for (int i = 0; i <= k; ++i) total_k += path_poly(i, k);
  for (int i = 0; i <= l - k; ++i) total_rest += path_poly_range(i, k + 1, l);
  for (int i = 0; i <= l; ++i) total_l += path_poly(i, l);

  KernelChernReport report;
  const Polynomial lhs = substitute(total_k * total_rest, kill);
  const Polynomial rhs = substitute(total_l, kill);
  for (int grade = 0; grade <= l; ++grade) {
    Polynomial a = homogeneous_component(lhs, grade), b = homogeneous_component(rhs, grade);
    if (a != b) {
      report.holds = false;
      report.bad_grade = grade;
      report.lhs = std::move(a);
      report.rhs = std::move(b);
      return report;
    }
  }
  if (lhs != rhs) report.holds = false;
  return report;
}

}  // namespace qschubert
