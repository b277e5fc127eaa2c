#include "qschubert/schubert.hpp"

#include "qschubert/linear.hpp"
#include "qschubert/memo.hpp"

#include <functional>
#include <stdexcept>

namespace qschubert {

Polynomial divided_difference(const Polynomial& p, int i) {
  if (i < 1) throw std::invalid_argument("divided_difference: index must be >= 1");
  if (!p.uses_only({VarKind::X}))
    throw std::invalid_argument("divided_difference: polynomial must be in x-variables only");
  const Variable xi = Variable::x(i), xj = Variable::x(i + 1);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int a = m.exponent(xi), b = m.exponent(xj);
    if (a == b) continue;
    const Monomial rest = m.without(xi).without(xj);
    // (x_i^a x_j^b - x_i^b x_j^a) / (x_i - x_j)
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Integer sign = a > b ? Integer(c) : Integer(-c);
    for (int t = 0; t < hi - lo; ++t) {
      Monomial piece = rest * Monomial(xi, hi - 1 - t) * Monomial(xj, lo + t);
      out.add_term(piece, sign);
    }
  }
  return out;
}

Polynomial staircase_monomial(int n) {
  std::vector<Monomial::Factor> f;
  for (int i = 1; i < n; ++i) f.emplace_back(Variable::x(i), n - i);
  return Polynomial(Monomial(std::move(f)), Integer(1));
}

Polynomial schubert_poly_from_word(int n, std::span<const int> word) {
  Polynomial p = staircase_monomial(n);
  for (int i : word) p = divided_difference(p, i);
  return p;
}

const Polynomial& schubert_poly(const Permutation& w) {
  static MemoTable<Permutation, Polynomial> memo;
  return memo.get(w, [&] {
    if (w.is_identity()) return Polynomial(1);
    // Peel one step off the canonical word: S_w = d_{i_k} S_{w s_{i_k}}.
    const auto word = reduced_word(w);
    if (word.empty()) return staircase_monomial(w.size());
    const int last = word.back();
    return divided_difference(schubert_poly(w.swap_positions(last)), last);
  });
}

Polynomial elementary_poly(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("elementary_poly: negative index");
  if (k == 0) return Polynomial(1);
  if (k > l) return Polynomial();
  Polynomial out;
  std::vector<Monomial::Factor> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.add_term(Monomial(cur), Integer(1));
      return;
    }
    for (int i = start; i <= l - left + 1; ++i) {
      cur.emplace_back(Variable::x(i), 1);
      rec(i + 1, left - 1);
      cur.pop_back();
    }
  };
  rec(1, k);
  return out;
}

std::vector<BlockSequence> block_sequences(int n, int total) {
  std::vector<BlockSequence> out;
  BlockSequence cur(static_cast<std::size_t>(std::max(n - 1, 0)), 0);
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int k = 0; k <= std::min(p, left); ++k) {
      cur[static_cast<std::size_t>(p - 1)] = k;
      rec(p + 1, left - k);
    }
    cur[static_cast<std::size_t>(p - 1)] = 0;
  };
  rec(1, total);
  return out;
}

std::string EDecomposition::to_string() const {
  std::string out;
  for (const auto& [k, a] : coeffs) {
    std::string line = a.str() + " ·";
    bool any = false;
    for (std::size_t p = 0; p < k.size(); ++p) {
      if (k[p] == 0) continue;
      line += (any ? "·" : " ") + std::string("e_") + std::to_string(k[p]) + "(" + std::to_string(p + 1) + ")";
      any = true;
    }
    if (!any) line += " 1";
    out += line + "\n";
  }
  return out;
}

const EDecomposition& e_decomposition(const Permutation& w) {
  static MemoTable<Permutation, EDecomposition> memo;
  return memo.get(w, [&] {
    const int n = w.size();
    const auto sequences = block_sequences(n, w.length());
    std::vector<Polynomial> gens;
    gens.reserve(sequences.size());
    for (const auto& k : sequences) {
      Polynomial g(1);
      for (std::size_t p = 0; p < k.size(); ++p) g *= elementary_poly(k[p], static_cast<int>(p) + 1);
      gens.push_back(std::move(g));
    }
    const Polynomial& target = schubert_poly(w);
    const LinearExpansion sol = solve_linear_expansion(target, gens);
    EDecomposition dec{n, w, {}};
    for (std::size_t i = 0; i < sequences.size(); ++i)
      if (sol.coefficients[i] != 0) dec.coeffs.emplace(sequences[i], sol.coefficients[i]);
    if (dec.recombine(elementary_poly) != target)
      throw ExpansionError(ExpansionErrorKind::NoSolution,
                           "e-decomposition of " + w.bracketed() + " does not recombine");
    return dec;
  });
}

}  // namespace qschubert
