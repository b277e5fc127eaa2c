#include "qschubert/linear.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qschubert {

namespace {

SparseRow to_sparse(const std::vector<Rational>& dense) {
  SparseRow out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

}  // namespace

Echelon::Echelon(int columns, int tracked)
    : columns_(columns), tracked_(tracked), pivot_of_column_(static_cast<std::size_t>(columns), -1) {}

void Echelon::reduce_dense(std::vector<Rational>& acc, std::vector<Rational>* comb) const {
  // Stored rows only have entries at or right of their pivot, so a single
  // left-to-right sweep clears every pivot column.
  for (int c = 0; c < columns_; ++c) {
    if (acc[static_cast<std::size_t>(c)] == 0) continue;
    const int r = pivot_of_column_[static_cast<std::size_t>(c)];
    if (r < 0) continue;
    const Rational factor = acc[static_cast<std::size_t>(c)];
    const Stored& s = rows_[static_cast<std::size_t>(r)];
    for (const auto& [col, v] : s.row) acc[static_cast<std::size_t>(col)] -= factor * v;
    if (comb)
      for (const auto& [i, v] : s.combination) (*comb)[static_cast<std::size_t>(i)] -= factor * v;
  }
}

bool Echelon::insert(const SparseRow& row, const SparseRow& combination) {
  std::vector<Rational> acc(static_cast<std::size_t>(columns_));
  for (const auto& [c, v] : row) acc[static_cast<std::size_t>(c)] = v;
  std::vector<Rational> comb;
  if (tracked_ > 0) {
    comb.assign(static_cast<std::size_t>(tracked_), Rational(0));
    for (const auto& [i, v] : combination) comb[static_cast<std::size_t>(i)] = v;
  }
  reduce_dense(acc, tracked_ > 0 ? &comb : nullptr);
  auto lead = std::find_if(acc.begin(), acc.end(), [](const Rational& v) { return v != 0; });
  if (lead == acc.end()) return false;
  const int pivot = static_cast<int>(lead - acc.begin());
  const Rational scale = 1 / *lead;
  for (auto& v : acc) v *= scale;
  for (auto& v : comb) v *= scale;
  pivot_of_column_[static_cast<std::size_t>(pivot)] = rank();
  rows_.push_back({to_sparse(acc), to_sparse(comb)});
  return true;
}

Echelon::Reduction Echelon::reduce(const SparseRow& row) const {
  std::vector<Rational> acc(static_cast<std::size_t>(columns_));
  for (const auto& [c, v] : row) acc[static_cast<std::size_t>(c)] = v;
  std::vector<Rational> comb(static_cast<std::size_t>(tracked_));
  reduce_dense(acc, &comb);
  for (auto& v : comb) v = -v;
  return {to_sparse(acc), std::move(comb)};
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end(), std::greater<>());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], static_cast<int>(i));
}

int MonomialIndex::find(const Monomial& m) const {
  auto it = lookup_.find(m);
  return it == lookup_.end() ? -1 : it->second;
}

SparseRow MonomialIndex::row(const Polynomial& p) const {
  SparseRow out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    const int col = find(m);
    if (col < 0) throw std::out_of_range("monomial " + m.to_string() + " outside the column index");
    out.emplace_back(col, Rational(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

LinearExpansion solve_linear_expansion(const Polynomial& target,
                                       std::span<const Polynomial> generators) {
  std::vector<Monomial> monos;
  for (const auto& [m, c] : target.terms()) monos.push_back(m);
  for (const auto& g : generators)
    for (const auto& [m, c] : g.terms()) monos.push_back(m);
  MonomialIndex index(std::move(monos));

  const int count = static_cast<int>(generators.size());
  Echelon ech(index.size(), count);
  LinearExpansion result;
  for (int i = 0; i < count; ++i) {
    if (!ech.insert(index.row(generators[static_cast<std::size_t>(i)]), SparseRow{{i, Rational(1)}}))
      result.dependent = true;
  }
  auto red = ech.reduce(index.row(target));
  if (!red.residual.empty())
    throw ExpansionError(ExpansionErrorKind::NoSolution,
                         "target " + target.to_string() + " is not in the span of the generators");
  result.coefficients.reserve(generators.size());
  for (const auto& v : red.combination) {
    if (denominator(v) != 1)
      throw ExpansionError(ExpansionErrorKind::NonIntegral,
                           "expansion of " + target.to_string() + " has non-integral coefficient " + v.str());
    result.coefficients.push_back(numerator(v));
  }
  return result;
}

std::vector<Monomial> monomials_of_grade(std::span<const Variable> vars, int grade,
                                         const Grading& grading) {
  std::vector<Monomial> out;
  if (grade < 0) return out;
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (pos == vars.size()) return;
    const int g = grading.grade(vars[pos]);
    for (int e = left / g; e >= 0; --e) {
      if (e > 0) cur.emplace_back(vars[pos], e);
      rec(pos + 1, left - e * g);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, grade);
  return out;
}

}  // namespace qschubert
