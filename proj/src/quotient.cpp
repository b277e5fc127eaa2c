#include "qschubert/quotient.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qschubert {

struct QuotientEngine::Slice {
  MonomialIndex index;
  Echelon ideal;
  Echelon basis;
  std::vector<std::pair<MultiDegree, int>> keys;
};

QuotientEngine::QuotientEngine(Presentation p) : p_(std::move(p)), grading_(p_.q_grades) {
  if (p_.labels.size() != p_.basis.size())
    throw std::invalid_argument("presentation: labels and basis differ in size");
  for (std::size_t i = 0; i < p_.generators.size(); ++i)
    generator_index_.emplace(p_.generators[i], static_cast<int>(i));
  for (std::size_t i = 0; i < p_.labels.size(); ++i) {
    label_index_.emplace(p_.labels[i], static_cast<int>(i));
    const auto grades = p_.basis[i].grades(grading_);
    if (grades.size() != 1 || *grades.begin() != p_.labels[i].length())
      throw std::invalid_argument("presentation: basis element " + p_.labels[i].bracketed() +
                                  " is not homogeneous of its length");
  }
  for (const auto& r : p_.relations)
    if (r.grades(grading_).size() != 1) throw std::invalid_argument("presentation: relation is not homogeneous");

  // Solve a grade-1 relation for the last generator with a unit coefficient.
  for (const auto& r : p_.relations) {
    if (*r.grades(grading_).begin() != 1 || !elimination_.empty()) continue;
    for (auto it = p_.generators.rbegin(); it != p_.generators.rend(); ++it) {
      const Integer c = r.coefficient(Monomial(*it));
      if (c != 1 && c != -1) continue;
      Polynomial rest = r - Polynomial(Monomial(*it), c);
      if (rest.variables().contains(*it)) continue;
      elimination_.emplace(*it, scalar_mul(rest, Integer(-c)));
      break;
    }
  }
  for (Variable v : p_.generators)
    if (!elimination_.contains(v)) all_vars_.push_back(v);
  for (int l = 1; l <= q_count(); ++l) all_vars_.push_back(Variable::q(l));
  for (const auto& r : p_.relations) {
    Polynomial reduced = substitute(r, elimination_);
    if (reduced.is_zero()) continue;
    relation_grades_.push_back(*reduced.grades(grading_).begin());
    relations_.push_back(std::move(reduced));
  }
  for (const auto& b : p_.basis) basis_.push_back(substitute(b, elimination_));
}

QuotientEngine::~QuotientEngine() = default;

int QuotientEngine::basis_index(const Permutation& w) const {
  auto it = label_index_.find(w);
  if (it == label_index_.end()) throw std::invalid_argument(w.bracketed() + " is not a basis label");
  return it->second;
}

int QuotientEngine::slice_dimension(int grade) const {
  int count = 0;
  for (const auto& w : p_.labels)
    count += static_cast<int>(weighted_compositions(p_.q_grades, grade - w.length()).size());
  return count;
}

std::unique_ptr<QuotientEngine::Slice> QuotientEngine::build_slice(int grade) const {
  MonomialIndex index(monomials_of_grade(all_vars_, grade, grading_));
  const int columns = index.size();

  Echelon ideal(columns);
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (const Monomial& m : monomials_of_grade(all_vars_, grade - relation_grades_[r], grading_))
      ideal.insert(index.row(Polynomial(m, Integer(1)) * relations_[r]));

  std::vector<std::pair<MultiDegree, int>> keys;
  for (std::size_t i = 0; i < p_.labels.size(); ++i)
    for (const auto& d : weighted_compositions(p_.q_grades, grade - p_.labels[i].length()))
      keys.emplace_back(d, static_cast<int>(i));
  std::sort(keys.begin(), keys.end());

  Echelon basis(columns, static_cast<int>(keys.size()));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto& [d, i] = keys[k];
    std::vector<Monomial::Factor> qs;
    for (int l = 0; l < d.size(); ++l) qs.emplace_back(Variable::q(l + 1), d[l]);
    const Polynomial element = Polynomial(Monomial(std::move(qs)), Integer(1)) * basis_[static_cast<std::size_t>(i)];
    const auto reduced = ideal.reduce(index.row(element));
    if (!basis.insert(reduced.residual, SparseRow{{static_cast<int>(k), Rational(1)}}))
      throw ExpansionError(ExpansionErrorKind::RankMismatch,
                           "grade " + std::to_string(grade) + ": basis key q^" + d.to_string() + "·" +
                               p_.labels[static_cast<std::size_t>(i)].bracketed() +
                               " is dependent modulo the ideal");
  }
  if (ideal.rank() + static_cast<int>(keys.size()) != columns)
    throw ExpansionError(ExpansionErrorKind::RankMismatch,
                         "grade " + std::to_string(grade) + ": ideal rank " + std::to_string(ideal.rank()) +
                             " + " + std::to_string(keys.size()) + " basis keys != " +
                             std::to_string(columns) + " monomials");
  return std::make_unique<Slice>(Slice{std::move(index), std::move(ideal), std::move(basis), std::move(keys)});
}

const QuotientEngine::Slice& QuotientEngine::slice(int grade) const {
  {
    std::lock_guard lock(slice_mutex_);
    auto it = slices_.find(grade);
    if (it != slices_.end()) return *it->second;
  }
  auto built = build_slice(grade);
  std::lock_guard lock(slice_mutex_);
  return *slices_.try_emplace(grade, std::move(built)).first->second;
}

QuantumClass QuotientEngine::expand(const Polynomial& p) const {
  for (Variable v : p.variables())
    if (v.kind() != VarKind::Q && !generator_index_.contains(v))
      throw std::invalid_argument("expand: " + v.to_string() + " is not a ring generator");
  const Polynomial reduced = substitute(p, elimination_);
  QuantumClass out = zero();
  for (int grade : reduced.grades(grading_)) {
    const Polynomial part = homogeneous_component(reduced, grade, grading_);
    const Slice& s = slice(grade);
    const auto modulo_ideal = s.ideal.reduce(s.index.row(part));
    const auto solved = s.basis.reduce(modulo_ideal.residual);
    if (!solved.residual.empty())
      throw ExpansionError(ExpansionErrorKind::NoSolution,
                           "grade " + std::to_string(grade) + " component of " + part.to_string() +
                               " is not in the span of the basis");
    for (std::size_t k = 0; k < s.keys.size(); ++k) {
      const Rational& v = solved.combination[k];
      if (v == 0) continue;
      if (denominator(v) != 1)
        throw ExpansionError(ExpansionErrorKind::NonIntegral,
                             "non-integral coefficient " + v.str() + " expanding " + part.to_string());
      out.add(s.keys[k].first, p_.labels[static_cast<std::size_t>(s.keys[k].second)], numerator(v));
    }
  }
  return out;
}

const QuantumClass& QuotientEngine::multiply_generator(int generator, int basis) const {
  const auto key = std::make_pair(generator, basis);
  {
    std::lock_guard lock(op_mutex_);
    auto it = ops_.find(key);
    if (it != ops_.end()) return it->second;
  }
  QuantumClass value = expand(Polynomial(p_.generators[static_cast<std::size_t>(generator)]) *
                              p_.basis[static_cast<std::size_t>(basis)]);
  std::lock_guard lock(op_mutex_);
  return ops_.try_emplace(key, std::move(value)).first->second;
}

QuantumClass QuotientEngine::act(const Polynomial& p, const QuantumClass& c) const {
  std::map<Monomial, QuantumClass> memo;
  std::function<const QuantumClass&(const Monomial&)> apply = [&](const Monomial& m) -> const QuantumClass& {
    if (m.is_one()) return c;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const Variable v = m.factors().front().first;
    const int gen = generator_index_.at(v);
    const QuantumClass& inner = apply(*m.divide(Monomial(v)));
    QuantumClass out = zero();
    for (const auto& [key, coeff] : inner.terms())
      out.add_scaled(multiply_generator(gen, label_index_.at(key.second)), coeff, key.first);
    return memo.emplace(m, std::move(out)).first->second;
  };

  QuantumClass result = zero();
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<Monomial::Factor> gens;
    std::vector<int> d(static_cast<std::size_t>(q_count()), 0);
    for (const auto& [v, e] : m.factors()) {
      if (v.kind() == VarKind::Q && v.first() >= 1 && v.first() <= q_count())
        d[static_cast<std::size_t>(v.first() - 1)] = e;
      else if (generator_index_.contains(v))
        gens.emplace_back(v, e);
      else
        throw std::invalid_argument("act: " + v.to_string() + " is not a ring generator");
    }
    result.add_scaled(apply(Monomial(std::move(gens))), coeff, MultiDegree(std::move(d)));
  }
  return result;
}

}  // namespace qschubert
