#pragma once

// A graded ring Z[generators, q] / (relations) with a homogeneous basis
// {q^d * b_w}, handled slice by slice with exact linear algebra.

#include "qschubert/linear.hpp"
#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"
#include "qschubert/quantum_class.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace qschubert {

struct Presentation {
  /// Permutation size of the basis labels.
  int n = 0;
  /// Ring generators (x_i or sigma_i^j); q-variables are implicit.
  std::vector<Variable> generators;
  /// Grade of q_l is q_grades[l-1]; the length is the number of q's.
  std::vector<int> q_grades;
  /// Homogeneous generators of the ideal.
  std::vector<Polynomial> relations;
  /// Basis labels in lexicographic order and their representatives; the
  /// representative of w must be homogeneous of grade length(w).
  std::vector<Permutation> labels;
  std::vector<Polynomial> basis;
};

class QuotientEngine {
 public:
  explicit QuotientEngine(Presentation p);
  ~QuotientEngine();
  QuotientEngine(const QuotientEngine&) = delete;
  QuotientEngine& operator=(const QuotientEngine&) = delete;

  const Presentation& presentation() const { return p_; }
  const Grading& grading() const { return grading_; }
  int q_count() const { return static_cast<int>(p_.q_grades.size()); }
  int basis_index(const Permutation& w) const;

  /// Number of basis keys (d, w) with length(w) + sum d_l * grade(q_l) == grade.
  int slice_dimension(int grade) const;

  /// Coefficients of p in the basis modulo the ideal, solved per grade
  /// over basis keys and ideal multipliers together. Throws ExpansionError.
  QuantumClass expand(const Polynomial& p) const;

  /// generator * b_w in the basis (cached).
  const QuantumClass& multiply_generator(int generator, int basis) const;

  /// p(generators, q) * c, through the generator multiplication maps.
  QuantumClass act(const Polynomial& p, const QuantumClass& c) const;

  QuantumClass zero() const { return QuantumClass(p_.n, q_count()); }
  QuantumClass unit(const Permutation& w) const { return QuantumClass::basis(w, q_count()); }

 private:
  struct Slice;
  const Slice& slice(int grade) const;
  std::unique_ptr<Slice> build_slice(int grade) const;

  Presentation p_;
  Grading grading_;
  // A generator solved for from a grade-1 relation is substituted away
  // before any slice is built; the slices use the reduced data below.
  Substitution elimination_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> basis_;
  std::vector<Variable> all_vars_;
  std::vector<int> relation_grades_;
  std::map<Variable, int> generator_index_;
  std::map<Permutation, int> label_index_;

  mutable std::mutex slice_mutex_;
  mutable std::map<int, std::unique_ptr<Slice>> slices_;
  mutable std::mutex op_mutex_;
  mutable std::map<std::pair<int, int>, QuantumClass> ops_;
};

}  // namespace qschubert
