#pragma once

// Exact sparse linear algebra over Q for graded slices of polynomial rings.

#include "qschubert/poly.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschubert {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Row echelon form with unit pivots. Each stored row may carry a
/// combination vector recording how it was built from the inserted rows.
class Echelon {
 public:
  Echelon(int columns, int tracked = 0);

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces and stores `row`. `combination` describes `row` in terms of
  /// the tracked coordinates. Returns false when `row` was dependent.
  bool insert(const SparseRow& row, const SparseRow& combination = {});

  struct Reduction {
    SparseRow residual;
    /// row = residual + sum(combination[i] * tracked_i).
    std::vector<Rational> combination;
  };
  Reduction reduce(const SparseRow& row) const;

 private:
  struct Stored {
    SparseRow row;
    SparseRow combination;
  };
  void reduce_dense(std::vector<Rational>& acc, std::vector<Rational>* comb) const;

  int columns_;
  int tracked_;
  std::vector<int> pivot_of_column_;  // -1 when free
  std::vector<Stored> rows_;
};

enum class ExpansionErrorKind { NoSolution, NonIntegral, RankMismatch };

class ExpansionError : public std::runtime_error {
 public:
  ExpansionError(ExpansionErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ExpansionErrorKind kind() const { return kind_; }

 private:
  ExpansionErrorKind kind_;
};

struct LinearExpansion {
  std::vector<Integer> coefficients;
  /// The generators were linearly dependent; the canonical echelon
  /// solution (dependent generators get 0) was returned.
  bool dependent = false;
};

/// Integer c with target == sum c_i * generators[i]. Throws ExpansionError
/// (NoSolution or NonIntegral).
LinearExpansion solve_linear_expansion(const Polynomial& target,
                                       std::span<const Polynomial> generators);

/// Maps monomials to dense column indices, largest monomial first.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  int size() const { return static_cast<int>(monomials_.size()); }
  /// -1 when absent.
  int find(const Monomial& m) const;
  const Monomial& at(int column) const { return monomials_[static_cast<std::size_t>(column)]; }

  /// Throws std::out_of_range when `p` has a monomial outside the index.
  SparseRow row(const Polynomial& p) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, int> lookup_;
};

/// Every monomial in `vars` of exactly `grade` under `grading`.
std::vector<Monomial> monomials_of_grade(std::span<const Variable> vars, int grade,
                                         const Grading& grading);

}  // namespace qschubert
