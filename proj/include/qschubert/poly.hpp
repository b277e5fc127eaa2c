#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over a tagged, graded alphabet:
//
//   x_i          X(i)          grade 1
//   q_i          Q(i)          grade supplied by a Grading (2 by default)
//   g_i[j]       G(i, j)       grade j + 1
//   c_k(l)       C(k, l)       grade k
//   sigma_i^j    Sigma(i, j)   grade i
//
// Terms are kept in a std::map under a graded lexicographic order with
// X(1) > X(2) > ... > Q(1) > ... > G > C > Sigma, so iteration and text
// rendering are deterministic.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qschubert {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class VarKind : std::uint8_t { X = 0, Q = 1, G = 2, C = 3, Sigma = 4 };

class Variable {
 public:
  static Variable x(int i) { return Variable(VarKind::X, i, 0); }
  static Variable q(int i) { return Variable(VarKind::Q, i, 0); }
  static Variable g(int i, int j) { return Variable(VarKind::G, i, j); }
  static Variable c(int k, int l) { return Variable(VarKind::C, k, l); }
  static Variable sigma(int i, int j) { return Variable(VarKind::Sigma, i, j); }

  Variable(VarKind kind, int first, int second);

  VarKind kind() const { return static_cast<VarKind>(key_ >> 24); }
  int first() const { return static_cast<int>((key_ >> 12) & 0xfffu); }
  int second() const { return static_cast<int>(key_ & 0xfffu); }
  /// Grade with q_i of grade 2.
  int default_grade() const;
  /// Smaller key means larger in the monomial order.
  std::uint32_t key() const { return key_; }

  /// x1, q2, g1[0], c2(3), s1^2
  std::string to_string() const;
  /// "x", "q", "g", "c", "sigma"
  std::string kind_name() const;
  static VarKind kind_from_name(const std::string& name);

  friend bool operator==(Variable, Variable) = default;
  friend auto operator<=>(Variable a, Variable b) { return a.key_ <=> b.key_; }

 private:
  std::uint32_t key_ = 0;
};

/// Grades of the q-variables; every other kind has a fixed grade.
class Grading {
 public:
  /// Complete-flag convention: every q_i has grade 2.
  Grading() = default;
  explicit Grading(std::vector<int> q_grades) : q_grades_(std::move(q_grades)) {}

  int grade(Variable v) const;
  std::span<const int> q_grades() const { return q_grades_; }

 private:
  std::vector<int> q_grades_;
};

class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);
  /// Factors may come in any order; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return {factors_.data(), factors_.size()}; }
  int exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int default_grade() const { return default_grade_; }
  int grade(const Grading& grading) const;

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;
  /// The monomial with the factor of `v` removed.
  Monomial without(Variable v) const;

  /// "x1^2·x2"; "1" for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.default_grade_ == b.default_grade_ && a.factors_ == b.factors_;
  }
  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  boost::container::small_vector<Factor, 4> factors_;
  int default_grade_ = 0;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(int constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Integer constant);
  explicit Polynomial(Variable v);
  Polynomial(Monomial m, Integer coefficient);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  /// The constant term.
  Integer constant_term() const { return coefficient(Monomial()); }

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int exponent) const;

  std::set<Variable> variables() const;
  bool uses_only(std::initializer_list<VarKind> kinds) const;
  /// Grades present in the polynomial; empty for zero.
  std::set<int> grades(const Grading& grading = {}) const;
  bool is_homogeneous(const Grading& grading = {}) const;

  /// Terms from the largest monomial down: "x1^2 − q1", "2·x1·q1 + 1", "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

Polynomial scalar_mul(const Polynomial& p, const Integer& s);

using Substitution = std::map<Variable, Polynomial>;

/// Replaces each assigned variable by its image; others stay fixed.
Polynomial substitute(const Polynomial& p, const Substitution& assignment);

/// Sum of the terms of exactly the given grade.
Polynomial homogeneous_component(const Polynomial& p, int grade, const Grading& grading = {});

/// JSON schema: [{"coeff": "-3", "monomial": [{"kind": "x", "indices": [1], "exp": 2}]}]
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace qschubert
