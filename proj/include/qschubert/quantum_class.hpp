#pragma once

#include "qschubert/perm.hpp"
#include "qschubert/poly.hpp"

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>

namespace qschubert {

/// An element of a quantum cohomology ring written in the Schubert basis
/// over Z[q]: a finite sum of coeff * q^d * sigma_w.
class QuantumClass {
 public:
  using Key = std::pair<MultiDegree, Permutation>;
  using Terms = std::map<Key, Integer>;

  QuantumClass() = default;
  /// `q_count` is the length of every multidegree key.
  QuantumClass(int n, int q_count) : n_(n), q_count_(q_count) {}
  /// The class 1 * sigma_w.
  static QuantumClass basis(const Permutation& w, int q_count);

  int n() const { return n_; }
  int q_count() const { return q_count_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const MultiDegree& d, const Permutation& w) const;
  void add(const MultiDegree& d, const Permutation& w, const Integer& c);
  /// this += scale * q^shift * other
  void add_scaled(const QuantumClass& other, const Integer& scale, const MultiDegree& shift);

  /// The d = 0 slice.
  QuantumClass classical_part() const;

  /// "σ[3,1,2] + q1·σ[1,2,3]"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const QuantumClass&, const QuantumClass&) = default;

 private:
  int n_ = 0;
  int q_count_ = 0;
  Terms terms_;
};

/// {"n": n, "terms": [{"d": [..], "w": "3,1,2", "coeff": 1}]}
nlohmann::json to_json(const QuantumClass& c);
/// `q_count` < 0 infers it from the first term, or n - 1 when there is none.
QuantumClass quantum_class_from_json(const nlohmann::json& j, int q_count = -1);

}  // namespace qschubert
