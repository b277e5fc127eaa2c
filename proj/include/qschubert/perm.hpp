#pragma once

// Permutations of S_n in one-line notation, partial flag shapes and
// multidegrees, plus the small combinatorial helpers used across the
// library. Everything here is 1-indexed.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qschubert {

/// An element of S_n stored in one-line notation: images()[i-1] == w(i).
class Permutation {
 public:
  /// Identity in S_n.
  static Permutation identity(int n);
  /// w_0 with w_0(i) = n - i + 1.
  static Permutation longest_element(int n);
  /// Simple transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation transposition(int n, int i);
  /// Parses "2,4,1,3". Throws std::invalid_argument on malformed input.
  static Permutation parse(std::string_view text);

  Permutation() = default;
  /// Validates that `images` is a permutation of {1..n}.
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  int length() const;
  bool is_identity() const;

  /// Same permutation viewed in S_m, m >= n, fixing n+1..m.
  Permutation embed(int m) const;
  /// Right multiplication by s_i: swaps the entries at positions i and i+1.
  Permutation swap_positions(int i) const;

  /// "2,4,1,3"
  std::string to_string() const;
  /// "[2,4,1,3]"
  std::string bracketed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// (u o v)(i) = u(v(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
/// w^dual = w_0 o w.
Permutation dual(const Permutation& w);

/// #{i <= q : w(i) <= p}. Throws std::out_of_range unless 1 <= p, q <= n.
int rank_fn(const Permutation& w, int q, int p);

/// Which ascent to climb first when building a reduced word.
enum class WordChoice { Smallest, Largest };

/// Indices (i_1, ..., i_k) with w = w_0 o s_{i_1} o ... o s_{i_k} and
/// k = C(n,2) - length(w).
std::vector<int> reduced_word(const Permutation& w,
                              WordChoice choice = WordChoice::Smallest);

/// Product w_0 o s_{i_1} o ... o s_{i_k}, i.e. the inverse of reduced_word.
Permutation from_reduced_word(int n, std::span<const int> word);

/// Steps n_1 < ... < n_m of a partial flag in C^n, with n_m < n.
class FlagShape {
 public:
  /// The complete flag shape {1, ..., n-1}.
  static FlagShape complete(int n);
  /// Parses "n1:n2:...:n". The last entry is the ambient dimension.
  static FlagShape parse(std::string_view text);

  FlagShape() = default;
  FlagShape(std::vector<int> steps, int ambient);

  int ambient() const { return ambient_; }
  /// m, the number of proper steps.
  int step_count() const { return static_cast<int>(steps_.size()); }
  /// n_l for 0 <= l <= m+1, with n_0 = 0 and n_{m+1} = n.
  int step(int l) const;
  std::span<const int> steps() const { return steps_; }
  /// Size of block l: n_l - n_{l-1}, 1 <= l <= m+1.
  int block_size(int l) const { return step(l) - step(l - 1); }
  /// Grade of q_l: n_{l+1} - n_{l-1}, 1 <= l <= m.
  int q_grade(int l) const { return step(l + 1) - step(l - 1); }
  bool contains(int i) const;
  bool is_complete() const { return step_count() == ambient_ - 1; }
  /// Complex dimension of the partial flag manifold.
  int dimension() const;

  /// "n1:n2:...:n"
  std::string to_string() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  std::vector<int> steps_;
  int ambient_ = 0;
};

/// All w in S_n with w(i) < w(i+1) for every i not in the shape, in
/// lexicographic order of the one-line notation.
std::vector<Permutation> sn_elements(const FlagShape& shape);
bool in_sn(const Permutation& w, const FlagShape& shape);
/// Longest element of the parabolic subgroup S_{n_1} x S_{n_2-n_1} x ...
Permutation parabolic_longest(const FlagShape& shape);
/// Longest element of S^(N).
Permutation longest_coset_rep(const FlagShape& shape);
/// Poincare dual inside S^(N): w_0 o w o w_{0,N}.
Permutation dual(const Permutation& w, const FlagShape& shape);

/// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Nonnegative integer vector indexing q^d.
class MultiDegree {
 public:
  static MultiDegree zero(int size) { return MultiDegree(std::vector<int>(size, 0)); }
  static MultiDegree unit(int size, int l);
  /// Parses "1,0,2".
  static MultiDegree parse(std::string_view text);

  MultiDegree() = default;
  /// Throws std::invalid_argument on a negative entry.
  explicit MultiDegree(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int l) const { return entries_[static_cast<std::size_t>(l)]; }
  std::span<const int> entries() const { return entries_; }
  int total() const;
  bool is_zero() const { return total() == 0; }

  MultiDegree operator+(const MultiDegree& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// C(n,2) + 2 * sum(d).
int hyperquot_dim(int n, const MultiDegree& d);

/// (sum e_i, sum e_i (1 + e_i - e_{i-1})) with e_0 = 0. Throws
/// std::invalid_argument unless e_i - e_{i-1} <= 1 and sum e_i >= 1.
std::pair<int, int> lemma_es_check(const MultiDegree& e);

/// All vectors of `size` nonnegative entries summing to `total`, in
/// lexicographic order.
std::vector<MultiDegree> compositions(int size, int total);

/// Vectors d of length weights.size() with sum d_l * weights[l] == grade.
std::vector<MultiDegree> weighted_compositions(std::span<const int> weights, int grade);

}  // namespace qschubert

template <>
struct std::hash<qschubert::Permutation> {
  std::size_t operator()(const qschubert::Permutation& w) const noexcept {
    std::size_t h = 0;
    for (int v : w.images()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};
