#include "qschubert/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qschubert {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(sep, pos);
    std::string_view piece = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string join(std::span<const int> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " +
                                  join(images_, ","));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("transposition index out of range");
  return identity(n).swap_positions(i);
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text, ','));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::embed(int m) const {
  if (m < size()) throw std::invalid_argument("cannot embed S_n into a smaller group");
  std::vector<int> v = images_;
  for (int i = size() + 1; i <= m; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation Permutation::swap_positions(int i) const {
  if (i < 1 || i >= size()) throw std::out_of_range("swap position out of range");
  Permutation out = *this;
  std::swap(out.images_[static_cast<std::size_t>(i - 1)], out.images_[static_cast<std::size_t>(i)]);
  return out;
}

std::string Permutation::to_string() const { return join(images_, ","); }

std::string Permutation::bracketed() const { return "[" + join(images_, ",") + "]"; }

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(out));
}

Permutation dual(const Permutation& w) {
  return compose(Permutation::longest_element(w.size()), w);
}

int rank_fn(const Permutation& w, int q, int p) {
  const int n = w.size();
  if (q < 1 || q > n || p < 1 || p > n) throw std::out_of_range("rank_fn: argument out of range");
  int count = 0;
  for (int i = 1; i <= q; ++i)
    if (w(i) <= p) ++count;
  return count;
}

std::vector<int> reduced_word(const Permutation& w, WordChoice choice) {
  // Climb from w to w_0 by right multiplications at ascents, then reverse.
  const int n = w.size();
  std::vector<int> climb;
  Permutation cur = w;
  while (true) {
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (cur(i) < cur(i + 1)) {
        pick = i;
        if (choice == WordChoice::Smallest) break;
      }
    }
    if (pick == 0) break;
    climb.push_back(pick);
    cur = cur.swap_positions(pick);
  }
  std::reverse(climb.begin(), climb.end());
  return climb;
}

Permutation from_reduced_word(int n, std::span<const int> word) {
  Permutation cur = Permutation::longest_element(n);
  for (int i : word) cur = cur.swap_positions(i);
  return cur;
}

FlagShape::FlagShape(std::vector<int> steps, int ambient)
    : steps_(std::move(steps)), ambient_(ambient) {
  if (ambient_ < 2) throw std::invalid_argument("flag shape needs n >= 2");
  if (steps_.empty()) throw std::invalid_argument("flag shape needs at least one step");
  int prev = 0;
  for (int s : steps_) {
    if (s <= prev) throw std::invalid_argument("flag shape steps must be strictly increasing and >= 1");
    prev = s;
  }
  if (prev >= ambient_) throw std::invalid_argument("flag shape steps must be < n");
}

FlagShape FlagShape::complete(int n) {
  std::vector<int> steps(static_cast<std::size_t>(n - 1));
  std::iota(steps.begin(), steps.end(), 1);
  return FlagShape(std::move(steps), n);
}

FlagShape FlagShape::parse(std::string_view text) {
  std::vector<int> all = parse_int_list(text, ':');
  if (all.size() < 2) throw std::invalid_argument("flag shape needs the form n1:...:n");
  int ambient = all.back();
  all.pop_back();
  return FlagShape(std::move(all), ambient);
}

int FlagShape::step(int l) const {
  if (l <= 0) return 0;
  if (l > step_count()) return ambient_;
  return steps_[static_cast<std::size_t>(l - 1)];
}

bool FlagShape::contains(int i) const {
  return std::find(steps_.begin(), steps_.end(), i) != steps_.end();
}

int FlagShape::dimension() const {
  int dim = ambient_ * (ambient_ - 1) / 2;
  for (int l = 1; l <= step_count() + 1; ++l) {
    int b = block_size(l);
    dim -= b * (b - 1) / 2;
  }
  return dim;
}

std::string FlagShape::to_string() const {
  std::vector<int> all = steps_;
  all.push_back(ambient_);
  return join(all, ":");
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool in_sn(const Permutation& w, const FlagShape& shape) {
  if (w.size() != shape.ambient()) return false;
  for (int i = 1; i < w.size(); ++i)
    if (!shape.contains(i) && w(i) > w(i + 1)) return false;
  return true;
}

std::vector<Permutation> sn_elements(const FlagShape& shape) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(shape.ambient()))
    if (in_sn(w, shape)) out.push_back(std::move(w));
  return out;
}

Permutation parabolic_longest(const FlagShape& shape) {
  std::vector<int> v;
  for (int l = 1; l <= shape.step_count() + 1; ++l)
    for (int i = shape.step(l); i > shape.step(l - 1); --i) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation longest_coset_rep(const FlagShape& shape) {
  return compose(Permutation::longest_element(shape.ambient()), parabolic_longest(shape));
}

Permutation dual(const Permutation& w, const FlagShape& shape) {
  return compose(compose(Permutation::longest_element(shape.ambient()), w), parabolic_longest(shape));
}

MultiDegree::MultiDegree(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
}

MultiDegree MultiDegree::unit(int size, int l) {
  std::vector<int> v(static_cast<std::size_t>(size), 0);
  v.at(static_cast<std::size_t>(l - 1)) = 1;
  return MultiDegree(std::move(v));
}

MultiDegree MultiDegree::parse(std::string_view text) { return MultiDegree(parse_int_list(text, ',')); }

int MultiDegree::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
  if (size() != other.size()) throw std::invalid_argument("multidegree size mismatch");
  std::vector<int> v = entries_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.entries_[i];
  return MultiDegree(std::move(v));
}

std::string MultiDegree::to_string() const { return join(entries_, ","); }

int hyperquot_dim(int n, const MultiDegree& d) {
  if (d.size() != n - 1) throw std::invalid_argument("hyperquot_dim: multidegree must have length n-1");
  return n * (n - 1) / 2 + 2 * d.total();
}

std::pair<int, int> lemma_es_check(const MultiDegree& e) {
  int sum = 0, weighted = 0, prev = 0;
  for (int v : e.entries()) {
    if (v - prev > 1) throw std::invalid_argument("lemma_es_check: needs e_i - e_{i-1} <= 1");
    sum += v;
    weighted += v * (1 + v - prev);
    prev = v;
  }
  if (sum < 1) throw std::invalid_argument("lemma_es_check: needs sum e_i >= 1");
  return {sum, weighted};
}

std::vector<MultiDegree> compositions(int size, int total) {
  std::vector<int> ones(static_cast<std::size_t>(size), 1);
  return weighted_compositions(ones, total);
}

std::vector<MultiDegree> weighted_compositions(std::span<const int> weights, int grade) {
  std::vector<MultiDegree> out;
  if (grade < 0) return out;
  std::vector<int> cur(weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == weights.size()) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (int e = left / weights[pos]; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, left - e * weights[pos]);
    }
    cur[pos] = 0;
  };
  rec(0, grade);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qschubert
