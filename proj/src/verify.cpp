#include "qschubert/verify.hpp"

#include "qschubert/memo.hpp"
#include "qschubert/partial.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace qschubert::verify {

Polynomial path_poly_recursion(int k, int l) {
  static MemoTable<std::pair<int, int>, Polynomial> memo;
  if (k < 0) return Polynomial();
  if (k == 0) return Polynomial(1);
  if (k > l) return Polynomial();
  return memo.get({k, l}, [&] {
    Polynomial out = path_poly_recursion(k, l - 1);
    for (int j = 0; j <= k && l - j >= 1; ++j)
      out += path_poly_recursion(k - j - 1, l - j - 1) * Polynomial(Variable::g(l - j, j));
    return out;
  });
}

Polynomial path_poly_determinant(int k, int l) {
  if (k < 0 || k > l) return Polynomial();
  if (l == 0) return Polynomial(1);
  // Entries as polynomials in lambda: entry[i][j][p] is the lambda^p coefficient.
  using LambdaPoly = std::vector<Polynomial>;
  auto entry = [&](int i, int j) -> LambdaPoly {
    if (i <= j) {
      LambdaPoly e{Polynomial(Variable::g(i, j - i))};
      if (i == j) e.push_back(Polynomial(1));
      return e;
    }
    if (i == j + 1) return {Polynomial(-1)};
    return {};
  };
  LambdaPoly det(static_cast<std::size_t>(l + 1));
  std::vector<int> cols(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  do {
    LambdaPoly term{Polynomial(1)};
    for (int i = 1; i <= l && !term.empty(); ++i) {
      const LambdaPoly e = entry(i, cols[static_cast<std::size_t>(i - 1)]);
      if (e.empty()) {
        term.clear();
        break;
      }
      LambdaPoly next(term.size() + e.size() - 1);
      for (std::size_t a = 0; a < term.size(); ++a)
        for (std::size_t b = 0; b < e.size(); ++b) next[a + b] += term[a] * e[b];
      term = std::move(next);
    }
    if (term.empty()) continue;
    const int sign = Permutation(cols).length() % 2 == 0 ? 1 : -1;
    for (std::size_t p = 0; p < term.size(); ++p) det[p] += term[p] * Integer(sign);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return det[static_cast<std::size_t>(l - k)];
}

QuantumClass quantum_monk(int r, const Permutation& w) {
  const int n = w.size();
  if (r < 1 || r >= n) throw std::invalid_argument("quantum_monk: needs 1 <= r < n");
  QuantumClass out(n, n - 1);
  const int len = w.length();
  for (int a = 1; a <= r; ++a)
    for (int b = r + 1; b <= n; ++b) {
      std::vector<int> img(w.images().begin(), w.images().end());
      std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]);
      const Permutation v(std::move(img));
      if (v.length() == len + 1) out.add(MultiDegree::zero(n - 1), v, Integer(1));
      if (v.length() == len - (2 * (b - a) - 1)) {
        std::vector<int> d(static_cast<std::size_t>(n - 1), 0);
        for (int t = a; t < b; ++t) d[static_cast<std::size_t>(t - 1)] = 1;
        out.add(MultiDegree(std::move(d)), v, Integer(1));
      }
    }
  return out;
}

int lemma_es_square_form(const MultiDegree& e) {
  int sum = 0, squares = 0, prev = 0;
  for (int v : e.entries()) {
    sum += v;
    squares += (v - prev) * (v - prev);
    prev = v;
  }
  squares += prev * prev;
  return sum + squares / 2;
}

std::vector<MultiDegree> valid_es(int length, int max_total) {
  std::vector<MultiDegree> out;
  for (int total = 1; total <= max_total; ++total)
    for (const auto& e : compositions(length, total)) {
      bool ok = true;
      int prev = 0;
      for (int v : e.entries()) {
        ok = ok && v - prev <= 1;
        prev = v;
      }
      if (ok) out.push_back(e);
    }
  return out;
}

namespace {

// The ring a suite runs against: complete flags for --n, partial for --shape.
struct RingView {
  FlagShape shape;
  std::vector<Permutation> labels;
  std::function<QuantumClass(const Permutation&, const Permutation&)> product;
  std::function<QuantumClass(const Permutation&, const Permutation&)> classical;
  std::function<QuantumClass(const QuantumClass&, const Permutation&)> multiply;
  std::function<QuantumClass(const Permutation&)> unit;

  int q_weight(const MultiDegree& d) const {
    int total = 0;
    for (int l = 1; l <= shape.step_count(); ++l) total += d[l - 1] * shape.q_grade(l);
    return total;
  }
};

RingView ring_view(const SuiteOptions& o) {
  RingView v;
  if (o.shape && !o.shape->is_complete()) {
    const PartialRing& R = partial_ring(*o.shape);
    v.shape = *o.shape;
    v.labels = R.basis_labels();
    v.product = [&R](const Permutation& a, const Permutation& b) { return R.quantum_product(a, b); };
    v.classical = [&R](const Permutation& a, const Permutation& b) { return R.classical_product(a, b); };
    v.multiply = [&R](const QuantumClass& c, const Permutation& w) { return R.multiply(c, w); };
    v.unit = [&R](const Permutation& w) { return R.quantum_engine().unit(w); };
    return v;
  }
  const int n = o.shape ? o.shape->ambient() : *o.n;
  const QuantumRing& R = quantum_ring(n);
  v.shape = FlagShape::complete(n);
  v.labels = all_permutations(n);
  v.product = [&R](const Permutation& a, const Permutation& b) { return R.quantum_product(a, b); };
  v.classical = [&R](const Permutation& a, const Permutation& b) { return R.classical_product(a, b); };
  v.multiply = [&R](const QuantumClass& c, const Permutation& w) { return R.multiply(c, w); };
  v.unit = [&R](const Permutation& w) { return R.quantum_engine().unit(w); };
  return v;
}

int require_n(const SuiteOptions& o, const std::string& suite) {
  if (o.n) return *o.n;
  if (o.shape && o.shape->is_complete()) return o.shape->ambient();
  throw std::invalid_argument("suite " + suite + " needs --n");
}

// Records the first failure of a property.
class Recorder {
 public:
  explicit Recorder(std::string property) { result_.property = std::move(property); }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::string pair_text(const Permutation& u, const Permutation& v) { return u.bracketed() + " * " + v.bracketed(); }

std::vector<PropertyResult> suite_associativity(const SuiteOptions& o) {
  const RingView R = ring_view(o);
  Recorder comm("commutativity"), assoc("associativity");
  std::vector<std::array<Permutation, 3>> triples;
  const std::size_t size = R.labels.size();
  if (size * size * size <= 512) {
    for (const auto& a : R.labels)
      for (const auto& b : R.labels)
        for (const auto& c : R.labels) triples.push_back({a, b, c});
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int s = 0; s < o.samples; ++s) triples.push_back({R.labels[pick(rng)], R.labels[pick(rng)], R.labels[pick(rng)]});
  }
  for (const auto& [a, b, c] : triples) {
    const QuantumClass ab = R.multiply(R.unit(a), b);
    const QuantumClass ba = R.multiply(R.unit(b), a);
    comm.check(ab == ba, [&] { return pair_text(a, b) + " = " + ab.to_string() + " but reversed " + ba.to_string(); });
    const QuantumClass left = R.multiply(ab, c);
    const QuantumClass right = R.multiply(R.product(b, c), a);
    assoc.check(left == right, [&] {
      return "(" + pair_text(a, b) + ") * " + c.bracketed() + " = " + left.to_string() + " but " + a.bracketed() +
             " * (" + pair_text(b, c) + ") = " + right.to_string();
    });
  }
  return {comm.done(), assoc.done()};
}

std::vector<PropertyResult> suite_q0_classical(const SuiteOptions& o) {
  const RingView R = ring_view(o);
  Recorder rec("q=0 slice equals classical product");
  for (const auto& u : R.labels)
    for (const auto& v : R.labels) {
      const QuantumClass q = R.product(u, v).classical_part();
      const QuantumClass c = R.classical(u, v);
      rec.check(q == c, [&] { return pair_text(u, v) + ": " + q.to_string() + " vs " + c.to_string(); });
    }
  return {rec.done()};
}

std::vector<PropertyResult> suite_duality(const SuiteOptions& o) {
  const RingView R = ring_view(o);
  const int dim = R.shape.dimension();
  const Permutation top = longest_coset_rep(R.shape);
  const MultiDegree zero = MultiDegree::zero(R.shape.step_count());
  Recorder rec("classical pairing is the duality permutation matrix");
  Recorder lengths("length(w) + length(dual(w)) = dim");
  for (const auto& u : R.labels) {
    const Permutation ud = dual(u, R.shape);
    lengths.check(u.length() + ud.length() == dim && in_sn(ud, R.shape),
                  [&] { return u.bracketed() + " dual " + ud.bracketed(); });
    for (const auto& v : R.labels) {
      if (u.length() + v.length() != dim) continue;
      const Integer got = R.classical(u, v).coefficient(zero, top);
      const Integer want = v == ud ? 1 : 0;
      rec.check(got == want, [&] { return pair_text(u, v) + " pairs to " + got.str(); });
    }
  }
  return {lengths.done(), rec.done()};
}

std::vector<PropertyResult> suite_positivity(const SuiteOptions& o) {
  const RingView R = ring_view(o);
  Recorder pos("structure constants are nonnegative"), grading("grading of product terms");
  Recorder two_point("two-point invariants vanish for d != 0");
  for (const auto& u : R.labels)
    for (const auto& v : R.labels) {
      const QuantumClass c = R.product(u, v);
      for (const auto& [key, coeff] : c.terms()) {
        pos.check(coeff > 0, [&] { return pair_text(u, v) + " has " + c.to_string(); });
        grading.check(key.second.length() == u.length() + v.length() - R.q_weight(key.first),
                      [&] { return pair_text(u, v) + " has term at " + key.first.to_string() + "/" + key.second.bracketed(); });
      }
      // <u, v>_d: coefficient of q^d sigma_{dual v} in sigma_u * sigma_id.
      const QuantumClass single = R.product(u, Permutation::identity(u.size()));
      for (int total = 1; total <= R.shape.dimension(); ++total)
        for (const auto& d : compositions(R.shape.step_count(), total)) {
          if (u.length() + v.length() != R.shape.dimension() + R.q_weight(d)) continue;
          const Integer gw = single.coefficient(d, dual(v, R.shape));
          two_point.check(gw == 0, [&] { return "<" + u.bracketed() + "," + v.bracketed() + ">_" + d.to_string(); });
        }
    }
  return {pos.done(), grading.done(), two_point.done()};
}

std::vector<PropertyResult> suite_relations(const SuiteOptions& o) {
  const int n = require_n(o, "relations");
  const QuantumRing& R = quantum_ring(n);
  Recorder zero("relations expand to zero"), classical("relations at q=0 are e_k(n)");
  for (int k = 1; k <= n; ++k) {
    const QuantumClass c = R.expand_in_quantum_basis(R.relations()[static_cast<std::size_t>(k - 1)]);
    zero.check(c.is_zero(), [&] { return "e^q_" + std::to_string(k) + " -> " + c.to_string(); });
    classical.check(set_q_zero(R.relations()[static_cast<std::size_t>(k - 1)]) == elementary_poly(k, n),
                    [&] { return "k = " + std::to_string(k); });
  }
  return {zero.done(), classical.done()};
}

std::vector<PropertyResult> suite_giambelli(const SuiteOptions& o) {
  std::vector<PropertyResult> out;
  if (o.shape && !o.shape->is_complete()) {
    const PartialRing& R = partial_ring(*o.shape);
    Recorder rec("quantum Giambelli self-expansion");
    for (const auto& w : R.basis_labels()) {
      const QuantumClass c = R.expand(partial_quantum_schubert(w, *o.shape));
      rec.check(c == R.quantum_engine().unit(w), [&] { return w.bracketed() + " -> " + c.to_string(); });
    }
    out.push_back(rec.done());
    return out;
  }
  const int n = require_n(o, "giambelli");
  const QuantumRing& R = quantum_ring(n);
  Recorder rec("quantum Giambelli self-expansion"), routes("slice and operator expansions agree");
  for (const auto& w : all_permutations(n)) {
    const QuantumClass c = R.expand_in_quantum_basis(quantum_schubert(w));
    rec.check(c == R.quantum_engine().unit(w), [&] { return w.bracketed() + " -> " + c.to_string(); });
    const QuantumClass via_ops = R.expand_via_operators(quantum_schubert(w));
    routes.check(via_ops == c, [&] { return w.bracketed() + ": " + via_ops.to_string(); });
  }
  out.push_back(rec.done());
  out.push_back(routes.done());
  return out;
}

std::vector<PropertyResult> suite_product_routes(const SuiteOptions& o) {
  const int n = require_n(o, "product-routes");
  const QuantumRing& R = quantum_ring(n);
  const auto perms = all_permutations(n);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (perms.size() <= 6) {
    for (const auto& u : perms)
      for (const auto& v : perms) pairs.emplace_back(u, v);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int s = 0; s < o.samples; ++s) pairs.emplace_back(perms[pick(rng)], perms[pick(rng)]);
  }
  Recorder rec("operator product equals direct expansion of S_u S_v");
  for (const auto& [u, v] : pairs) {
    const QuantumClass direct = R.expand_in_quantum_basis(quantum_schubert(u) * quantum_schubert(v));
    const QuantumClass fast = R.quantum_product(u, v);
    rec.check(direct == fast, [&] { return pair_text(u, v) + ": " + direct.to_string() + " vs " + fast.to_string(); });
  }
  return {rec.done()};
}

std::vector<PropertyResult> suite_specialization(const SuiteOptions& o) {
  const int n = require_n(o, "specialization");
  Recorder quantum("universal -> quantum"), classical("quantum -> classical"), direct("universal -> classical");
  for (const auto& w : all_permutations(n)) {
    const Polynomial& g = universal_schubert_g(w);
    quantum.check(specialize_quantum(g) == quantum_schubert(w), [&] { return w.bracketed(); });
    classical.check(set_q_zero(quantum_schubert(w)) == schubert_poly(w), [&] { return w.bracketed(); });
    direct.check(specialize_classical(g) == schubert_poly(w), [&] { return w.bracketed(); });
  }
  return {quantum.done(), classical.done(), direct.done()};
}

std::vector<PropertyResult> suite_recursion(const SuiteOptions& o) {
  const int n = require_n(o, "recursion-roundtrip");
  Recorder rec("cover enumeration equals the recursion"), det("cover enumeration equals the determinant");
  Recorder trip("g -> c -> g round trip");
  for (int l = 0; l <= n; ++l)
    for (int k = 0; k <= l; ++k) {
      const Polynomial& e = path_poly(k, l);
      const auto where = [&] { return "E_" + std::to_string(k) + "(" + std::to_string(l) + ")"; };
      rec.check(e == path_poly_recursion(k, l), where);
      det.check(e == path_poly_determinant(k, l), where);
    }
  for (Variable g : PathAlphabet(n).variables())
    trip.check(c_to_g(g_from_c(g.first(), g.second())) == Polynomial(g), [&] { return g.to_string(); });
  return {rec.done(), det.done(), trip.done()};
}

std::vector<PropertyResult> suite_monk(const SuiteOptions& o) {
  const int n = require_n(o, "monk");
  const QuantumRing& R = quantum_ring(n);
  Recorder rec("products with s_r follow the quantum Monk rule");
  for (int r = 1; r < n; ++r) {
    const Permutation s = Permutation::transposition(n, r);
    for (const auto& w : all_permutations(n)) {
      const QuantumClass got = R.quantum_product(s, w), want = quantum_monk(r, w);
      rec.check(got == want, [&] { return pair_text(s, w) + ": " + got.to_string() + " vs " + want.to_string(); });
    }
  }
  return {rec.done()};
}

std::vector<PropertyResult> suite_lemma_es(const SuiteOptions& o) {
  const int n = require_n(o, "lemma-es");
  Recorder first("sum e_i <= sum e_i (1 + e_i - e_{i-1})"), second("second sum >= 2, equality iff sum e_i = 1");
  Recorder square("square-completion identity");
  for (int len = 1; len <= n - 1; ++len)
    for (const auto& e : valid_es(len, 6)) {
      const auto [sum, weighted] = lemma_es_check(e);
      first.check(sum <= weighted, [&] { return e.to_string(); });
      second.check(weighted >= 2 && ((weighted == 2) == (sum == 1)), [&] { return e.to_string(); });
      square.check(weighted == lemma_es_square_form(e), [&] { return e.to_string(); });
    }
  return {first.done(), second.done(), square.done()};
}

std::vector<PropertyResult> suite_kernel_chern(const SuiteOptions& o) {
  const int n = require_n(o, "kernel-chern");
  Recorder rec("c(ker(E_l -> E_k)) = sum E_i(k+1, l)");
  for (int k = 1; k < n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      const KernelChernReport r = kernel_chern_check(k, l);
      rec.check(r.holds, [&] {
        return "k=" + std::to_string(k) + " l=" + std::to_string(l) + " grade " + std::to_string(r.bad_grade) + ": " +
               r.lhs.to_string() + " vs " + r.rhs.to_string();
      });
    }
  return {rec.done()};
}

std::vector<PropertyResult> suite_kernel_chern_partial(const SuiteOptions& o) {
  if (!o.shape) throw std::invalid_argument("suite kernel-chern-partial needs --shape");
  Recorder rec("kernel Chern classes match the upper-block reading");
  for (int l = 1; l <= o.shape->step_count(); ++l) {
    const KernelChernPartialReport r = kernel_chern_partial_check(l, *o.shape);
    rec.check(r.holds, [&] {
      std::string text = "l=" + std::to_string(l) + " kernel:";
      for (const auto& c : r.kernel) text += " [" + c.to_string() + "]";
      return text;
    });
  }
  return {rec.done()};
}

std::vector<PropertyResult> suite_partial_complete(const SuiteOptions& o) {
  const int n = require_n(o, "partial-complete");
  const FlagShape shape = FlagShape::complete(n);
  const QuantumRing& R = quantum_ring(n);
  Recorder schub("complete-shape Schubert polynomials"), table("complete-shape product table");
  Substitution sigma_to_x;
  for (int i = 1; i <= n; ++i) sigma_to_x.emplace(Variable::sigma(1, i), Polynomial(Variable::x(i)));
  for (const auto& w : all_permutations(n))
    schub.check(substitute(partial_quantum_schubert(w, shape), sigma_to_x) == quantum_schubert(w),
                [&] { return w.bracketed(); });
  for (const auto& u : all_permutations(n))
    for (const auto& v : all_permutations(n))
      table.check(partial_quantum_product(u, v, shape) == R.quantum_product(u, v), [&] { return pair_text(u, v); });
  return {schub.done(), table.done()};
}

using SuiteFn = std::vector<PropertyResult> (*)(const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"associativity", suite_associativity},
      {"duality", suite_duality},
      {"giambelli", suite_giambelli},
      {"kernel-chern", suite_kernel_chern},
      {"kernel-chern-partial", suite_kernel_chern_partial},
      {"lemma-es", suite_lemma_es},
      {"monk", suite_monk},
      {"partial-complete", suite_partial_complete},
      {"positivity", suite_positivity},
      {"product-routes", suite_product_routes},
      {"q0-classical", suite_q0_classical},
      {"recursion-roundtrip", suite_recursion},
      {"relations", suite_relations},
      {"specialization", suite_specialization},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<PropertyResult> run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  if (!options.n && !options.shape) throw std::invalid_argument("suite " + name + " needs --n or --shape");
  return it->second(options);
}

}  // namespace qschubert::verify
