// One line per acceptance criterion: PASS/FAIL, elapsed time and limit.
// Exit status is nonzero when any criterion fails.

#include "qschubert/partial.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"
#include "qschubert/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qschubert;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  // Seconds, one entry per timed part; 0 means no limit.
  std::vector<std::pair<std::string, double>> limits;
  std::function<Outcome(std::vector<double>&)> body;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

QuantumClass single(int n, const MultiDegree& d, const Permutation& w) {
  QuantumClass c(n, static_cast<int>(d.size()));
  c.add(d, w, Integer(1));
  return c;
}

Outcome relations_vanish(std::vector<double>& times) {
  Outcome o;
  auto run = [&](int n) {
    const QuantumRing& ring = quantum_ring(n);
    const std::vector<Polynomial> rels = relations(n);
    for (int k = 1; k <= n; ++k) {
      const Polynomial& rel = rels[static_cast<std::size_t>(k - 1)];
      o.require(ring.expand_in_quantum_basis(rel).is_zero(),
                "e^q_" + std::to_string(k) + "(" + std::to_string(n) + ") does not vanish");
      o.require(set_q_zero(rel) == elementary_poly(k, n), "q = 0 limit differs at n=" + std::to_string(n));
    }
  };
  auto t = Clock::now();
  for (int n = 2; n <= 4; ++n) run(n);
  times.push_back(seconds_since(t));
  t = Clock::now();
  run(5);
  times.push_back(seconds_since(t));
  return o;
}

Outcome giambelli(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  const QuantumRing& ring = quantum_ring(4);
  for (const auto& w : all_permutations(4))
    o.require(ring.expand_in_quantum_basis(quantum_schubert(w)) == QuantumClass::basis(w, 3),
              "S_w(x,q) is not sigma_w for w=" + w.bracketed());
  times.push_back(seconds_since(t));
  return o;
}

Outcome specialization(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  for (const auto& w : all_permutations(4)) {
    const Polynomial& u = universal_schubert_g(w);
    const Polynomial qx = specialize_quantum(u);
    o.require(qx == quantum_schubert(w), "universal -> quantum fails at " + w.bracketed());
    o.require(set_q_zero(qx) == schubert_poly(w), "quantum -> classical fails at " + w.bracketed());
    o.require(specialize_classical(u) == schubert_poly(w), "universal -> classical fails at " + w.bracketed());
  }
  times.push_back(seconds_since(t));
  return o;
}

Outcome known_products(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  const auto P = [](const char* s) { return Permutation::parse(s); };
  o.require(quantum_ring(2).quantum_product(P("2,1"), P("2,1")) == single(2, MultiDegree({1}), P("1,2")),
            "n=2 square");
  QuantumClass want = single(3, MultiDegree({0, 0}), P("3,1,2"));
  want.add(MultiDegree({1, 0}), P("1,2,3"), Integer(1));
  o.require(quantum_ring(3).quantum_product(P("2,1,3"), P("2,1,3")) == want, "n=3 square");
  o.require(partial_quantum_product(P("2,1"), P("2,1"), FlagShape::parse("1:2")) ==
                single(2, MultiDegree({1}), P("1,2")),
            "P^1 square");
  o.require(partial_quantum_product(P("2,1,3"), P("3,1,2"), FlagShape::parse("1:3")) ==
                single(3, MultiDegree({1}), P("1,2,3")),
            "P^2 hyperplane times line");
  times.push_back(seconds_since(t));
  return o;
}

Outcome ring_axioms(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  auto check = [&](const QuantumRing& ring, const Permutation& a, const Permutation& b, const Permutation& c) {
    const QuantumClass ab = ring.multiply(ring.quantum_engine().unit(a), b);
    const QuantumClass ba = ring.multiply(ring.quantum_engine().unit(b), a);
    o.require(ab == ba, "commutativity " + a.bracketed() + " " + b.bracketed());
    const QuantumClass left = ring.multiply(ab, c);
    const QuantumClass right = ring.multiply(ring.multiply(ring.quantum_engine().unit(c), b), a);
    o.require(left == right, "associativity " + a.bracketed() + " " + b.bracketed() + " " + c.bracketed());
  };
  std::size_t triples = 0;
  const auto s3 = all_permutations(3);
  for (const auto& a : s3)
    for (const auto& b : s3)
      for (const auto& c : s3) {
        check(quantum_ring(3), a, b, c);
        ++triples;
      }
  const auto s4 = all_permutations(4);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  for (int i = 0; i < 100; ++i) {
    check(quantum_ring(4), s4[pick(rng)], s4[pick(rng)], s4[pick(rng)]);
    ++triples;
  }
  o.require(triples == 316, "triple count");
  times.push_back(seconds_since(t));
  return o;
}

Outcome classical_limit(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  const QuantumRing& ring = quantum_ring(4);
  const auto s4 = all_permutations(4);
  const Permutation w0 = Permutation::longest_element(4);
  for (const auto& u : s4)
    for (const auto& v : s4) {
      const QuantumClass classical = ring.classical_product(u, v);
      o.require(ring.quantum_product(u, v).classical_part() == classical,
                "q = 0 slice differs at " + u.bracketed() + " " + v.bracketed());
      if (u.length() + v.length() == 6) {
        const Integer pairing = classical.coefficient(MultiDegree::zero(3), w0);
        o.require(pairing == (v == dual(u) ? 1 : 0), "duality pairing at " + u.bracketed() + " " + v.bracketed());
      }
    }
  times.push_back(seconds_since(t));
  return o;
}

Outcome positivity(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  std::size_t coefficients = 0;
  for (int n = 2; n <= 4; ++n) {
    const QuantumRing& ring = quantum_ring(n);
    const auto sn = all_permutations(n);
    for (const auto& u : sn) {
      for (const auto& v : sn) {
        const QuantumClass prod = ring.quantum_product(u, v);
        for (const auto& [key, coeff] : prod.terms()) {
          const auto& [d, w] = key;
          ++coefficients;
          o.require(coeff > 0, "negative coefficient in " + u.bracketed() + " * " + v.bracketed());
          o.require(w.length() == u.length() + v.length() - 2 * d.total(), "grading at " + prod.to_string());
          // <u, v, dual(w)>_d is nonzero only when the lengths fill the hyperquot dimension.
          o.require(u.length() + v.length() + dual(w).length() == hyperquot_dim(n, d),
                    "dimension count at " + prod.to_string());
        }
        // Every invariant at a key of the wrong dimension vanishes.
        const std::vector<Permutation> pair{u, v};
        for (const auto& w : sn)
          for (int total = 0; total <= 3; ++total)
            for (const auto& d : compositions(n - 1, total)) {
              const Integer gw = ring.gromov_witten(pair, w, d);
              o.require(gw >= 0, "negative invariant");
              if (u.length() + v.length() + w.length() != hyperquot_dim(n, d))
                o.require(gw == 0, "invariant off the dimension count");
            }
      }
      // Two-point invariants.
      const std::vector<Permutation> one{u};
      for (const auto& w : sn)
        for (int total = 1; total <= 2; ++total)
          for (const auto& d : compositions(n - 1, total))
            o.require(ring.gromov_witten(one, w, d) == 0, "two-point invariant with d != 0 at " + u.bracketed());
    }
  }
  o.require(coefficients > 0, "no coefficients inspected");
  times.push_back(seconds_since(t));
  return o;
}

Outcome recursion_integrity(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  for (int l = 1; l <= 5; ++l)
    for (int k = 1; k <= l; ++k) {
      const Polynomial& enumerated = path_poly(k, l);
      const std::string at = "E_" + std::to_string(k) + "(" + std::to_string(l) + ")";
      o.require(verify::path_poly_recursion(k, l) == enumerated, "recursion differs at " + at);
      o.require(verify::path_poly_determinant(k, l) == enumerated, "determinant differs at " + at);
    }
  for (const Variable v : PathAlphabet(5).variables())
    o.require(c_to_g(g_from_c(v.first(), v.second())) == Polynomial(v), "round trip fails at " + v.to_string());
  times.push_back(seconds_since(t));
  return o;
}

Outcome geometry_lemmas(std::vector<double>& times, std::string& detail) {
  Outcome o;
  const auto t = Clock::now();
  for (int l = 2; l <= 5; ++l)
    for (int k = 1; k < l; ++k)
      o.require(kernel_chern_check(k, l).holds,
                "kernel_chern_check(" + std::to_string(k) + "," + std::to_string(l) + ")");
  std::ostringstream notes;
  for (const char* text : {"1:3", "2:4", "1:3:4"}) {
    const FlagShape shape = FlagShape::parse(text);
    for (int l = 1; l <= shape.step_count(); ++l) {
      const KernelChernPartialReport r = kernel_chern_partial_check(l, shape);
      o.require(r.holds, std::string("upper-block reading fails for ") + text + " l=" + std::to_string(l));
      notes << " " << text << "/l=" << l << ":printed "
            << (r.printed_mismatch < 0 ? std::string("ok") : "fails@j=" + std::to_string(r.printed_mismatch));
    }
  }
  detail = "resolution: case 1 reads g_{n_l+1}[j-1] (upper block);" + notes.str();
  times.push_back(seconds_since(t));
  return o;
}

Outcome combinatorics(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  std::size_t count = 0;
  for (int n = 2; n <= 5; ++n)
    for (const MultiDegree& e : verify::valid_es(n - 1, 6)) {
      const auto [sum, rhs] = lemma_es_check(e);
      ++count;
      o.require(sum <= rhs, "clause 1 at " + e.to_string());
      o.require(rhs >= 2 && ((rhs == 2) == (sum == 1)), "clause 2 at " + e.to_string());
      o.require(rhs == verify::lemma_es_square_form(e), "square form at " + e.to_string());
    }
  for (int n = 2; n <= 5; ++n)
    for (int total = 0; total <= 3; ++total)
      for (const auto& d : compositions(n - 1, total))
        o.require(hyperquot_dim(n, d) == n * (n - 1) / 2 + 2 * total, "hyperquot_dim at " + d.to_string());
  o.require(count > 0, "no multiindices");
  times.push_back(seconds_since(t));
  return o;
}

Outcome partial_coherence(std::vector<double>& times) {
  Outcome o;
  const auto t = Clock::now();
  const FlagShape shape = FlagShape::parse("1:2:3");
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3))
      o.require(partial_quantum_product(u, v, shape) == quantum_ring(3).quantum_product(u, v),
                "entry " + u.bracketed() + " * " + v.bracketed());
  times.push_back(seconds_since(t));
  return o;
}

}  // namespace

int main() {
  std::string lemma_detail;
  const std::vector<Criterion> criteria{
      {1, "presentation relations vanish, n = 2..5", {{"n<=4", 10}, {"n=5", 300}}, relations_vanish},
      {2, "quantum Giambelli on S_4", {{"", 60}}, giambelli},
      {3, "specialization chain on S_4", {{"", 30}}, specialization},
      {4, "known products (n=2, n=3, P^1, P^2)", {{"", 0}}, known_products},
      {5, "commutativity and associativity (S_3 exhaustive, 100 S_4 triples)", {{"", 120}}, ring_axioms},
      {6, "classical limit on S_4 and Poincare duality", {{"", 120}}, classical_limit},
      {7, "positivity, grading and two-point vanishing, n <= 4", {{"", 0}}, positivity},
      {8, "path polynomial routes and g<->c round trip", {{"", 0}}, recursion_integrity},
      {9, "kernel Chern class lemmas",
       {{"", 0}},
       [&](std::vector<double>& times) { return geometry_lemmas(times, lemma_detail); }},
      {10, "multiindex inequalities and hyperquot dimension", {{"", 0}}, combinatorics},
      {11, "partial pipeline at 1:2:3 reproduces the S_3 table", {{"", 0}}, partial_coherence},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<double> times;
    Outcome o;
    try {
      o = c.body(times);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::ostringstream timing;
    for (std::size_t i = 0; i < times.size() && i < c.limits.size(); ++i) {
      const auto& [label, limit] = c.limits[i];
      if (limit > 0 && times[i] > limit) {
        o.ok = false;
        if (o.note.empty()) o.note = "over time limit";
      }
      char buf[96];
      const std::string prefix = std::string(i ? ", " : "") + (label.empty() ? "" : label + " ");
      if (limit > 0)
        std::snprintf(buf, sizeof buf, "%s%.2fs/%.0fs", prefix.c_str(), times[i], limit);
      else
        std::snprintf(buf, sizeof buf, "%s%.2fs", prefix.c_str(), times[i]);
      timing << buf;
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing.str() << ")";
    if (!o.note.empty()) std::cout << " -- " << o.note;
    if (c.id == 9 && !lemma_detail.empty()) std::cout << " -- " << lemma_detail;
    std::cout << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all 11 passed")
            << std::endl;
  return failed ? 1 : 0;
}
