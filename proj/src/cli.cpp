#include "qschubert/cli.hpp"

#include "qschubert/linear.hpp"
#include "qschubert/partial.hpp"
#include "qschubert/qring.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/universal.hpp"
#include "qschubert/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace qschubert::cli {

namespace fs = std::filesystem;
using nlohmann::json;

TableCache::TableCache(fs::path dir, int version) : dir_(std::move(dir)), version_(version) {}

TableCache TableCache::from_environment() {
  if (const char* env = std::getenv("QSCHUBERT_CACHE"); env && *env) return TableCache(env);
  const char* home = std::getenv("HOME");
  return TableCache(fs::path(home && *home ? home : ".") / ".qschubert-cache");
}

fs::path TableCache::file_for(const std::string& kind, const std::string& ring) const {
  return dir_ / (kind + "_" + ring + "_v" + std::to_string(version_) + ".json");
}

std::optional<json> TableCache::load(const std::string& kind, const std::string& ring) const {
  std::ifstream in(file_for(kind, ring));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.value("kind", "") != kind || j.value("ring", "") != ring || j.value("version", -1) != version_ ||
        !j.contains("data"))
      return std::nullopt;
    return std::move(j["data"]);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const std::string& kind, const std::string& ring, const json& data) const {
  fs::create_directories(dir_);
  const fs::path target = file_for(kind, ring);
  const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
    out << json{{"kind", kind}, {"ring", ring}, {"version", version_}, {"data", data}}.dump() << "\n";
    if (!out.flush())
      throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
  }
  fs::rename(tmp, target);
}

namespace {

// Input errors map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation parse_perm(const std::string& text, int n, const std::string& flag) {
  Permutation w;
  try {
    w = Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (w.size() != n) throw UsageError(flag + ": " + w.to_string() + " is not in S_" + std::to_string(n));
  return w;
}

// The ring selected by --n or --shape.
class Ring {
 public:
  Ring(std::optional<int> n, const std::string& shape_text) {
    if (!shape_text.empty()) {
      try {
        shape_ = FlagShape::parse(shape_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--shape: ") + e.what());
      }
      n_ = shape_->ambient();
      if (n && *n != n_) throw UsageError("--n and --shape disagree");
    } else if (n) {
      if (*n < 1) throw UsageError("--n must be positive");
      n_ = *n;
    } else {
      throw UsageError("one of --n or --shape is required");
    }
  }

  int n() const { return n_; }
  bool partial() const { return shape_.has_value(); }
  const FlagShape& shape() const { return *shape_; }
  int q_count() const { return partial() ? shape_->step_count() : n_ - 1; }
  std::string key() const { return partial() ? shape_->to_string() : std::to_string(n_); }

  Permutation perm(const std::string& text, const std::string& flag) const {
    Permutation w = parse_perm(text, n_, flag);
    if (partial() && !in_sn(w, *shape_))
      throw UsageError(flag + ": " + w.to_string() + " is not in S^(" + shape_->to_string() + ")");
    return w;
  }

  std::vector<Permutation> labels() const { return partial() ? sn_elements(*shape_) : all_permutations(n_); }

  QuantumClass product(const Permutation& u, const Permutation& v) const {
    return partial() ? partial_ring(*shape_).quantum_product(u, v) : quantum_ring(n_).quantum_product(u, v);
  }
  QuantumClass product_multi(const std::vector<Permutation>& ws) const {
    return partial() ? partial_ring(*shape_).quantum_product_multi(ws) : quantum_ring(n_).quantum_product_multi(ws);
  }
  Integer gw(const std::vector<Permutation>& ws, const Permutation& w, const MultiDegree& d) const {
    return partial() ? partial_ring(*shape_).gromov_witten(ws, w, d) : quantum_ring(n_).gromov_witten(ws, w, d);
  }
  /// sum of lengths == dim + sum d_l grade(q_l)
  bool graded(const std::vector<Permutation>& ws, const Permutation& w, const MultiDegree& d) const {
    int total = w.length();
    for (const auto& x : ws) total += x.length();
    int expected = partial() ? shape_->dimension() : hyperquot_dim(n_, MultiDegree::zero(n_ - 1));
    for (int l = 1; l <= q_count(); ++l) expected += d[l - 1] * (partial() ? shape_->q_grade(l) : 2);
    return total == expected;
  }
  Permutation dual_of(const Permutation& w) const { return partial() ? dual(w, *shape_) : dual(w); }

 private:
  int n_ = 0;
  std::optional<FlagShape> shape_;
};

std::string pair_key(const Permutation& u, const Permutation& v) { return u.to_string() + "|" + v.to_string(); }

// Product table backed by the cache; entries are added as they are computed.
class ProductTable {
 public:
  ProductTable(const Ring& ring, const TableCache& cache) : ring_(ring), cache_(cache) {
    if (auto data = cache_.load("product-table", ring_.key()); data && data->is_object()) {
      try {
        for (auto& [k, v] : data->items()) entries_.emplace(k, quantum_class_from_json(v, ring_.q_count()));
      } catch (const std::exception&) {
        entries_.clear();
      }
    }
  }

  std::optional<QuantumClass> find(const Permutation& u, const Permutation& v) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(pair_key(u, v));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  QuantumClass get(const Permutation& u, const Permutation& v) {
    if (auto hit = find(u, v)) return *hit;
    QuantumClass c = ring_.product(u, v);
    std::lock_guard lock(mutex_);
    entries_.emplace(pair_key(u, v), c);
    dirty_ = true;
    return c;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

  void save() {
    std::lock_guard lock(mutex_);
    if (!dirty_) return;
    json data = json::object();
    for (const auto& [k, c] : entries_) data[k] = to_json(c);
    cache_.store("product-table", ring_.key(), data);
    dirty_ = false;
  }

 private:
  const Ring& ring_;
  const TableCache& cache_;
  mutable std::mutex mutex_;
  std::map<std::string, QuantumClass> entries_;
  bool dirty_ = false;
};

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

// --- schubert ---------------------------------------------------------------

struct SchubertArgs {
  int n = 0;
  std::string w;
  bool quantum = false;
  bool universal = false;
  bool edecomp = false;
  std::string format = "text";
};

int cmd_schubert(const SchubertArgs& a, const TableCache& cache, std::ostream& out) {
  if (a.quantum && a.universal) throw UsageError("--quantum and --universal are exclusive");
  const Permutation w = parse_perm(a.w, a.n, "--w");
  const bool as_json = a.format == "json";

  if (a.edecomp) {
    const EDecomposition& dec = e_decomposition(w);
    json terms = json::array();
    for (const auto& [k, coeff] : dec.coeffs) terms.push_back({{"k", k}, {"coeff", coeff.str()}});
    std::string text = dec.to_string();
    if (!text.empty()) text.pop_back();
    emit(out, as_json, {{"n", a.n}, {"w", w.to_string()}, {"edecomposition", terms}}, text);
    return kOk;
  }

  Polynomial p;
  std::string kind;
  if (a.universal) {
    kind = "universal";
    p = universal_schubert_g(w);
  } else {
    // Classical and quantum polynomials go through the cache.
    kind = a.quantum ? "qschubert" : "schubert";
    std::optional<json> data = cache.load(kind, std::to_string(a.n));
    json table = data && data->is_object() ? *data : json::object();
    bool hit = false;
    if (table.contains(w.to_string())) {
      try {
        p = polynomial_from_json(table[w.to_string()]);
        hit = true;
      } catch (const std::exception&) {
      }
    }
    if (!hit) {
      p = a.quantum ? quantum_schubert(w) : schubert_poly(w);
      table[w.to_string()] = to_json(p);
      cache.store(kind, std::to_string(a.n), table);
    }
  }
  emit(out, as_json, {{"n", a.n}, {"w", w.to_string()}, {"kind", kind}, {"polynomial", to_json(p)}}, p.to_string());
  return kOk;
}

// --- product / gw -------------------------------------------------------------

struct RingArgs {
  std::optional<int> n;
  std::string shape;
  std::string format = "text";
};

int cmd_product(const RingArgs& r, const std::string& u_text, const std::string& v_text, const TableCache& cache,
                std::ostream& out) {
  const Ring ring(r.n, r.shape);
  const Permutation u = ring.perm(u_text, "--u"), v = ring.perm(v_text, "--v");
  ProductTable table(ring, cache);
  const QuantumClass c = table.get(u, v);
  table.save();
  emit(out, r.format == "json", to_json(c), c.to_string());
  return kOk;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int cmd_gw(const RingArgs& r, const std::string& insertions, const std::string& cls, const std::string& degree,
           const TableCache& cache, std::ostream& out) {
  const Ring ring(r.n, r.shape);
  std::vector<Permutation> ws;
  for (const auto& t : split(insertions, ';'))
    if (!t.empty()) ws.push_back(ring.perm(t, "--insertions"));
  if (ws.empty()) throw UsageError("--insertions: at least one class is required");
  const Permutation w = ring.perm(cls, "--class");
  MultiDegree d;
  try {
    d = degree.empty() ? MultiDegree::zero(ring.q_count()) : MultiDegree::parse(degree);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--degree: ") + e.what());
  }
  if (d.size() != ring.q_count())
    throw UsageError("--degree: expected " + std::to_string(ring.q_count()) + " entries");

  Integer value;
  if (ws.size() == 2) {
    // Two insertions read the cached product.
    if (ring.graded(ws, w, d)) {
      ProductTable table(ring, cache);
      value = table.get(ws[0], ws[1]).coefficient(d, ring.dual_of(w));
      table.save();
    }
  } else {
    value = ring.gw(ws, w, d);
  }
  json j{{"insertions", json::array()}, {"class", w.to_string()}, {"degree", std::vector<int>(d.entries().begin(), d.entries().end())},
         {"value", value.str()}};
  for (const auto& x : ws) j["insertions"].push_back(x.to_string());
  emit(out, r.format == "json", j, value.str());
  return kOk;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const std::string& suite, const RingArgs& r, std::uint64_t seed, int samples, std::ostream& out) {
  verify::SuiteOptions o;
  o.seed = seed;
  o.samples = samples;
  o.n = r.n;
  if (!r.shape.empty()) {
    try {
      o.shape = FlagShape::parse(r.shape);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--shape: ") + e.what());
    }
  }
  std::vector<verify::PropertyResult> results;
  try {
    results = verify::run_suite(suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  json j{{"suite", suite}, {"properties", json::array()}};
  std::string text;
  for (const auto& p : results) {
    all = all && p.passed;
    j["properties"].push_back(
        {{"property", p.property}, {"cases", p.cases}, {"passed", p.passed}, {"counterexample", p.counterexample}});
    text += std::string(p.passed ? "pass" : "FAIL") + "  " + p.property + "  (" + std::to_string(p.cases) + " cases)";
    if (!p.passed) text += "\n      counterexample: " + p.counterexample;
    text += "\n";
  }
  j["passed"] = all;
  text += all ? "suite " + suite + ": pass" : "suite " + suite + ": FAIL";
  emit(out, r.format == "json", j, text);
  return all ? kOk : kInternal;
}

// --- table --------------------------------------------------------------------

int cmd_table(const RingArgs& r, const std::string& out_path, int jobs, int max_n, const TableCache& cache,
              std::ostream& out) {
  const Ring ring(r.n, r.shape);
  if (ring.n() > max_n)
    throw UsageError("n = " + std::to_string(ring.n()) + " exceeds --max-n " + std::to_string(max_n));
  const auto labels = ring.labels();
  ProductTable table(ring, cache);

  std::vector<std::pair<Permutation, Permutation>> todo;
  for (const auto& u : labels)
    for (const auto& v : labels)
      if (!table.find(u, v)) todo.emplace_back(u, v);

  if (!todo.empty()) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs > 0 ? static_cast<unsigned>(jobs)
                                                                        : std::thread::hardware_concurrency(),
                                                               static_cast<unsigned>(todo.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      try {
        for (std::size_t i = next++; i < todo.size(); i = next++) {
          table.get(todo[i].first, todo[i].second);
          if ((i + 1) % 256 == 0) table.save();
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    table.save();
    if (failure) std::rethrow_exception(failure);
  }

  json entries = json::array();
  for (const auto& u : labels)
    for (const auto& v : labels)
      entries.push_back({{"u", u.to_string()}, {"v", v.to_string()}, {"product", to_json(*table.find(u, v))}});
  const json doc{{"ring", ring.key()}, {"version", kCacheVersion}, {"entries", entries}};

  const fs::path target = out_path.empty() ? fs::path("table_" + ring.key() + ".json") : fs::path(out_path);
  {
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw fs::filesystem_error("cannot write table", tmp, std::make_error_code(std::errc::io_error));
    f << doc.dump(2) << "\n";
    f.close();
    if (!f) throw fs::filesystem_error("cannot write table", tmp, std::make_error_code(std::errc::io_error));
    fs::rename(tmp, target);
  }
  emit(out, r.format == "json", {{"out", target.string()}, {"entries", entries.size()}, {"computed", todo.size()}},
       "wrote " + std::to_string(entries.size()) + " entries to " + target.string() + " (" +
           std::to_string(todo.size()) + " computed)");
  return kOk;
}

void add_ring_options(CLI::App* cmd, RingArgs& r) {
  cmd->add_option("--n", r.n, "Complete flags in C^n");
  cmd->add_option("--shape", r.shape, "Partial flag shape n1:...:n");
  cmd->add_option("--format", r.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Schubert calculus on flag manifolds", "qschubert"};
  app.require_subcommand(1);

  SchubertArgs sa;
  auto* schubert = app.add_subcommand("schubert", "Print a (quantum, universal) Schubert polynomial");
  schubert->add_option("--n", sa.n, "Size of the symmetric group")->required();
  schubert->add_option("--w", sa.w, "Permutation in one-line notation, e.g. 3,1,2")->required();
  schubert->add_flag("--quantum", sa.quantum, "Quantum Schubert polynomial in x and q");
  schubert->add_flag("--universal", sa.universal, "Universal Schubert polynomial in the path variables g");
  schubert->add_flag("--edecomp", sa.edecomp, "Expansion in products of elementary polynomials");
  schubert->add_option("--format", sa.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  RingArgs pr;
  std::string pu, pv;
  auto* product = app.add_subcommand("product", "Quantum product of two Schubert classes");
  add_ring_options(product, pr);
  product->add_option("--u", pu, "First class")->required();
  product->add_option("--v", pv, "Second class")->required();

  RingArgs gr;
  std::string ins, cls, deg;
  auto* gw = app.add_subcommand(
      "gw", "Gromov-Witten number <w1,...,wk,w>_d, read off as the coefficient of q^d sigma_{dual(w)} in w1*...*wk");
  add_ring_options(gw, gr);
  gw->add_option("--insertions", ins, "Classes separated by ';'")->required();
  gw->add_option("--class", cls, "Last insertion w; its dual labels the extracted coefficient")->required();
  gw->add_option("--degree", deg, "Multidegree d, e.g. 1,0");

  RingArgs vr;
  std::string suite;
  std::uint64_t seed = 1;
  int samples = 100;
  auto* ver = app.add_subcommand("verify", "Run a property suite");
  add_ring_options(ver, vr);
  ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", seed, "Seed for sampled suites");
  ver->add_option("--samples", samples, "Sample count for suites that do not enumerate");

  RingArgs tr;
  std::string out_path;
  int jobs = 0, max_n = 5;
  auto* tab = app.add_subcommand("table", "Write the full multiplication table as JSON");
  add_ring_options(tab, tr);
  tab->add_option("--out", out_path, "Output path");
  tab->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  tab->add_option("--max-n", max_n, "Largest n accepted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const TableCache cache = TableCache::from_environment();
    if (*schubert) return cmd_schubert(sa, cache, out);
    if (*product) return cmd_product(pr, pu, pv, cache, out);
    if (*gw) return cmd_gw(gr, ins, cls, deg, cache, out);
    if (*ver) return cmd_verify(suite, vr, seed, samples, out);
    if (*tab) return cmd_table(tr, out_path, jobs, max_n, cache, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace qschubert::cli
