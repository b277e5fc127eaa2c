#include "qschubert/poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qschubert {

Variable::Variable(VarKind kind, int first, int second) {
  if (first < 0 || first > 0xfff || second < 0 || second > 0xfff)
    throw std::out_of_range("variable index out of range");
  key_ = (static_cast<std::uint32_t>(kind) << 24) | (static_cast<std::uint32_t>(first) << 12) |
         static_cast<std::uint32_t>(second);
}

int Variable::default_grade() const {
  switch (kind()) {
    case VarKind::X: return 1;
    case VarKind::Q: return 2;
    case VarKind::G: return second() + 1;
    case VarKind::C: return first();
    case VarKind::Sigma: return first();
  }
  return 1;
}

std::string Variable::to_string() const {
  const std::string a = std::to_string(first());
  const std::string b = std::to_string(second());
  switch (kind()) {
    case VarKind::X: return "x" + a;
    case VarKind::Q: return "q" + a;
    case VarKind::G: return "g" + a + "[" + b + "]";
    case VarKind::C: return "c" + a + "(" + b + ")";
    case VarKind::Sigma: return "s" + a + "^" + b;
  }
  return "?";
}

std::string Variable::kind_name() const {
  switch (kind()) {
    case VarKind::X: return "x";
    case VarKind::Q: return "q";
    case VarKind::G: return "g";
    case VarKind::C: return "c";
    case VarKind::Sigma: return "sigma";
  }
  return "?";
}

VarKind Variable::kind_from_name(const std::string& name) {
  if (name == "x") return VarKind::X;
  if (name == "q") return VarKind::Q;
  if (name == "g") return VarKind::G;
  if (name == "c") return VarKind::C;
  if (name == "sigma") return VarKind::Sigma;
  throw std::invalid_argument("unknown variable kind '" + name + "'");
}

int Grading::grade(Variable v) const {
  if (v.kind() != VarKind::Q || q_grades_.empty()) return v.default_grade();
  const int i = v.first();
  if (i < 1 || i > static_cast<int>(q_grades_.size()))
    throw std::out_of_range("no grade known for " + v.to_string());
  return q_grades_[static_cast<std::size_t>(i - 1)];
}

Monomial::Monomial(Variable v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    default_grade_ = exponent * v.default_grade();
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
    default_grade_ += e * v.default_grade();
  }
}

int Monomial::exponent(Variable v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::grade(const Grading& grading) const {
  int g = 0;
  for (const auto& [v, e] : factors_) g += e * grading.grade(v);
  return g;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.default_grade_ = default_grade_ + other.default_grade_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  out.default_grade_ = default_grade_ - other.default_grade_;
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    out.factors_.push_back(f);
    out.default_grade_ += f.second * f.first.default_grade();
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "·";
    if (e > 1 && v.kind() == VarKind::Sigma)
      out += "(" + v.to_string() + ")^" + std::to_string(e);
    else
      out += v.to_string() + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.default_grade_ <=> b.default_grade_; c != 0) return c;
  // Lex: the monomial with the larger power of the largest variable wins.
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ia->second != ib->second) return ia->second <=> ib->second;
  }
  if (ia != a.factors_.end()) return std::strong_ordering::greater;
  if (ib != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(int constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), Integer(1)); }

Polynomial::Polynomial(Monomial m, Integer coefficient) {
  if (coefficient != 0) terms_.emplace(std::move(m), std::move(coefficient));
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power");
  Polynomial result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

bool Polynomial::uses_only(std::initializer_list<VarKind> kinds) const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (std::find(kinds.begin(), kinds.end(), f.first.kind()) == kinds.end()) return false;
  return true;
}

std::set<int> Polynomial::grades(const Grading& grading) const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.grade(grading));
  return out;
}

bool Polynomial::is_homogeneous(const Grading& grading) const { return grades(grading).size() <= 1; }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "−" : "";
    else
      out += negative ? " − " : " + ";
    first = false;
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "·";
      out += m.to_string();
    }
  }
  return out;
}

Polynomial scalar_mul(const Polynomial& p, const Integer& s) { return p * s; }

Polynomial substitute(const Polynomial& p, const Substitution& assignment) {
  // Powers of replaced variables are cached across terms.
  std::map<std::pair<Variable, int>, Polynomial> power_cache;
  auto power = [&](Variable v, const Polynomial& image, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, image.pow(e)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    std::vector<const Polynomial*> images;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        kept.emplace_back(v, e);
      else
        images.push_back(&power(v, it->second, e));
    }
    Polynomial term(Monomial(std::move(kept)), c);
    for (const Polynomial* img : images) {
      if (term.is_zero()) break;
      term = term * *img;
    }
    out += term;
  }
  return out;
}

Polynomial homogeneous_component(const Polynomial& p, int grade, const Grading& grading) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.grade(grading) == grade) out.add_term(m, c);
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [v, e] : it->first.factors()) {
      nlohmann::json idx = nlohmann::json::array({v.first()});
      if (v.kind() == VarKind::G || v.kind() == VarKind::C || v.kind() == VarKind::Sigma)
        idx.push_back(v.second());
      mono.push_back({{"kind", v.kind_name()}, {"indices", idx}, {"exp", e}});
    }
    arr.push_back({{"coeff", it->second.str()}, {"monomial", mono}});
  }
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial out;
  for (const auto& term : j) {
    Integer coeff(term.at("coeff").get<std::string>());
    std::vector<Monomial::Factor> factors;
    for (const auto& f : term.at("monomial")) {
      VarKind kind = Variable::kind_from_name(f.at("kind").get<std::string>());
      const auto& idx = f.at("indices");
      int a = idx.at(0).get<int>();
      int b = idx.size() > 1 ? idx.at(1).get<int>() : 0;
      factors.emplace_back(Variable(kind, a, b), f.at("exp").get<int>());
    }
    out.add_term(Monomial(std::move(factors)), coeff);
  }
  return out;
}

}  // namespace qschubert
