#include "qschubert/quantum_class.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace qschubert {

QuantumClass QuantumClass::basis(const Permutation& w, int q_count) {
  QuantumClass c(w.size(), q_count);
  c.add(MultiDegree::zero(q_count), w, Integer(1));
  return c;
}

Integer QuantumClass::coefficient(const MultiDegree& d, const Permutation& w) const {
  auto it = terms_.find({d, w});
  return it == terms_.end() ? Integer(0) : it->second;
}

void QuantumClass::add(const MultiDegree& d, const Permutation& w, const Integer& c) {
  if (c == 0) return;
  if (d.size() != q_count_ || w.size() != n_)
    throw std::invalid_argument("quantum class key " + d.to_string() + "/" + w.to_string() +
                                " does not fit the ring");
  auto [it, inserted] = terms_.try_emplace({d, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QuantumClass::add_scaled(const QuantumClass& other, const Integer& scale, const MultiDegree& shift) {
  if (scale == 0) return;
  for (const auto& [key, c] : other.terms_) add(key.first + shift, key.second, c * scale);
}

QuantumClass QuantumClass::classical_part() const {
  QuantumClass out(n_, q_count_);
  for (const auto& [key, c] : terms_)
    if (key.first.is_zero()) out.terms_.emplace(key, c);
  return out;
}

std::string QuantumClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "−" : "";
    else
      out += negative ? " − " : " + ";
    first = false;
    if (mag != 1) out += mag.str() + "·";
    const auto& d = key.first;
    for (int l = 0; l < d.size(); ++l) {
      if (d[l] == 0) continue;
      out += "q" + std::to_string(l + 1);
      if (d[l] > 1) out += "^" + std::to_string(d[l]);
      out += "·";
    }
    out += "σ" + key.second.bracketed();
  }
  return out;
}

nlohmann::json to_json(const QuantumClass& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : c.terms()) {
    nlohmann::json entry;
    entry["d"] = std::vector<int>(key.first.entries().begin(), key.first.entries().end());
    entry["w"] = key.second.to_string();
    if (coeff >= std::numeric_limits<std::int64_t>::min() && coeff <= std::numeric_limits<std::int64_t>::max())
      entry["coeff"] = static_cast<std::int64_t>(coeff);
    else
      entry["coeff"] = coeff.str();
    terms.push_back(std::move(entry));
  }
  return {{"n", c.n()}, {"terms", terms}};
}

QuantumClass quantum_class_from_json(const nlohmann::json& j, int q_count) {
  const int n = j.at("n").get<int>();
  const auto& terms = j.at("terms");
  QuantumClass out(n, q_count);
  for (const auto& t : terms) {
    MultiDegree d(t.at("d").get<std::vector<int>>());
    if (q_count < 0) {
      q_count = d.size();
      out = QuantumClass(n, q_count);
    }
    const auto& cj = t.at("coeff");
    Integer coeff = cj.is_string() ? Integer(cj.get<std::string>()) : Integer(cj.get<std::int64_t>());
    out.add(d, Permutation::parse(t.at("w").get<std::string>()), coeff);
  }
  if (q_count < 0) out = QuantumClass(n, n - 1);
  return out;
}

}  // namespace qschubert
