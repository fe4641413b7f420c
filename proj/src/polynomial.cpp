#include "toric/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toric {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool DegRevLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponent exponent_product(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent exponent_quotient(const Exponent& b, const Exponent& a) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

MultiPoly MultiPoly::homogeneous_component(int degree) const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

MultiPoly MultiPoly::truncated(int max_degree) const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& rhs) const {
  if (num_vars_ != rhs.num_vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(exponent_product(ea, eb), ca * cb);
  return out;
}

MultiPoly MultiPoly::truncated_product(const MultiPoly& a, const MultiPoly& b, int max_degree) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_)
      if (da + total_degree(eb) <= max_degree) out.add_term(exponent_product(ea, eb), ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::times_monomial(const Exponent& e, const Rational& c) const {
  MultiPoly out(num_vars_);
  if (c == 0) return out;
  for (const auto& [ea, ca] : terms_) out.terms_.emplace_hint(out.terms_.end(), exponent_product(ea, e), ca * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(num_vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = total_degree(e) > 0;
    bool need_star = false;
    if (!(unit && mag == 1)) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace toric
