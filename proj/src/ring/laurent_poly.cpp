#include "heckeo/ring/laurent_poly.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace heckeo {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const Integer& coeff, int exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentPoly LaurentPoly::substitute(Substitution rule) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    bool negate = rule == Substitution::v_to_neg_vinv && (e % 2 != 0);
    r.terms_.emplace(-e, negate ? Integer(-c) : c);
  }
  return r;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::truncated_below(int lo) const {
  LaurentPoly r;
  r.terms_.insert(terms_.lower_bound(lo), terms_.end());
  return r;
}

LaurentPoly LaurentPoly::truncated_above(int hi) const {
  LaurentPoly r;
  r.terms_.insert(terms_.begin(), terms_.upper_bound(hi));
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ca * cb, ea + eb);
  return r;
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown ArithOp");
}

LaurentPoly neg_vinv_power(int n) {
  return LaurentPoly::monomial(Integer(n % 2 == 0 ? 1 : -1), -n);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = c.get_si();
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial JSON must be an object");
  LaurentPoly p;
  for (const auto& [key, val] : j.items()) {
    std::size_t pos = 0;
    int e = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    Integer c;
    if (val.is_number_integer())
      c = Integer(std::to_string(val.get<long long>()));
    else if (val.is_string())
      c = Integer(val.get<std::string>());
    else
      throw std::invalid_argument("bad coefficient for exponent " + key);
    p.add_term(c, e);
  }
  return p;
}

}  // namespace heckeo
