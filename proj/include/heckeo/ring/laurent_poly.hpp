#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include <json.hpp>

namespace heckeo {

using Integer = mpz_class;

enum class ArithOp { add, sub, mul };

/// Ring substitutions used by the Hecke algebra involutions.
///   v_to_vinv:     v -> v^{-1}      (bar involution)
///   v_to_neg_vinv: v -> -v^{-1}     (sign twist)
enum class Substitution { v_to_vinv, v_to_neg_vinv };

/// Element of Z[v, v^{-1}] with arbitrary-precision coefficients.
///
/// Stored as exponent -> coefficient with zero coefficients never present, so
/// two polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  /// v^exponent
  static LaurentPoly v(int exponent = 1) { return monomial(Integer(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int exponent) const;
  /// Throws std::domain_error on the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  /// Adds coeff * v^exponent in place.
  void add_term(const Integer& coeff, int exponent);

  /// Multiplies by v^shift.
  LaurentPoly shifted(int shift) const;

  LaurentPoly substitute(Substitution rule) const;
  /// Value at v = 1 (the ungraded specialization).
  Integer at_one() const;

  /// Terms with exponent >= lo (resp. <= hi).
  LaurentPoly truncated_below(int lo) const;
  LaurentPoly truncated_above(int hi) const;

  /// Pretty form, e.g. "v^-1 + 2 + v".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);
inline LaurentPoly substitute(const LaurentPoly& p, Substitution rule) { return p.substitute(rule); }

/// (-v^{-1})^n, which shows up throughout the character formulas.
LaurentPoly neg_vinv_power(int n);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// {"exponent": coefficient, ...}; coefficients that overflow int64 are
/// written as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace heckeo
