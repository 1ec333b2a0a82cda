#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckeo/check.hpp"
#include "heckeo/ring/laurent_poly.hpp"
#include "heckeo/weyl/weyl_group.hpp"

namespace heckeo {

/// Element of the Hecke algebra in the standard basis {H_x}.
class HeckeElt {
 public:
  using Coeffs = std::map<std::uint32_t, LaurentPoly>;  // element id -> coefficient

  explicit HeckeElt(const WeylGroup& group) : group_(&group) {}
  static HeckeElt standard(WeylElt x, const LaurentPoly& c = LaurentPoly(1));

  const WeylGroup& group() const { return *group_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coeff(WeylElt x) const;
  LaurentPoly coeff(std::uint32_t id) const;
  void add_term(std::uint32_t id, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt operator-() const;
  HeckeElt scaled(const LaurentPoly& c) const;

  /// H_x * H_s
  HeckeElt right_mul_generator(int s) const;
  /// H_s * H_x
  HeckeElt left_mul_generator(int s) const;

  /// e.g. "H_1.2 + (v)H_1 + (v^2)H_e"
  std::string to_string() const;
  /// {"<word>": {exponent: coeff}, ...} in id order
  nlohmann::json to_json() const;

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

 private:
  void require_same(const HeckeElt& o) const;

  const WeylGroup* group_;
  Coeffs coeffs_;
};

HeckeElt operator+(HeckeElt a, const HeckeElt& b);
HeckeElt operator-(HeckeElt a, const HeckeElt& b);
HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
/// Algebra product; throws std::invalid_argument on mixed groups.
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return mul(a, b); }

/// v -> -v^{-1} coefficientwise, H_x fixed.
HeckeElt b_twist(const HeckeElt& h);
/// Anti-automorphism H_x -> H_{x^{-1}}, coefficients fixed.
HeckeElt iota(const HeckeElt& h);
/// Sum over x of a_x b_x.
LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b);

enum class KlVariant { C, Cprime };
enum class DualVariant { dual_to_bC, dual_to_C };

/// Hecke algebra of a fixed Weyl group with memoized d(H_x), KL basis and dual
/// bases. Tables are computed once on first request and are read-only after.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const WeylGroup> group);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }

  HeckeElt zero() const { return HeckeElt(*group_); }
  HeckeElt one() const { return HeckeElt::standard(group_->identity()); }
  HeckeElt standard(WeylElt x) const { return HeckeElt::standard(x); }
  HeckeElt generator(int s) const { return HeckeElt::standard(group_->simple(s)); }

  /// The bar involution d: v -> v^{-1}, H_x -> H_{x^{-1}}^{-1}.
  HeckeElt bar(const HeckeElt& h) const;
  const HeckeElt& bar_standard(WeylElt x) const;

  const HeckeElt& kl_element(WeylElt x) const;
  HeckeElt kl_element(WeylElt x, KlVariant variant) const;

  /// Q_x with <Q_x, b(C_y)> = delta (resp. <Q'_x, C_y> = delta), indexed by id.
  const std::vector<HeckeElt>& dual_basis(DualVariant variant) const;

  /// Checks H_{w0} C_x = Q_{w0 x} for every x.
  CheckResult verify_hw0_identity() const;

 private:
  void check_group(const HeckeElt& h) const;

  std::shared_ptr<const WeylGroup> group_;
  mutable std::once_flag bar_once_, kl_once_, dual_once_[2];
  mutable std::vector<HeckeElt> bar_table_, kl_table_;
  mutable std::vector<HeckeElt> dual_table_[2];
};

/// Quadratic relation for every generator and H_x H_y = H_{xy} for every
/// length-additive pair.
CheckResult verify_relations(const HeckeAlgebra& algebra);
/// d(C_x) = C_x with correction terms in vZ[v]; C'_x corrections in v^{-1}Z[v^{-1}].
CheckResult verify_kl_basis(const HeckeAlgebra& algebra);

/// Inverse of an upper unitriangular matrix over Z[v, v^{-1}] (m[i][j] = 0
/// for i > j, m[i][i] = 1), by back substitution.
std::vector<std::vector<LaurentPoly>> invert_unitriangular(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace heckeo
