#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "heckeo/check.hpp"
#include "heckeo/hecke/hecke_algebra.hpp"

namespace heckeo {

enum class BasisKind { Verma, DualVerma, Simple, Projective, Tilting };
enum class WallVariant { theta, pi_star_pi, pi_shriek_pi };

/// "Verma", "DualVerma", ...; parse is case-insensitive and throws
/// std::invalid_argument on unknown names.
std::string to_string(BasisKind kind);
BasisKind parse_basis_kind(const std::string& text);
/// Symbol used when printing classes: Δ, ∇, L, P, T.
std::string basis_symbol(BasisKind kind);

/// Class in the graded Grothendieck group, stored in the Verma basis.
/// A coordinate v^n stands for a shift by <-n>.
class K0Class {
 public:
  using Coords = std::map<std::uint32_t, LaurentPoly>;

  explicit K0Class(const WeylGroup& group) : group_(&group) {}
  static K0Class verma(WeylElt x);
  /// phi(h): H_x -> [Δ_x].
  static K0Class from_hecke(const HeckeElt& h);
  HeckeElt to_hecke() const;

  const WeylGroup& group() const { return *group_; }
  const Coords& coords() const { return coords_; }
  LaurentPoly coord(std::uint32_t id) const;
  LaurentPoly coord(WeylElt x) const;
  bool is_zero() const { return coords_.empty(); }
  void add_term(std::uint32_t id, const LaurentPoly& c);

  K0Class& operator+=(const K0Class& o);
  K0Class& operator-=(const K0Class& o);
  K0Class operator-() const;
  K0Class scaled(const LaurentPoly& c) const;
  /// X<n>: every coordinate multiplied by v^{-n}.
  K0Class shift(int n) const { return scaled(LaurentPoly::v(-n)); }
  /// v -> 1.
  K0Class ungraded() const;

  std::string to_string(BasisKind kind = BasisKind::Verma) const;

  friend bool operator==(const K0Class& a, const K0Class& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const K0Class& a, const K0Class& b) { return !(a == b); }

 private:
  void require_same(const K0Class& o) const;
  const WeylGroup* group_;
  Coords coords_;
};

K0Class operator+(K0Class a, const K0Class& b);
K0Class operator-(K0Class a, const K0Class& b);

/// The Hecke algebra acting on K_0 through phi, with the distinguished bases.
class K0Model {
 public:
  explicit K0Model(std::shared_ptr<const HeckeAlgebra> algebra);
  static K0Model for_type(const std::string& type, const GroupOptions& options = {});

  const HeckeAlgebra& algebra() const { return *algebra_; }
  const WeylGroup& group() const { return algebra_->group(); }

  K0Class class_of(WeylElt x, BasisKind basis) const;
  K0Class hecke_act(const HeckeElt& h, const K0Class& x) const;
  /// theta_s by the short exact sequences; pi_star_pi = theta_s<1>,
  /// pi_shriek_pi = theta_s<-1>.
  K0Class wall_crossing(int s, const K0Class& x, WallVariant variant = WallVariant::theta) const;
  /// phi d phi^{-1}.
  K0Class dualize(const K0Class& x) const;
  /// Bilinear Euler form: <[Δ_x<m>], [Δ_y<n>]> = δ_{x,y} v^{-(m+n)}.
  LaurentPoly ext_pairing(const K0Class& a, const K0Class& b) const;
  /// Coordinates of x in the given basis, indexed by element id (dense).
  std::vector<LaurentPoly> expand(const K0Class& x, BasisKind basis) const;
  /// Sum of c_y [B_y] printed in the given basis.
  std::string format_in_basis(const K0Class& x, BasisKind basis) const;

  CheckResult verify_bott(WeylElt x) const;
  /// verify_bott for every x.
  CheckResult verify_bott() const;
  /// k0.weyl_character, k0.tilting_character, k0.reciprocity, k0.positivity,
  /// k0.ringel_dimension.
  std::vector<CheckResult> verify_characters() const;
  /// k0.module_axioms, k0.intertwining, k0.unitriangular, k0.tilting_switch,
  /// k0.wall_crossing, k0.simples_killed.
  std::vector<CheckResult> verify_structure() const;
  /// All of the above, sorted by name.
  std::vector<CheckResult> verify_all() const;

 private:
  void check_group(const K0Class& x) const;
  std::shared_ptr<const HeckeAlgebra> algebra_;
};

}  // namespace heckeo
