#pragma once

#include <string>
#include <vector>

#include "heckeo/block/block_algebra.hpp"

namespace heckeo {

/// O: the rank-one principal block; W: the wall (plain vector spaces).
enum class Cat { O, W };

/// π^* (off the wall), π^! (off the wall, right-adjoint tag), π_* (onto the wall).
/// Ungraded, π^! evaluates exactly like π^*; the tag only tracks which
/// adjunction a functor participates in.
enum class Letter { Up, UpShriek, Down };

Cat input_cat(Letter l);
Cat output_cat(Letter l);
std::string to_string(Letter l);

/// Composite functor; letters[0] is applied last.
struct FunctorWord {
  std::vector<Letter> letters;
  Cat source = Cat::O;

  static FunctorWord id(Cat c) { return {{}, c}; }
  FunctorWord(std::vector<Letter> l = {}, Cat src = Cat::O);
  Cat target() const { return letters.empty() ? source : output_cat(letters.front()); }
  bool empty() const { return letters.empty(); }
  /// "π*π_*", or "id" for the empty word.
  std::string to_string() const;
  friend bool operator==(const FunctorWord&, const FunctorWord&) = default;
};

/// outer ∘ inner.
FunctorWord concat(const FunctorWord& outer, const FunctorWord& inner);

/// An object of O (a module) or of the wall (a dimension).
struct Obj {
  Cat cat = Cat::O;
  BlockModule module;
  std::size_t vdim = 0;

  static Obj of(BlockModule m) { return {Cat::O, std::move(m), 0}; }
  static Obj vec(std::size_t n) { return {Cat::W, BlockModule(), n}; }
  static Obj zero(Cat c) { return c == Cat::O ? of(BlockModule()) : vec(0); }
  std::size_t dim() const { return cat == Cat::O ? module.dim() : vdim; }
};

struct ObjSum {
  Obj sum;
  std::vector<QMatrix> inj, proj;
};
ObjSum direct_sum(Cat cat, const std::vector<Obj>& parts);

/// π_*M = Hom(P_e, M) = M_e. π^*V = P_e ⊗ V with basis p ⊗ v, p over
/// (1_e, ba, a), p-major.
Obj apply(Letter l, const Obj& x);
Obj apply(const FunctorWord& w, const Obj& x);
/// Image of a morphism f: x -> y.
QMatrix apply(Letter l, const QMatrix& f, const Obj& x, const Obj& y);
QMatrix apply(const FunctorWord& w, const QMatrix& f, const Obj& x, const Obj& y);

enum class AtomKind {
  counit,          // ε: π^*π_* -> id
  unit,            // η: id -> π_*π^*
  shriek_counit,   // ε': π_*π^! -> id
  shriek_unit,     // η': id -> π^!π_*
  mult_down,       // w ∈ eAe acting on π_*
  mult_up,         // right multiplication by w on π^*
  mult_up_shriek,  // same on π^!
};

struct Atom {
  AtomKind kind;
  std::vector<Rational> w;  // coordinates of w in (1_e, ba) for the mult_* kinds
  FunctorWord src, tgt;

  static Atom make(AtomKind kind, std::vector<Rational> w = {});
  std::string key() const;
  std::string to_string() const;
};

/// 1_L · atom · 1_R.
struct Whiskered {
  std::vector<Letter> left;
  Atom atom;
  std::vector<Letter> right;
  Cat source;

  std::string key() const;
};

/// Natural transformation between composite functors: a Q-linear combination
/// of vertical composites of whiskered atoms. Always kept in canonical form
/// (equal chains merged, zero terms dropped, terms sorted by key), so two
/// expressions built by different bracketings compare equal structurally.
class NatExpr {
 public:
  struct Term {
    Rational coeff;
    std::vector<Whiskered> chain;  // chain[0] is applied first
    std::string key() const;
  };

  /// The zero transformation src -> tgt.
  NatExpr(FunctorWord src, FunctorWord tgt);
  static NatExpr identity(const FunctorWord& w);
  static NatExpr atom(const Atom& a);

  const FunctorWord& source() const { return src_; }
  const FunctorWord& target() const { return tgt_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NatExpr& operator+=(const NatExpr& o);
  NatExpr& operator-=(const NatExpr& o);
  NatExpr operator-() const;
  NatExpr scaled(const Rational& c) const;
  std::string to_string() const;

  friend bool operator==(const NatExpr& a, const NatExpr& b);
  friend NatExpr compose(const NatExpr& outer, const NatExpr& inner);
  friend NatExpr whisker_left(const std::vector<Letter>& left, const NatExpr& e);
  friend NatExpr whisker_right(const NatExpr& e, const FunctorWord& right);
  friend NatExpr identify_shriek(const NatExpr& e);

 private:
  void canonicalize();
  FunctorWord src_, tgt_;
  std::vector<Term> terms_;
};

NatExpr operator+(NatExpr a, const NatExpr& b);
NatExpr operator-(NatExpr a, const NatExpr& b);
NatExpr compose(const NatExpr& outer, const NatExpr& inner);
NatExpr whisker_left(const std::vector<Letter>& left, const NatExpr& e);
NatExpr whisker_right(const NatExpr& e, const FunctorWord& right);
inline NatExpr whisker(const std::vector<Letter>& left, const NatExpr& e, const FunctorWord& right) {
  return whisker_left(left, whisker_right(e, right));
}
/// Rewrites every π^! as π^*. Used where the ungraded identification is
/// needed to type-check a composite (e.g. transposing ε through θ ⊣ θ).
NatExpr identify_shriek(const NatExpr& e);

/// Parameters of the two adjunctions:
///   ε_M(p ⊗ m) = p·y·m,  η_V(v) = u ⊗ v,
///   ε'_V(w ⊗ v) = τ(w) v,  η'_M(m) = Σ z_pq p ⊗ q·m  (p ∈ Ae, q ∈ eA).
struct AdjunctionParams {
  std::vector<Rational> y{0, 0}, u{0, 0}, tau{0, 0};
  QMatrix z = QMatrix(3, 3);
};

/// Turns expressions into matrices on concrete objects.
class NatEvaluator {
 public:
  NatEvaluator(const BlockAlgebra& alg, AdjunctionParams params) : alg_(&alg), params_(std::move(params)) {}

  const AdjunctionParams& params() const { return params_; }
  /// Component of a bare atom at x (x is the object the atom's source is applied to).
  QMatrix atom(const Atom& a, const Obj& x) const;
  QMatrix whiskered(const Whiskered& w, const Obj& x) const;
  QMatrix operator()(const NatExpr& e, const Obj& x) const;
  /// Right multiplication by w ∈ eAe on Ae in the basis (1_e, ba, a).
  QMatrix right_mult_on_Ae(const std::vector<Rational>& w) const;

 private:
  BlockAlgebra::Elt eAe_element(const std::vector<Rational>& w) const;
  const BlockAlgebra* alg_;
  AdjunctionParams params_;
};

/// left ⊣ right with unit id -> right∘left and counit left∘right -> id.
struct Adjunction {
  std::string name;
  FunctorWord left, right;
  NatExpr unit, counit;
};

Adjunction identity_adjunction(Cat c);
Adjunction pi_adjunction();      // (π^*, π_*)
Adjunction shriek_adjunction();  // (π_*, π^!)
/// (L1 L2 ⊣ R2 R1) from (L1 ⊣ R1) and (L2 ⊣ R2).
Adjunction compose_adjunctions(const Adjunction& outer, const Adjunction& inner);

/// φ: f_* -> g_* between right adjoints gives φ^∨: g^* -> f^*.
NatExpr transpose(const NatExpr& phi, const Adjunction& f, const Adjunction& g);
/// ψ: g_! -> f_! between left adjoints gives ^∨ψ: f^! -> g^!.
NatExpr right_transpose(const NatExpr& psi, const Adjunction& f, const Adjunction& g);

}  // namespace heckeo
