#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeo/block/functors.hpp"

namespace heckeo {

/// One direct summand of a term of a functor complex. Keys are concatenated
/// under composition, so summands of F(GH) and (FG)H carry identical keys.
struct Summand {
  FunctorWord word;
  std::vector<std::string> key;
};

using NatMatrix = std::vector<std::vector<NatExpr>>;  // [target summand][source summand]

/// Bounded complex of functors source -> target, each term a direct sum of
/// composite functors, differentials given by matrices of NatExpr.
class FunctorComplex {
 public:
  FunctorComplex(Cat source, Cat target) : source_(source), target_(target) {}
  /// The identity functor in degree 0, with an empty key (a strict unit for compose).
  static FunctorComplex identity(Cat c);

  Cat source() const { return source_; }
  Cat target() const { return target_; }
  const std::map<int, std::vector<Summand>>& terms() const { return terms_; }
  const std::vector<Summand>& term(int i) const;
  /// d^i: term(i) -> term(i+1), sized to match (zeros where unset).
  NatMatrix differential(int i) const;

  void add_summand(int degree, Summand s);
  void set_differential(int i, std::size_t to, std::size_t from, NatExpr d);
  /// Summands are appended in whatever order; this sorts each degree by key
  /// and permutes the differentials accordingly.
  void sort_summands();

  std::string to_string() const;
  friend bool operator==(const FunctorComplex& a, const FunctorComplex& b);

 private:
  Cat source_, target_;
  std::map<int, std::vector<Summand>> terms_;
  std::map<int, std::map<std::pair<std::size_t, std::size_t>, NatExpr>> diff_;  // sparse, (to, from)
};

/// F G with (FG)^n = ⊕_{i+j=n} F^i G^j and d = d_F 1 + (-1)^i 1 d_G.
FunctorComplex compose(const FunctorComplex& f, const FunctorComplex& g);

/// Degree-0 morphism of functor complexes.
struct ComplexMap {
  FunctorComplex source, target;
  std::map<int, NatMatrix> comp;

  NatExpr at(int degree, std::size_t to, std::size_t from) const;
  static ComplexMap identity(const FunctorComplex& f);
};

ComplexMap compose(const ComplexMap& outer, const ComplexMap& inner);
/// φ 1_H: XH -> YH and 1_H φ: HX -> HY.
ComplexMap whisker_right(const ComplexMap& phi, const FunctorComplex& h);
ComplexMap whisker_left(const FunctorComplex& h, const ComplexMap& phi);

/// Bounded complex of modules (or wall vector spaces) with explicit matrices.
struct ChainComplex {
  Cat cat = Cat::O;
  std::map<int, Obj> terms;
  std::map<int, QMatrix> d;                               // d[i]: terms[i] -> terms[i+1]
  std::map<int, std::vector<std::string>> labels;         // summand names, for display

  static ChainComplex single(const Obj& x, int degree = 0);
  Obj term(int i) const;
  QMatrix differential(int i) const;
  std::pair<int, int> range() const;  // [lo, hi] of nonzero terms; lo > hi if empty
  bool squares_to_zero() const;
};

using ChainMap = std::map<int, QMatrix>;

ChainComplex apply(const NatEvaluator& ev, const FunctorComplex& f, const Obj& x);
/// Total complex of F applied termwise to C: d = d_F + (-1)^i F^i(d_C).
ChainComplex apply(const NatEvaluator& ev, const FunctorComplex& f, const ChainComplex& c);
/// Components of a complex map at x, between apply(source, x) and apply(target, x).
ChainMap apply(const NatEvaluator& ev, const ComplexMap& phi, const Obj& x);

std::map<int, std::size_t> homology_dims(const ChainComplex& c);
/// Homology in degree i as a module (cat O only).
BlockModule homology_module(const ChainComplex& c, int i);
bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f);
/// Homology dimensions agree and the induced maps have full rank. On failure
/// `why` (if given) names the first offending degree.
bool is_quasi_isomorphism(const ChainComplex& c, const ChainComplex& d, const ChainMap& f, std::string* why = nullptr);

}  // namespace heckeo
