#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heckeo/ring/rational_matrix.hpp"

namespace heckeo {

enum class Vertex { e = 0, s = 1 };
std::string to_string(Vertex x);

/// Path algebra of e <-> s with arrows a: e->s, b: s->e and a∘b = 0.
///
/// Basis (fixed order): 1_e, 1_s, a, b, ba. Products are composition:
/// mul(x, y) = x∘y, so b·a = ba is "a then b".
class BlockAlgebra {
 public:
  enum Basis { one_e = 0, one_s = 1, a = 2, b = 3, ba = 4 };
  static constexpr std::size_t dim = 5;
  using Elt = std::array<Rational, dim>;

  BlockAlgebra();

  const std::vector<std::string>& labels() const { return labels_; }
  Vertex source(std::size_t i) const { return paths_[i].src; }
  Vertex target(std::size_t i) const { return paths_[i].tgt; }
  /// Structure constants: product of basis i and basis j.
  const Elt& mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Elt mul(const Elt& x, const Elt& y) const;
  static Elt basis(std::size_t i);
  Elt unit() const;
  static Elt idempotent(Vertex v) { return basis(v == Vertex::e ? one_e : one_s); }

  /// Basis elements starting at v (spanning A·1_v), e-targets first.
  std::vector<std::size_t> paths_from(Vertex v) const;
  /// Basis elements of 1_e A 1_e, 1_e A, A 1_e in the orders used by the
  /// translation functors: (1_e, ba), (1_e, b, ba), (1_e, ba, a).
  static const std::vector<std::size_t>& eAe_basis();
  static const std::vector<std::size_t>& eA_basis();
  static const std::vector<std::size_t>& Ae_basis();

 private:
  struct Path {
    Vertex src, tgt;
    std::string word;  // arrows, leftmost applied last
  };
  std::vector<Path> paths_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Elt>> table_;
};

/// Finite-dimensional module: spaces at e and s with arrow matrices.
/// Coordinates are vertex-sorted (e-part first); A: M_e -> M_s, B: M_s -> M_e.
struct BlockModule {
  std::size_t de = 0, ds = 0;
  QMatrix A, B;

  BlockModule() : A(0, 0), B(0, 0) {}
  BlockModule(std::size_t de_, std::size_t ds_, QMatrix A_, QMatrix B_);
  static BlockModule zero() { return {}; }

  std::size_t dim() const { return de + ds; }
  std::size_t dim_at(Vertex v) const { return v == Vertex::e ? de : ds; }
  std::size_t offset(Vertex v) const { return v == Vertex::e ? 0 : de; }
  /// a∘b acts as zero.
  bool satisfies_relations() const;
  /// Action of a basis element / general element, as a dim x dim matrix.
  QMatrix action(std::size_t basis) const;
  QMatrix action(const BlockAlgebra::Elt& x) const;
  /// Dimension vector (d_e, d_s) = composition multiplicities of L_e, L_s.
  std::array<std::size_t, 2> factors() const { return {de, ds}; }

  friend bool operator==(const BlockModule& x, const BlockModule& y) {
    return x.de == y.de && x.ds == y.ds && x.A == y.A && x.B == y.B;
  }
};

std::string describe(const BlockModule& m);

/// Sub- and quotient data: a per-vertex basis (columns) of a submodule.
struct SubSpace {
  QMatrix e, s;  // columns in M_e resp. M_s coordinates
};

BlockModule simple_module(Vertex v);
/// A·1_v with basis BlockAlgebra::paths_from(v).
BlockModule projective_module(const BlockAlgebra& alg, Vertex v);
/// Dual via the anti-involution fixing the idempotents and swapping a, b.
BlockModule dual(const BlockModule& m);

/// Matrices of a module map f: X -> Y (vertex-sorted coordinates): block
/// diagonal and commuting with the arrows.
bool is_module_map(const QMatrix& f, const BlockModule& x, const BlockModule& y);
/// Linear residual whose vanishing characterizes module maps (used by solvers).
std::vector<Rational> module_map_residual(const QMatrix& f, const BlockModule& x, const BlockModule& y);

/// Basis of Hom_A(X, Y), each as a Y.dim() x X.dim() matrix.
std::vector<QMatrix> hom_space(const BlockModule& x, const BlockModule& y);
std::size_t hom_dim(const BlockModule& x, const BlockModule& y);

struct DirectSum {
  BlockModule sum;
  std::vector<QMatrix> inj, proj;
};
DirectSum direct_sum(const std::vector<BlockModule>& parts);

/// Smallest submodule containing the given vectors (columns of `gens`).
SubSpace generated_submodule(const BlockModule& m, const QMatrix& gens);
SubSpace kernel(const QMatrix& f, const BlockModule& x, const BlockModule& y);
SubSpace image(const QMatrix& f, const BlockModule& x, const BlockModule& y);
SubSpace whole(const BlockModule& m);
SubSpace radical(const BlockModule& m, const SubSpace& u);
/// big / small as a module, with small ⊂ big ⊂ M. If `lift` is given it
/// receives M-coordinates of the chosen complement basis (vertex-sorted).
BlockModule subquotient(const BlockModule& m, const SubSpace& big, const SubSpace& small, QMatrix* lift = nullptr);
inline BlockModule submodule(const BlockModule& m, const SubSpace& u, QMatrix* incl = nullptr) {
  SubSpace zero{QMatrix(m.de, 0), QMatrix(m.ds, 0)};
  return subquotient(m, u, zero, incl);
}
inline BlockModule quotient(const BlockModule& m, const SubSpace& u) { return subquotient(m, whole(m), u); }

/// Dimension vectors of the radical layers M/rad M, rad M/rad^2 M, ...
std::vector<std::array<std::size_t, 2>> loewy_layers(const BlockModule& m);

/// The five indecomposables L_e, L_s, P_s (= Δ_s), ∇_s, P_e.
const std::vector<std::pair<std::string, BlockModule>>& indecomposables();
/// Decides X ≅ Y: equal dimension vectors and equal dim Hom(I, -) for every
/// indecomposable I (which determines a module over a finite-type algebra).
bool is_isomorphic(const BlockModule& x, const BlockModule& y);

/// Multiplicity (M : Δ_v) = dim Hom(M, ∇_v); meaningful for Δ-filtered M.
std::size_t verma_multiplicity(const BlockModule& m, Vertex v);

/// Minimal projective resolution P_k -> ... -> P_0 -> M.
struct ProjectiveResolution {
  std::vector<BlockModule> terms;        // P_0, P_1, ...
  std::vector<std::array<std::size_t, 2>> multiplicities;  // (#P_e, #P_s)
  std::vector<QMatrix> maps;             // maps[0]: P_0 -> M, maps[i]: P_i -> P_{i-1}
};
ProjectiveResolution projective_resolution(const BlockAlgebra& alg, const BlockModule& m);
/// dim Ext^i(X, Y) for i = 0..length of the resolution of X.
std::vector<std::size_t> ext_dims(const BlockAlgebra& alg, const BlockModule& x, const BlockModule& y);

}  // namespace heckeo
