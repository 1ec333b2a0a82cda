#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "heckeo/block/complexes.hpp"
#include "heckeo/check.hpp"

namespace heckeo {

struct CatalogEntry {
  std::string name;
  BlockModule module;
};

enum class WallDirection { to_wall, off_wall };
enum class ThetaVariant { star, shriek };
enum class BlockSuite { all, adjunctions, equivalence, tilting };

/// Parses "all", "adjunctions", "equivalence", "tilting"; throws
/// std::invalid_argument otherwise.
BlockSuite parse_block_suite(const std::string& text);

/// A complex of right adjoints F_* together with left adjoints F^* placed in
/// opposite degrees: adj[i][a] is an adjunction (upper(-i)[a], lower(i)[a]).
struct AdjointComplexes {
  FunctorComplex lower, upper;
  std::map<int, std::vector<Adjunction>> adj;
};

/// F^* with the transposed differentials d_i^∨ (summand keys prefixed by "^").
FunctorComplex transpose_complex(const AdjointComplexes& pair);
/// ev: F^*F_* -> id and coev: id -> F_*F^* with the sign pattern
/// + + - - + + ... (by i mod 4) on the i-th adjunction.
ComplexMap make_ev(const AdjointComplexes& pair);
ComplexMap make_coev(const AdjointComplexes& pair);

/// Sign (+1 / -1) used by ev/coev on the adjunction in degree i.
int ev_sign(int i);

/// Solved adjunction data with a short account of the search.
struct AdjunctionSolution {
  AdjunctionParams params;
  std::vector<std::string> log;
};
/// Solves the triangle identities (and A-linearity of η') by linear algebra,
/// trying counit candidates y ∈ (1_e, ba) and τ ∈ (δ_1e, δ_ba) in order with
/// free variables set to zero. Throws std::logic_error if nothing works.
AdjunctionSolution solve_adjunctions(const BlockAlgebra& alg);

/// The four triangle-identity composites, each of which must be an identity.
std::vector<std::pair<std::string, NatExpr>> triangle_composites();

/// The rank-one principal block: algebra, catalog of named modules, frozen
/// adjunctions, the complexes Θ*, Θ! and their verification.
class RankOneBlock {
 public:
  /// Throws std::logic_error if a construction self-check fails.
  static std::shared_ptr<const RankOneBlock> build();

  const BlockAlgebra& algebra() const { return alg_; }
  const std::vector<CatalogEntry>& catalog() const { return catalog_; }
  /// Throws std::invalid_argument for unknown names.
  const BlockModule& module(const std::string& name) const;
  const NatEvaluator& evaluator() const { return *eval_; }
  const AdjunctionSolution& adjunction_solution() const { return solution_; }
  std::string describe_adjunctions() const;

  /// to_wall: Obj of O -> Hom(P_e, M); off_wall: V -> P_e ⊗ V.
  Obj translation(const Obj& x, WallDirection dir) const;
  BlockModule theta(const BlockModule& m) const;

  Adjunction theta_adjunction() const;  // (π*π_*, π!π_*)
  FunctorComplex theta_complex(ThetaVariant v) const;
  AdjointComplexes theta_pair() const;
  ComplexMap ev() const { return make_ev(theta_pair()); }
  ComplexMap coev() const { return make_coev(theta_pair()); }

  /// Catalog modules plus the regular module and θ_s(P_e) (for O), or
  /// k, k^2, k^3 (for the wall).
  std::vector<Obj> generating_set(Cat c) const;

  CheckResult verify_algebra() const;
  CheckResult verify_catalog() const;
  CheckResult verify_translation() const;
  CheckResult verify_adjunctions() const;
  CheckResult verify_unit_counit() const;
  CheckResult verify_transpose() const;
  CheckResult verify_complexes() const;
  CheckResult verify_theta_action() const;
  CheckResult verify_derived_equivalence() const;
  CheckResult verify_tilting_switch() const;
  CheckResult verify_bott_ext() const;
  CheckResult verify_k0_consistency() const;
  /// Checks of the suite, sorted by name.
  std::vector<CheckResult> verify(BlockSuite suite) const;

  struct HomologyRow {
    std::string functor, module;
    int degree;
    std::size_t dimension;
  };
  /// Homology dimensions of Θ*M, Θ!M, Θ*Θ!M, Θ!Θ*M for every catalog module.
  std::vector<HomologyRow> homology_table() const;

 private:
  RankOneBlock() = default;
  BlockAlgebra alg_;
  std::vector<CatalogEntry> catalog_;
  AdjunctionSolution solution_;
  std::unique_ptr<NatEvaluator> eval_;
};

inline std::shared_ptr<const RankOneBlock> build_rank_one() { return RankOneBlock::build(); }

/// Agreement of two natural transformations / complex maps on a set of objects.
bool agree_on(const NatEvaluator& ev, const NatExpr& a, const NatExpr& b, const std::vector<Obj>& objs);
bool agree_on(const NatEvaluator& ev, const ComplexMap& a, const ComplexMap& b, const std::vector<Obj>& objs);

}  // namespace heckeo
