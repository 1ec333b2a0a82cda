#include "heckeo/block/rank_one.hpp"

#include <optional>
#include <stdexcept>

namespace heckeo {

BlockSuite parse_block_suite(const std::string& text) {
  if (text == "all") return BlockSuite::all;
  if (text == "adjunctions") return BlockSuite::adjunctions;
  if (text == "equivalence") return BlockSuite::equivalence;
  if (text == "tilting") return BlockSuite::tilting;
  throw std::invalid_argument("unknown block suite '" + text + "' (expected all, adjunctions, equivalence, tilting)");
}

int ev_sign(int i) {
  int r = ((i % 4) + 4) % 4;
  return r <= 1 ? 1 : -1;
}

namespace {

std::size_t key_index(const std::vector<Summand>& terms, const std::vector<std::string>& key) {
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (terms[k].key == key) return k;
  throw std::logic_error("summand not found while assembling ev/coev");
}

std::vector<std::string> concat_keys(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

NatMatrix zeros(const std::vector<Summand>& to, const std::vector<Summand>& from) {
  NatMatrix m;
  for (const auto& t : to) {
    std::vector<NatExpr> row;
    for (const auto& f : from) row.emplace_back(f.word, t.word);
    m.push_back(std::move(row));
  }
  return m;
}

void flatten_into(std::vector<Rational>& out, const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
}

template <class Residual>
std::optional<std::vector<Rational>> solve_affine(Residual residual, std::size_t n) {
  std::vector<Rational> zero(n);
  auto r0 = residual(zero);
  QMatrix sys(r0.size(), n), rhs(r0.size(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> unit(n);
    unit[k] = 1;
    auto rk = residual(unit);
    for (std::size_t i = 0; i < r0.size(); ++i) sys(i, k) = rk[i] - r0[i];
  }
  for (std::size_t i = 0; i < r0.size(); ++i) rhs(i, 0) = -r0[i];
  auto x = sys.solve(rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> sol(n);
  for (std::size_t k = 0; k < n; ++k) sol[k] = (*x)(k, 0);
  for (const auto& c : residual(sol))
    if (c != 0) return std::nullopt;  // not affine after all
  return sol;
}

std::string eAe_string(const std::vector<Rational>& w) {
  std::string s;
  const char* names[2] = {"1_e", "ba"};
  for (int k = 0; k < 2; ++k) {
    if (w[k] == 0) continue;
    if (!s.empty()) s += w[k] < 0 ? " - " : " + ";
    else if (w[k] < 0) s += "-";
    Rational mag = abs(w[k]);
    if (mag != 1) s += mag.get_str() + "·";
    s += names[k];
  }
  return s.empty() ? "0" : s;
}

BlockModule regular_module(const BlockAlgebra& alg) {
  return direct_sum({projective_module(alg, Vertex::e), projective_module(alg, Vertex::s)}).sum;
}

}  // namespace

std::vector<std::pair<std::string, NatExpr>> triangle_composites() {
  using L = Letter;
  auto eps = NatExpr::atom(Atom::make(AtomKind::counit));
  auto eta = NatExpr::atom(Atom::make(AtomKind::unit));
  auto eps2 = NatExpr::atom(Atom::make(AtomKind::shriek_counit));
  auto eta2 = NatExpr::atom(Atom::make(AtomKind::shriek_unit));
  FunctorWord up({L::Up}, Cat::W), down({L::Down}, Cat::O), ups({L::UpShriek}, Cat::W);
  return {
      {"(επ*)(π*η)", compose(whisker_right(eps, up), whisker_left({L::Up}, eta))},
      {"(π_*ε)(ηπ_*)", compose(whisker_left({L::Down}, eps), whisker_right(eta, down))},
      {"(π!ε')(η'π!)", compose(whisker_left({L::UpShriek}, eps2), whisker_right(eta2, ups))},
      {"(ε'π_*)(π_*η')", compose(whisker_right(eps2, down), whisker_left({L::Down}, eta2))},
  };
}

AdjunctionSolution solve_adjunctions(const BlockAlgebra& alg) {
  AdjunctionSolution sol;
  auto tri = triangle_composites();
  Obj k = Obj::vec(1);
  Obj reg = Obj::of(regular_module(alg));
  auto deviation = [&](const NatEvaluator& ev, const NatExpr& e, const Obj& x, std::vector<Rational>& out) {
    QMatrix m = ev(e, x);
    flatten_into(out, m - QMatrix::identity(m.rows()));
  };

  bool found = false;
  for (std::size_t c = 0; c < 2 && !found; ++c) {
    AdjunctionParams p;
    p.y = {0, 0};
    p.y[c] = 1;
    auto residual = [&](const std::vector<Rational>& u) {
      AdjunctionParams q = p;
      q.u = u;
      NatEvaluator ev(alg, q);
      std::vector<Rational> r;
      deviation(ev, tri[0].second, k, r);
      deviation(ev, tri[1].second, reg, r);
      return r;
    };
    auto u = solve_affine(residual, 2);
    if (!u) {
      sol.log.push_back("counit y = " + eAe_string(p.y) + " rejected");
      continue;
    }
    sol.params.y = p.y;
    sol.params.u = *u;
    sol.log.push_back("counit y = " + eAe_string(p.y) + ", unit u = " + eAe_string(*u));
    found = true;
  }
  if (!found) throw std::logic_error("no unit/counit for (π*, π_*) satisfies the triangle identities");

  found = false;
  for (std::size_t c = 0; c < 2 && !found; ++c) {
    AdjunctionParams p = sol.params;
    p.tau = {0, 0};
    p.tau[c] = 1;
    auto residual = [&](const std::vector<Rational>& zv) {
      AdjunctionParams q = p;
      for (std::size_t i = 0; i < 9; ++i) q.z(i / 3, i % 3) = zv[i];
      NatEvaluator ev(alg, q);
      std::vector<Rational> r;
      deviation(ev, tri[2].second, k, r);
      deviation(ev, tri[3].second, reg, r);
      Obj target = apply(FunctorWord({Letter::UpShriek, Letter::Down}, Cat::O), reg);
      auto mm = module_map_residual(ev.atom(Atom::make(AtomKind::shriek_unit), reg), reg.module, target.module);
      r.insert(r.end(), mm.begin(), mm.end());
      return r;
    };
    std::string tau_name = c == 0 ? "τ = δ_1e" : "τ = δ_ba";
    auto z = solve_affine(residual, 9);
    if (!z) {
      sol.log.push_back(tau_name + " rejected");
      continue;
    }
    sol.params.tau = p.tau;
    for (std::size_t i = 0; i < 9; ++i) sol.params.z(i / 3, i % 3) = (*z)[i];
    sol.log.push_back(tau_name + " accepted");
    found = true;
  }
  if (!found) throw std::logic_error("no unit/counit for (π_*, π!) satisfies the triangle identities");
  return sol;
}

FunctorComplex transpose_complex(const AdjointComplexes& pair) {
  const FunctorComplex& low = pair.lower;
  FunctorComplex up(low.target(), low.source());
  for (const auto& [i, list] : low.terms())
    for (std::size_t a = 0; a < list.size(); ++a) {
      std::string key = "^";
      for (const auto& k : list[a].key) key += k;
      up.add_summand(-i, {pair.adj.at(i).at(a).left, {key}});
    }
  for (const auto& [i, list] : low.terms()) {
    NatMatrix d = low.differential(i);
    for (std::size_t b = 0; b < d.size(); ++b)
      for (std::size_t a = 0; a < d[b].size(); ++a)
        if (!d[b][a].is_zero())
          up.set_differential(-i - 1, a, b, transpose(d[b][a], pair.adj.at(i).at(a), pair.adj.at(i + 1).at(b)));
  }
  return up;
}

ComplexMap make_ev(const AdjointComplexes& pair) {
  FunctorComplex src = compose(pair.upper, pair.lower);
  FunctorComplex tgt = FunctorComplex::identity(pair.lower.source());
  ComplexMap m{src, tgt, {}};
  m.comp[0] = zeros(tgt.term(0), src.term(0));
  for (const auto& [i, adjs] : pair.adj)
    for (std::size_t a = 0; a < adjs.size(); ++a) {
      auto key = concat_keys(pair.upper.term(-i).at(a).key, pair.lower.term(i).at(a).key);
      std::size_t idx = key_index(src.term(0), key);
      if (!(adjs[a].counit.source() == src.term(0)[idx].word)) throw std::logic_error("ev: counit does not match summand");
      m.comp[0][0][idx] = adjs[a].counit.scaled(ev_sign(i));
    }
  return m;
}

ComplexMap make_coev(const AdjointComplexes& pair) {
  FunctorComplex src = FunctorComplex::identity(pair.lower.source());
  FunctorComplex tgt = compose(pair.lower, pair.upper);
  ComplexMap m{src, tgt, {}};
  m.comp[0] = zeros(tgt.term(0), src.term(0));
  for (const auto& [i, adjs] : pair.adj)
    for (std::size_t a = 0; a < adjs.size(); ++a) {
      auto key = concat_keys(pair.lower.term(i).at(a).key, pair.upper.term(-i).at(a).key);
      std::size_t idx = key_index(tgt.term(0), key);
      if (!(adjs[a].unit.target() == tgt.term(0)[idx].word)) throw std::logic_error("coev: unit does not match summand");
      m.comp[0][idx][0] = adjs[a].unit.scaled(ev_sign(i));
    }
  return m;
}

std::shared_ptr<const RankOneBlock> RankOneBlock::build() {
  std::shared_ptr<RankOneBlock> b(new RankOneBlock());
  const BlockAlgebra& alg = b->alg_;
  auto fail = [](const std::string& what) { throw std::logic_error("rank-one catalog self-check failed: " + what); };

  BlockModule pe = projective_module(alg, Vertex::e), ps = projective_module(alg, Vertex::s);
  // standard module: P_v modulo everything generated at vertices above v (e < s)
  auto standard = [&](const BlockModule& p, Vertex v) {
    if (v == Vertex::s) return p;
    QMatrix gens(p.dim(), p.ds);
    for (std::size_t k = 0; k < p.ds; ++k) gens(p.de + k, k) = 1;
    return quotient(p, generated_submodule(p, gens));
  };
  BlockModule de = standard(pe, Vertex::e), ds = standard(ps, Vertex::s);
  BlockModule le = simple_module(Vertex::e), ls = simple_module(Vertex::s);
  BlockModule ne = dual(de), ns = dual(ds);
  BlockModule te = ne;
  b->catalog_ = {{"Δ_e", de}, {"Δ_s", ds}, {"L_e", le}, {"L_s", ls}, {"P_e", pe},
                 {"P_s", ps}, {"∇_e", ne}, {"∇_s", ns}, {"D_e", te}};

  b->solution_ = solve_adjunctions(alg);
  b->eval_ = std::make_unique<NatEvaluator>(alg, b->solution_.params);
  // the tilting module at s is translation of the one at e
  b->catalog_.push_back({"D_s", b->theta(te)});

  for (const auto& c : b->catalog_)
    if (!c.module.satisfies_relations()) fail(c.name + " violates a∘b = 0");
  if (!is_isomorphic(de, le) || !is_isomorphic(ne, le) || !is_isomorphic(te, le)) fail("Δ_e, ∇_e, D_e must equal L_e");
  if (!is_isomorphic(ds, ps)) fail("Δ_s must be P_s");
  if (!is_isomorphic(b->module("D_s"), pe)) fail("D_s must be P_e");
  if (pe.dim() != 3 || ps.dim() != 2) fail("projective dimensions");
  return b;
}

const BlockModule& RankOneBlock::module(const std::string& name) const {
  for (const auto& c : catalog_)
    if (c.name == name) return c.module;
  throw std::invalid_argument("unknown catalog module '" + name + "'");
}

std::string RankOneBlock::describe_adjunctions() const {
  const auto& p = solution_.params;
  std::string s = "ε(p⊗m) = p·" + eAe_string(p.y) + "·m; η(v) = " + eAe_string(p.u) + "⊗v; ε'(w⊗v) = τ(w)v with τ(1_e) = " +
                  p.tau[0].get_str() + ", τ(ba) = " + p.tau[1].get_str() + "; η'(m) = ";
  const auto& ae = BlockAlgebra::Ae_basis();
  const auto& ea = BlockAlgebra::eA_basis();
  std::string sum;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational& c = p.z(i, j);
      if (c == 0) continue;
      if (!sum.empty()) sum += c < 0 ? " - " : " + ";
      else if (c < 0) sum += "-";
      if (abs(c) != 1) sum += Rational(abs(c)).get_str() + "·";
      sum += alg_.labels()[ae[i]] + "⊗" + alg_.labels()[ea[j]] + "·m";
    }
  return s + (sum.empty() ? "0" : sum);
}

Obj RankOneBlock::translation(const Obj& x, WallDirection dir) const {
  return apply(dir == WallDirection::to_wall ? Letter::Down : Letter::Up, x);
}

BlockModule RankOneBlock::theta(const BlockModule& m) const {
  return apply(FunctorWord({Letter::Up, Letter::Down}, Cat::O), Obj::of(m)).module;
}

Adjunction RankOneBlock::theta_adjunction() const { return compose_adjunctions(pi_adjunction(), shriek_adjunction()); }

FunctorComplex RankOneBlock::theta_complex(ThetaVariant v) const {
  FunctorComplex f(Cat::O, Cat::O);
  if (v == ThetaVariant::star) {
    f.add_summand(0, {FunctorWord({Letter::Up, Letter::Down}, Cat::O), {"Θ*0"}});
    f.add_summand(1, {FunctorWord::id(Cat::O), {"Θ*1"}});
    f.set_differential(0, 0, 0, NatExpr::atom(Atom::make(AtomKind::counit)));
  } else {
    f.add_summand(-1, {FunctorWord::id(Cat::O), {"Θ!-1"}});
    f.add_summand(0, {FunctorWord({Letter::UpShriek, Letter::Down}, Cat::O), {"Θ!0"}});
    f.set_differential(-1, 0, 0, NatExpr::atom(Atom::make(AtomKind::shriek_unit)));
  }
  return f;
}

AdjointComplexes RankOneBlock::theta_pair() const {
  AdjointComplexes p{theta_complex(ThetaVariant::shriek), theta_complex(ThetaVariant::star), {}};
  p.adj[-1] = {identity_adjunction(Cat::O)};
  p.adj[0] = {theta_adjunction()};
  return p;
}

std::vector<Obj> RankOneBlock::generating_set(Cat c) const {
  std::vector<Obj> out;
  if (c == Cat::W) {
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(Obj::vec(n));
    return out;
  }
  for (const auto& e : catalog_) out.push_back(Obj::of(e.module));
  out.push_back(Obj::of(regular_module(alg_)));
  out.push_back(Obj::of(theta(module("P_e"))));
  return out;
}

bool agree_on(const NatEvaluator& ev, const NatExpr& a, const NatExpr& b, const std::vector<Obj>& objs) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (const auto& x : objs)
    if (x.cat == a.source().source && ev(a, x) != ev(b, x)) return false;
  return true;
}

bool agree_on(const NatEvaluator& ev, const ComplexMap& a, const ComplexMap& b, const std::vector<Obj>& objs) {
  for (const auto& x : objs) {
    if (x.cat != a.source.source()) continue;
    ChainMap fa = apply(ev, a, x), fb = apply(ev, b, x);
    for (const auto& [deg, m] : fa) {
      auto it = fb.find(deg);
      if (it == fb.end() ? !m.is_zero() : it->second != m) return false;
    }
    for (const auto& [deg, m] : fb)
      if (!fa.count(deg) && !m.is_zero()) return false;
  }
  return true;
}

}  // namespace heckeo
