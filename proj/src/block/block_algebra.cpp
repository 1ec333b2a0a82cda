#include "heckeo/block/block_algebra.hpp"

#include <stdexcept>

namespace heckeo {

std::string to_string(Vertex x) { return x == Vertex::e ? "e" : "s"; }

BlockAlgebra::BlockAlgebra() {
  paths_ = {{Vertex::e, Vertex::e, ""}, {Vertex::s, Vertex::s, ""}, {Vertex::e, Vertex::s, "a"},
            {Vertex::s, Vertex::e, "b"}, {Vertex::e, Vertex::e, "ba"}};
  labels_ = {"1_e", "1_s", "a", "b", "ba"};
  table_.assign(dim, std::vector<Elt>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& x = paths_[i];
      const Path& y = paths_[j];
      if (y.tgt != x.src) continue;
      std::string word = x.word + y.word;
      if (word.find("ab") != std::string::npos) continue;
      for (std::size_t k = 0; k < dim; ++k)
        if (paths_[k].src == y.src && paths_[k].tgt == x.tgt && paths_[k].word == word) table_[i][j][k] = 1;
    }
}

BlockAlgebra::Elt BlockAlgebra::mul(const Elt& x, const Elt& y) const {
  Elt r{};
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) r[k] += x[i] * y[j] * table_[i][j][k];
    }
  }
  return r;
}

BlockAlgebra::Elt BlockAlgebra::basis(std::size_t i) {
  Elt r{};
  r.at(i) = 1;
  return r;
}

BlockAlgebra::Elt BlockAlgebra::unit() const {
  Elt r{};
  r[one_e] = 1;
  r[one_s] = 1;
  return r;
}

std::vector<std::size_t> BlockAlgebra::paths_from(Vertex v) const {
  std::vector<std::size_t> out;
  for (Vertex t : {Vertex::e, Vertex::s})
    for (std::size_t i = 0; i < dim; ++i)
      if (paths_[i].src == v && paths_[i].tgt == t) out.push_back(i);
  return out;
}

const std::vector<std::size_t>& BlockAlgebra::eAe_basis() {
  static const std::vector<std::size_t> v{one_e, ba};
  return v;
}
const std::vector<std::size_t>& BlockAlgebra::eA_basis() {
  static const std::vector<std::size_t> v{one_e, b, ba};
  return v;
}
const std::vector<std::size_t>& BlockAlgebra::Ae_basis() {
  static const std::vector<std::size_t> v{one_e, ba, a};
  return v;
}

BlockModule::BlockModule(std::size_t de_, std::size_t ds_, QMatrix A_, QMatrix B_)
    : de(de_), ds(ds_), A(std::move(A_)), B(std::move(B_)) {
  if (A.rows() != ds || A.cols() != de || B.rows() != de || B.cols() != ds)
    throw std::invalid_argument("arrow matrices do not match the dimension vector");
}

bool BlockModule::satisfies_relations() const { return (A * B).is_zero(); }

QMatrix BlockModule::action(std::size_t basis) const {
  QMatrix m(dim(), dim());
  switch (basis) {
    case BlockAlgebra::one_e:
      for (std::size_t i = 0; i < de; ++i) m(i, i) = 1;
      break;
    case BlockAlgebra::one_s:
      for (std::size_t i = 0; i < ds; ++i) m(de + i, de + i) = 1;
      break;
    case BlockAlgebra::a: m.set_block(de, 0, A); break;
    case BlockAlgebra::b: m.set_block(0, de, B); break;
    case BlockAlgebra::ba: m.set_block(0, 0, B * A); break;
    default: throw std::out_of_range("block algebra basis index");
  }
  return m;
}

QMatrix BlockModule::action(const BlockAlgebra::Elt& x) const {
  QMatrix m(dim(), dim());
  for (std::size_t i = 0; i < BlockAlgebra::dim; ++i)
    if (x[i] != 0) m += x[i] * action(i);
  return m;
}

std::string describe(const BlockModule& m) {
  return "(" + std::to_string(m.de) + "," + std::to_string(m.ds) + ") a=" + m.A.to_string() + " b=" + m.B.to_string();
}

BlockModule simple_module(Vertex v) {
  return v == Vertex::e ? BlockModule(1, 0, QMatrix(0, 1), QMatrix(1, 0)) : BlockModule(0, 1, QMatrix(1, 0), QMatrix(0, 1));
}

BlockModule projective_module(const BlockAlgebra& alg, Vertex v) {
  auto paths = alg.paths_from(v);
  std::vector<std::size_t> pe, ps;
  for (auto p : paths) (alg.target(p) == Vertex::e ? pe : ps).push_back(p);
  QMatrix A(ps.size(), pe.size()), B(pe.size(), ps.size());
  for (std::size_t j = 0; j < pe.size(); ++j)
    for (std::size_t i = 0; i < ps.size(); ++i) A(i, j) = alg.mul(BlockAlgebra::a, pe[j])[ps[i]];
  for (std::size_t j = 0; j < ps.size(); ++j)
    for (std::size_t i = 0; i < pe.size(); ++i) B(i, j) = alg.mul(BlockAlgebra::b, ps[j])[pe[i]];
  return {pe.size(), ps.size(), A, B};
}

BlockModule dual(const BlockModule& m) { return {m.de, m.ds, m.B.transpose(), m.A.transpose()}; }

std::vector<Rational> module_map_residual(const QMatrix& f, const BlockModule& x, const BlockModule& y) {
  if (f.rows() != y.dim() || f.cols() != x.dim()) throw std::invalid_argument("module map has wrong shape");
  std::vector<Rational> r;
  QMatrix fes = f.block(y.de, 0, y.ds, x.de), fse = f.block(0, x.de, y.de, x.ds);
  for (const QMatrix* q : {&fes, &fse})
    for (std::size_t i = 0; i < q->rows(); ++i)
      for (std::size_t j = 0; j < q->cols(); ++j) r.push_back((*q)(i, j));
  QMatrix fe = f.block(0, 0, y.de, x.de), fs = f.block(y.de, x.de, y.ds, x.ds);
  QMatrix c1 = y.A * fe - fs * x.A, c2 = y.B * fs - fe * x.B;
  for (const QMatrix* q : {&c1, &c2})
    for (std::size_t i = 0; i < q->rows(); ++i)
      for (std::size_t j = 0; j < q->cols(); ++j) r.push_back((*q)(i, j));
  return r;
}

bool is_module_map(const QMatrix& f, const BlockModule& x, const BlockModule& y) {
  if (f.rows() != y.dim() || f.cols() != x.dim()) return false;
  for (const auto& c : module_map_residual(f, x, y))
    if (c != 0) return false;
  return true;
}

std::vector<QMatrix> hom_space(const BlockModule& x, const BlockModule& y) {
  std::size_t ne = y.de * x.de, ns = y.ds * x.ds, n = ne + ns;
  auto unknown = [&](std::size_t k) {
    QMatrix f(y.dim(), x.dim());
    if (k < ne)
      f(k / x.de, k % x.de) = 1;
    else
      f(y.de + (k - ne) / x.ds, x.de + (k - ne) % x.ds) = 1;
    return f;
  };
  std::size_t neq = module_map_residual(QMatrix(y.dim(), x.dim()), x, y).size();
  QMatrix sys(neq, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto r = module_map_residual(unknown(k), x, y);
    for (std::size_t i = 0; i < neq; ++i) sys(i, k) = r[i];
  }
  QMatrix ker = sys.nullspace();
  std::vector<QMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    QMatrix f(y.dim(), x.dim());
    for (std::size_t k = 0; k < n; ++k)
      if (ker(k, c) != 0) f += ker(k, c) * unknown(k);
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const BlockModule& x, const BlockModule& y) { return hom_space(x, y).size(); }

DirectSum direct_sum(const std::vector<BlockModule>& parts) {
  DirectSum d;
  std::size_t de = 0, ds = 0;
  for (const auto& p : parts) {
    de += p.de;
    ds += p.ds;
  }
  QMatrix A(ds, de), B(de, ds);
  std::size_t oe = 0, os = 0;
  for (const auto& p : parts) {
    A.set_block(os, oe, p.A);
    B.set_block(oe, os, p.B);
    QMatrix inj(de + ds, p.dim());
    for (std::size_t i = 0; i < p.de; ++i) inj(oe + i, i) = 1;
    for (std::size_t i = 0; i < p.ds; ++i) inj(de + os + i, p.de + i) = 1;
    d.proj.push_back(inj.transpose());
    d.inj.push_back(std::move(inj));
    oe += p.de;
    os += p.ds;
  }
  d.sum = BlockModule(de, ds, A, B);
  return d;
}

namespace {

QMatrix span(const QMatrix& cols) { return cols.column_space(); }

QMatrix cat_cols(const QMatrix& a, const QMatrix& b) { return hstack(a, b); }

}  // namespace

SubSpace whole(const BlockModule& m) { return {QMatrix::identity(m.de), QMatrix::identity(m.ds)}; }

SubSpace generated_submodule(const BlockModule& m, const QMatrix& gens) {
  SubSpace u{span(gens.block(0, 0, m.de, gens.cols())), span(gens.block(m.de, 0, m.ds, gens.cols()))};
  for (;;) {
    QMatrix ne = span(cat_cols(u.e, m.B * u.s));
    QMatrix ns = span(cat_cols(u.s, m.A * u.e));
    if (ne.cols() == u.e.cols() && ns.cols() == u.s.cols()) return u;
    u = {ne, ns};
  }
}

SubSpace kernel(const QMatrix& f, const BlockModule& x, const BlockModule& y) {
  return {f.block(0, 0, y.de, x.de).nullspace(), f.block(y.de, x.de, y.ds, x.ds).nullspace()};
}

SubSpace image(const QMatrix& f, const BlockModule& x, const BlockModule& y) {
  return {span(f.block(0, 0, y.de, x.de)), span(f.block(y.de, x.de, y.ds, x.ds))};
}

SubSpace radical(const BlockModule& m, const SubSpace& u) { return {span(m.B * u.s), span(m.A * u.e)}; }

BlockModule subquotient(const BlockModule& m, const SubSpace& big, const SubSpace& small, QMatrix* lift) {
  auto complement = [](const QMatrix& s, const QMatrix& u) {
    QMatrix basis = s.column_space();
    std::size_t r = basis.cols();
    QMatrix c(u.rows(), 0);
    for (std::size_t j = 0; j < u.cols(); ++j) {
      QMatrix trial = hstack(basis, u.column(j));
      if (trial.rank() > r) {
        basis = trial;
        ++r;
        c = hstack(c, u.column(j));
      }
    }
    return std::make_pair(s.column_space(), c);
  };
  auto [se, ce] = complement(small.e, big.e);
  auto [ss, cs] = complement(small.s, big.s);
  // coordinates along the complement of a vector in span(small) + span(c)
  auto coords = [](const QMatrix& s, const QMatrix& c, const QMatrix& w) {
    auto x = hstack(s, c).solve(w);
    if (!x) throw std::logic_error("subquotient: subspaces are not stable under the arrows");
    return x->block(s.cols(), 0, c.cols(), w.cols());
  };
  QMatrix A = coords(ss, cs, m.A * ce);
  QMatrix B = coords(se, ce, m.B * cs);
  if (lift) *lift = block_diag(ce, cs);
  return {ce.cols(), cs.cols(), A, B};
}

std::vector<std::array<std::size_t, 2>> loewy_layers(const BlockModule& m) {
  std::vector<std::array<std::size_t, 2>> out;
  SubSpace u = whole(m);
  while (u.e.cols() + u.s.cols() > 0) {
    SubSpace r = radical(m, u);
    out.push_back({u.e.cols() - r.e.cols(), u.s.cols() - r.s.cols()});
    u = r;
  }
  return out;
}

const std::vector<std::pair<std::string, BlockModule>>& indecomposables() {
  static const std::vector<std::pair<std::string, BlockModule>> list = [] {
    BlockAlgebra alg;
    BlockModule ps = projective_module(alg, Vertex::s);
    return std::vector<std::pair<std::string, BlockModule>>{{"L_e", simple_module(Vertex::e)},
                                                            {"L_s", simple_module(Vertex::s)},
                                                            {"P_s", ps},
                                                            {"∇_s", dual(ps)},
                                                            {"P_e", projective_module(alg, Vertex::e)}};
  }();
  return list;
}

bool is_isomorphic(const BlockModule& x, const BlockModule& y) {
  if (x.de != y.de || x.ds != y.ds) return false;
  for (const auto& [name, ind] : indecomposables())
    if (hom_dim(ind, x) != hom_dim(ind, y)) return false;
  return true;
}

std::size_t verma_multiplicity(const BlockModule& m, Vertex v) {
  BlockAlgebra alg;
  BlockModule costd = v == Vertex::e ? simple_module(Vertex::e) : dual(projective_module(alg, Vertex::s));
  return hom_dim(m, costd);
}

namespace {

// Projective cover of m: returns (P, map P -> m, multiplicities).
std::tuple<BlockModule, QMatrix, std::array<std::size_t, 2>> projective_cover(const BlockAlgebra& alg,
                                                                              const BlockModule& m) {
  SubSpace rad = radical(m, whole(m));
  std::vector<BlockModule> parts;
  std::vector<QMatrix> comps;
  std::array<std::size_t, 2> mult{0, 0};
  for (Vertex v : {Vertex::e, Vertex::s}) {
    QMatrix basis = v == Vertex::e ? rad.e : rad.s;
    std::size_t n = m.dim_at(v), r = basis.cols();
    BlockModule pv = projective_module(alg, v);
    auto paths = alg.paths_from(v);
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix unit(n, 1);
      unit(j, 0) = 1;
      QMatrix trial = hstack(basis, unit);
      if (trial.rank() == r) continue;
      basis = trial;
      ++r;
      QMatrix g(m.dim(), 1);
      g(m.offset(v) + j, 0) = 1;
      QMatrix comp(m.dim(), pv.dim());
      for (std::size_t k = 0; k < paths.size(); ++k) comp.set_block(0, k, m.action(paths[k]) * g);
      parts.push_back(pv);
      comps.push_back(comp);
      ++mult[static_cast<int>(v)];
    }
  }
  DirectSum d = direct_sum(parts);
  QMatrix pi(m.dim(), d.sum.dim());
  for (std::size_t k = 0; k < parts.size(); ++k) pi += comps[k] * d.proj[k];
  return {d.sum, pi, mult};
}

}  // namespace

ProjectiveResolution projective_resolution(const BlockAlgebra& alg, const BlockModule& m) {
  ProjectiveResolution res;
  BlockModule target = m;
  QMatrix incl = QMatrix::identity(m.dim());
  for (int step = 0; target.dim() > 0; ++step) {
    if (step > 32) throw std::logic_error("projective resolution did not terminate");
    auto [p, pi, mult] = projective_cover(alg, target);
    QMatrix d = incl * pi;
    res.terms.push_back(p);
    res.multiplicities.push_back(mult);
    res.maps.push_back(d);
    QMatrix ki;
    BlockModule k = submodule(p, kernel(pi, p, target), &ki);
    target = k;
    incl = ki;
  }
  return res;
}

std::vector<std::size_t> ext_dims(const BlockAlgebra& alg, const BlockModule& x, const BlockModule& y) {
  auto res = projective_resolution(alg, x);
  std::size_t n = res.terms.size();
  std::vector<std::vector<QMatrix>> homs(n);
  for (std::size_t i = 0; i < n; ++i) homs[i] = hom_space(res.terms[i], y);
  // rank of f -> f∘d_{i+1} on Hom(P_i, Y)
  std::vector<std::size_t> rk(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const QMatrix& d = res.maps[i + 1];
    std::size_t len = y.dim() * d.cols();
    QMatrix img(len, homs[i].size());
    for (std::size_t c = 0; c < homs[i].size(); ++c) {
      QMatrix g = homs[i][c] * d;
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t q = 0; q < g.cols(); ++q) img(r * g.cols() + q, c) = g(r, q);
    }
    rk[i] = img.rank();
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = homs[i].size() - rk[i] - (i ? rk[i - 1] : 0);
  return out;
}

}  // namespace heckeo
