#include "heckeo/block/functors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heckeo {

Cat input_cat(Letter l) { return l == Letter::Down ? Cat::O : Cat::W; }
Cat output_cat(Letter l) { return l == Letter::Down ? Cat::W : Cat::O; }

std::string to_string(Letter l) {
  switch (l) {
    case Letter::Up: return "π*";
    case Letter::UpShriek: return "π!";
    case Letter::Down: return "π_*";
  }
  return "?";
}

namespace {

std::string letters_string(const std::vector<Letter>& ls) {
  std::string s;
  for (auto l : ls) s += to_string(l);
  return s;
}

void check_letters(const std::vector<Letter>& ls, Cat source) {
  Cat c = source;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (input_cat(*it) != c) throw std::invalid_argument("functor word does not compose: " + letters_string(ls));
    c = output_cat(*it);
  }
}

const BlockModule& regular_pe() {
  static const BlockModule pe = projective_module(BlockAlgebra(), Vertex::e);
  return pe;
}

}  // namespace

FunctorWord::FunctorWord(std::vector<Letter> l, Cat src) : letters(std::move(l)), source(src) {
  check_letters(letters, source);
}

std::string FunctorWord::to_string() const { return letters.empty() ? "id" : letters_string(letters); }

FunctorWord concat(const FunctorWord& outer, const FunctorWord& inner) {
  if (outer.source != inner.target()) throw std::invalid_argument("cannot compose functors " + outer.to_string() + " and " + inner.to_string());
  std::vector<Letter> l = outer.letters;
  l.insert(l.end(), inner.letters.begin(), inner.letters.end());
  return {l, inner.source};
}

ObjSum direct_sum(Cat cat, const std::vector<Obj>& parts) {
  ObjSum out;
  if (cat == Cat::O) {
    std::vector<BlockModule> ms;
    for (const auto& p : parts) ms.push_back(p.module);
    DirectSum d = direct_sum(ms);
    out.sum = Obj::of(d.sum);
    out.inj = std::move(d.inj);
    out.proj = std::move(d.proj);
    return out;
  }
  std::size_t n = 0;
  for (const auto& p : parts) n += p.vdim;
  std::size_t off = 0;
  for (const auto& p : parts) {
    QMatrix inj(n, p.vdim);
    for (std::size_t i = 0; i < p.vdim; ++i) inj(off + i, i) = 1;
    out.proj.push_back(inj.transpose());
    out.inj.push_back(std::move(inj));
    off += p.vdim;
  }
  out.sum = Obj::vec(n);
  return out;
}

Obj apply(Letter l, const Obj& x) {
  if (x.cat != input_cat(l)) throw std::invalid_argument("functor " + to_string(l) + " applied to an object of the wrong category");
  if (l == Letter::Down) return Obj::vec(x.module.de);
  const BlockModule& pe = regular_pe();
  QMatrix id = QMatrix::identity(x.vdim);
  return Obj::of(BlockModule(pe.de * x.vdim, pe.ds * x.vdim, kron(pe.A, id), kron(pe.B, id)));
}

Obj apply(const FunctorWord& w, const Obj& x) {
  if (x.cat != w.source) throw std::invalid_argument("functor " + w.to_string() + " applied to an object of the wrong category");
  Obj cur = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

QMatrix apply(Letter l, const QMatrix& f, const Obj& x, const Obj& y) {
  if (l == Letter::Down) return f.block(0, 0, y.module.de, x.module.de);
  return kron(QMatrix::identity(regular_pe().dim()), f);
}

QMatrix apply(const FunctorWord& w, const QMatrix& f, const Obj& x, const Obj& y) {
  QMatrix g = f;
  Obj a = x, b = y;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    g = apply(*it, g, a, b);
    a = apply(*it, a);
    b = apply(*it, b);
  }
  return g;
}

Atom Atom::make(AtomKind kind, std::vector<Rational> w) {
  using L = Letter;
  Atom a{kind, std::move(w), {}, {}};
  bool needs_w = kind == AtomKind::mult_down || kind == AtomKind::mult_up || kind == AtomKind::mult_up_shriek;
  if (needs_w != (a.w.size() == 2)) throw std::invalid_argument("atom parameter must be an element of eAe");
  switch (kind) {
    case AtomKind::counit: a.src = {{L::Up, L::Down}, Cat::O}; a.tgt = FunctorWord::id(Cat::O); break;
    case AtomKind::unit: a.src = FunctorWord::id(Cat::W); a.tgt = {{L::Down, L::Up}, Cat::W}; break;
    case AtomKind::shriek_counit: a.src = {{L::Down, L::UpShriek}, Cat::W}; a.tgt = FunctorWord::id(Cat::W); break;
    case AtomKind::shriek_unit: a.src = FunctorWord::id(Cat::O); a.tgt = {{L::UpShriek, L::Down}, Cat::O}; break;
    case AtomKind::mult_down: a.src = a.tgt = {{L::Down}, Cat::O}; break;
    case AtomKind::mult_up: a.src = a.tgt = {{L::Up}, Cat::W}; break;
    case AtomKind::mult_up_shriek: a.src = a.tgt = {{L::UpShriek}, Cat::W}; break;
  }
  return a;
}

namespace {

std::string w_string(const std::vector<Rational>& w) {
  return "(" + w[0].get_str() + "," + w[1].get_str() + ")";
}

}  // namespace

std::string Atom::key() const {
  switch (kind) {
    case AtomKind::counit: return "eps";
    case AtomKind::unit: return "eta";
    case AtomKind::shriek_counit: return "eps!";
    case AtomKind::shriek_unit: return "eta!";
    case AtomKind::mult_down: return "w_" + w_string(w);
    case AtomKind::mult_up: return "w*" + w_string(w);
    case AtomKind::mult_up_shriek: return "w!" + w_string(w);
  }
  return "?";
}

std::string Atom::to_string() const {
  switch (kind) {
    case AtomKind::counit: return "ε";
    case AtomKind::unit: return "η";
    case AtomKind::shriek_counit: return "ε'";
    case AtomKind::shriek_unit: return "η'";
    default: return "m" + w_string(w);
  }
}

std::string Whiskered::key() const {
  return letters_string(left) + "[" + atom.key() + "]" + letters_string(right) + (source == Cat::O ? "@O" : "@W");
}

std::string NatExpr::Term::key() const {
  std::string k;
  for (const auto& w : chain) k += w.key() + ";";
  return k;
}

NatExpr::NatExpr(FunctorWord src, FunctorWord tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
  if (src_.source != tgt_.source || src_.target() != tgt_.target())
    throw std::invalid_argument("natural transformation between functors with different (co)domains");
}

NatExpr NatExpr::identity(const FunctorWord& w) {
  NatExpr e(w, w);
  e.terms_.push_back({Rational(1), {}});
  return e;
}

NatExpr NatExpr::atom(const Atom& a) {
  NatExpr e(a.src, a.tgt);
  e.terms_.push_back({Rational(1), {Whiskered{{}, a, {}, a.src.source}}});
  return e;
}

void NatExpr::canonicalize() {
  std::map<std::string, Term> merged;
  for (auto& t : terms_) {
    auto [it, inserted] = merged.try_emplace(t.key(), t);
    if (!inserted) it->second.coeff += t.coeff;
  }
  terms_.clear();
  for (auto& [k, t] : merged)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

NatExpr& NatExpr::operator+=(const NatExpr& o) {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw std::invalid_argument("adding natural transformations between different functors");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

NatExpr& NatExpr::operator-=(const NatExpr& o) { return *this += -o; }

NatExpr NatExpr::operator-() const { return scaled(Rational(-1)); }

NatExpr NatExpr::scaled(const Rational& c) const {
  NatExpr r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  r.canonicalize();
  return r;
}

std::string NatExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    s += first ? (t.coeff < 0 ? "-" : "") : (t.coeff < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) s += mag.get_str() + "·";
    if (t.chain.empty()) {
      s += "1";
      continue;
    }
    for (std::size_t k = t.chain.size(); k-- > 0;) {
      const auto& w = t.chain[k];
      std::string piece = w.atom.to_string();
      if (!w.left.empty()) piece = "1" + letters_string(w.left) + " " + piece;
      if (!w.right.empty()) piece += " 1" + letters_string(w.right);
      s += piece;
      if (k) s += " ∘ ";
    }
  }
  return s;
}

bool operator==(const NatExpr& a, const NatExpr& b) {
  if (!(a.src_ == b.src_) || !(a.tgt_ == b.tgt_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].key() != b.terms_[i].key()) return false;
  return true;
}

NatExpr operator+(NatExpr a, const NatExpr& b) { return a += b; }
NatExpr operator-(NatExpr a, const NatExpr& b) { return a -= b; }

NatExpr compose(const NatExpr& outer, const NatExpr& inner) {
  if (!(inner.tgt_ == outer.src_))
    throw std::invalid_argument("cannot compose " + outer.src_.to_string() + " -> " + outer.tgt_.to_string() + " after " +
                                inner.src_.to_string() + " -> " + inner.tgt_.to_string());
  NatExpr r(inner.src_, outer.tgt_);
  for (const auto& ti : inner.terms_)
    for (const auto& to : outer.terms_) {
      NatExpr::Term t{ti.coeff * to.coeff, ti.chain};
      t.chain.insert(t.chain.end(), to.chain.begin(), to.chain.end());
      r.terms_.push_back(std::move(t));
    }
  r.canonicalize();
  return r;
}

NatExpr whisker_left(const std::vector<Letter>& left, const NatExpr& e) {
  auto extend = [&](const FunctorWord& w) {
    std::vector<Letter> l = left;
    l.insert(l.end(), w.letters.begin(), w.letters.end());
    return FunctorWord(l, w.source);
  };
  NatExpr r(extend(e.src_), extend(e.tgt_));
  for (auto t : e.terms_) {
    for (auto& w : t.chain) w.left.insert(w.left.begin(), left.begin(), left.end());
    r.terms_.push_back(std::move(t));
  }
  r.canonicalize();
  return r;
}

NatExpr whisker_right(const NatExpr& e, const FunctorWord& right) {
  auto extend = [&](const FunctorWord& w) {
    if (w.source != right.target()) throw std::invalid_argument("whiskering by a functor with the wrong codomain");
    std::vector<Letter> l = w.letters;
    l.insert(l.end(), right.letters.begin(), right.letters.end());
    return FunctorWord(l, right.source);
  };
  NatExpr r(extend(e.src_), extend(e.tgt_));
  for (auto t : e.terms_) {
    for (auto& w : t.chain) {
      w.right.insert(w.right.end(), right.letters.begin(), right.letters.end());
      w.source = right.source;
    }
    r.terms_.push_back(std::move(t));
  }
  r.canonicalize();
  return r;
}

NatExpr identify_shriek(const NatExpr& e) {
  auto fix = [](std::vector<Letter>& ls) {
    for (auto& l : ls)
      if (l == Letter::UpShriek) l = Letter::Up;
  };
  auto fixw = [&](FunctorWord w) {
    fix(w.letters);
    return w;
  };
  NatExpr r(fixw(e.src_), fixw(e.tgt_));
  for (auto t : e.terms_) {
    for (auto& w : t.chain) {
      fix(w.left);
      fix(w.right);
      fix(w.atom.src.letters);
      fix(w.atom.tgt.letters);
    }
    r.terms_.push_back(std::move(t));
  }
  r.canonicalize();
  return r;
}

BlockAlgebra::Elt NatEvaluator::eAe_element(const std::vector<Rational>& w) const {
  BlockAlgebra::Elt x{};
  x[BlockAlgebra::one_e] = w.at(0);
  x[BlockAlgebra::ba] = w.at(1);
  return x;
}

QMatrix NatEvaluator::right_mult_on_Ae(const std::vector<Rational>& w) const {
  const auto& ae = BlockAlgebra::Ae_basis();
  QMatrix r(ae.size(), ae.size());
  auto we = eAe_element(w);
  for (std::size_t p = 0; p < ae.size(); ++p) {
    auto prod = alg_->mul(BlockAlgebra::basis(ae[p]), we);
    for (std::size_t k = 0; k < ae.size(); ++k) r(k, p) = prod[ae[k]];
  }
  return r;
}

QMatrix NatEvaluator::atom(const Atom& a, const Obj& x) const {
  const auto& ae = BlockAlgebra::Ae_basis();
  switch (a.kind) {
    case AtomKind::counit: {
      const BlockModule& m = x.module;
      std::size_t n = m.de;
      QMatrix out(m.dim(), ae.size() * n);
      QMatrix ry = m.action(eAe_element(params_.y));
      for (std::size_t p = 0; p < ae.size(); ++p) {
        QMatrix r = m.action(ae[p]) * ry;
        out.set_block(0, p * n, r.block(0, 0, m.dim(), n));
      }
      return out;
    }
    case AtomKind::unit: {
      QMatrix id = QMatrix::identity(x.vdim);
      return vstack(params_.u[0] * id, params_.u[1] * id);
    }
    case AtomKind::shriek_counit: {
      QMatrix id = QMatrix::identity(x.vdim);
      return hstack(params_.tau[0] * id, params_.tau[1] * id);
    }
    case AtomKind::shriek_unit: {
      const BlockModule& m = x.module;
      const auto& ea = BlockAlgebra::eA_basis();
      QMatrix out(ae.size() * m.de, m.dim());
      for (std::size_t p = 0; p < ae.size(); ++p) {
        QMatrix row(m.de, m.dim());
        for (std::size_t q = 0; q < ea.size(); ++q)
          if (params_.z(p, q) != 0) row += params_.z(p, q) * m.action(ea[q]).block(0, 0, m.de, m.dim());
        out.set_block(p * m.de, 0, row);
      }
      return out;
    }
    case AtomKind::mult_down: {
      const BlockModule& m = x.module;
      return m.action(eAe_element(a.w)).block(0, 0, m.de, m.de);
    }
    case AtomKind::mult_up:
    case AtomKind::mult_up_shriek: return kron(right_mult_on_Ae(a.w), QMatrix::identity(x.vdim));
  }
  throw std::logic_error("unknown atom");
}

QMatrix NatEvaluator::whiskered(const Whiskered& w, const Obj& x) const {
  Obj y = apply(FunctorWord(w.right, w.source), x);
  QMatrix c = atom(w.atom, y);
  Obj from = apply(w.atom.src, y), to = apply(w.atom.tgt, y);
  return apply(FunctorWord(w.left, w.atom.tgt.target()), c, from, to);
}

QMatrix NatEvaluator::operator()(const NatExpr& e, const Obj& x) const {
  if (x.cat != e.source().source) throw std::invalid_argument("natural transformation evaluated on the wrong category");
  std::size_t n = apply(e.source(), x).dim(), m = apply(e.target(), x).dim();
  QMatrix out(m, n);
  for (const auto& t : e.terms()) {
    QMatrix c = QMatrix::identity(n);
    for (const auto& w : t.chain) c = whiskered(w, x) * c;
    out += t.coeff * c;
  }
  return out;
}

Adjunction identity_adjunction(Cat c) {
  auto id = FunctorWord::id(c);
  return {"id", id, id, NatExpr::identity(id), NatExpr::identity(id)};
}

Adjunction pi_adjunction() {
  return {"(π*,π_*)", FunctorWord({Letter::Up}, Cat::W), FunctorWord({Letter::Down}, Cat::O),
          NatExpr::atom(Atom::make(AtomKind::unit)), NatExpr::atom(Atom::make(AtomKind::counit))};
}

Adjunction shriek_adjunction() {
  return {"(π_*,π!)", FunctorWord({Letter::Down}, Cat::O), FunctorWord({Letter::UpShriek}, Cat::W),
          NatExpr::atom(Atom::make(AtomKind::shriek_unit)), NatExpr::atom(Atom::make(AtomKind::shriek_counit))};
}

Adjunction compose_adjunctions(const Adjunction& outer, const Adjunction& inner) {
  Adjunction r{outer.name + "∘" + inner.name, concat(outer.left, inner.left), concat(inner.right, outer.right),
               NatExpr(FunctorWord::id(inner.left.source), FunctorWord::id(inner.left.source)),
               NatExpr(FunctorWord::id(outer.left.target()), FunctorWord::id(outer.left.target()))};
  r.unit = compose(whisker(inner.right.letters, outer.unit, inner.left), inner.unit);
  r.counit = compose(outer.counit, whisker(outer.left.letters, inner.counit, outer.right));
  return r;
}

NatExpr transpose(const NatExpr& phi, const Adjunction& f, const Adjunction& g) {
  if (!(phi.source() == f.right) || !(phi.target() == g.right))
    throw std::invalid_argument("transpose: transformation does not run between the given right adjoints");
  return compose(whisker_right(g.counit, f.left),
                 compose(whisker(g.left.letters, phi, f.left), whisker_left(g.left.letters, f.unit)));
}

NatExpr right_transpose(const NatExpr& psi, const Adjunction& f, const Adjunction& g) {
  if (!(psi.source() == g.left) || !(psi.target() == f.left))
    throw std::invalid_argument("right transpose: transformation does not run between the given left adjoints");
  return compose(whisker_left(g.right.letters, f.counit),
                 compose(whisker(g.right.letters, psi, f.right), whisker_right(g.unit, f.right)));
}

}  // namespace heckeo
