#include "heckeo/block/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace heckeo {

namespace {

std::string join_key(const std::vector<std::string>& key) {
  std::string s;
  for (const auto& k : key) s += k + "|";
  return s;
}

NatMatrix zero_matrix(const std::vector<Summand>& to, const std::vector<Summand>& from) {
  NatMatrix m;
  for (const auto& t : to) {
    std::vector<NatExpr> row;
    for (const auto& f : from) row.emplace_back(f.word, t.word);
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::string> concat_keys(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> k = a;
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

// index of the summand with this key in `terms`
std::size_t find_key(const std::vector<Summand>& terms, const std::vector<std::string>& key) {
  std::size_t found = terms.size();
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (terms[k].key == key) {
      if (found != terms.size()) throw std::logic_error("ambiguous summand key " + join_key(key));
      found = k;
    }
  if (found == terms.size()) throw std::logic_error("missing summand key " + join_key(key));
  return found;
}

}  // namespace

FunctorComplex FunctorComplex::identity(Cat c) {
  FunctorComplex f(c, c);
  f.add_summand(0, {FunctorWord::id(c), {}});
  return f;
}

const std::vector<Summand>& FunctorComplex::term(int i) const {
  static const std::vector<Summand> none;
  auto it = terms_.find(i);
  return it == terms_.end() ? none : it->second;
}

NatMatrix FunctorComplex::differential(int i) const {
  NatMatrix m = zero_matrix(term(i + 1), term(i));
  auto it = diff_.find(i);
  if (it != diff_.end())
    for (const auto& [rc, e] : it->second) m[rc.first][rc.second] = e;
  return m;
}

void FunctorComplex::add_summand(int degree, Summand s) {
  if (s.word.source != source_ || s.word.target() != target_)
    throw std::invalid_argument("summand " + s.word.to_string() + " has the wrong source or target");
  terms_[degree].push_back(std::move(s));
}

void FunctorComplex::set_differential(int i, std::size_t to, std::size_t from, NatExpr d) {
  const auto& src = term(i);
  const auto& tgt = term(i + 1);
  if (from >= src.size() || to >= tgt.size()) throw std::out_of_range("differential entry out of range");
  if (!(d.source() == src[from].word) || !(d.target() == tgt[to].word))
    throw std::invalid_argument("differential entry has the wrong source or target");
  auto& row = diff_[i];
  row.erase({to, from});
  if (!d.is_zero()) row.emplace(std::make_pair(to, from), std::move(d));
}

void FunctorComplex::sort_summands() {
  std::map<int, std::vector<std::size_t>> new_index;
  for (auto& [deg, list] : terms_) {
    std::vector<std::size_t> order(list.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return list[x].key < list[y].key; });
    std::vector<Summand> sorted;
    std::vector<std::size_t> inv(list.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted.push_back(list[order[k]]);
      inv[order[k]] = k;
    }
    list = std::move(sorted);
    new_index[deg] = std::move(inv);
  }
  for (auto& [deg, entries] : diff_) {
    std::map<std::pair<std::size_t, std::size_t>, NatExpr> moved;
    for (auto& [rc, e] : entries) moved.emplace(std::make_pair(new_index[deg + 1][rc.first], new_index[deg][rc.second]), e);
    entries = std::move(moved);
  }
}

std::string FunctorComplex::to_string() const {
  std::string s;
  for (const auto& [deg, list] : terms_) {
    s += "[" + std::to_string(deg) + "] ";
    for (std::size_t k = 0; k < list.size(); ++k) s += (k ? " ⊕ " : "") + list[k].word.to_string();
    s += "\n";
    auto it = diff_.find(deg);
    if (it == diff_.end()) continue;
    for (const auto& [rc, e] : it->second)
      s += "  d(" + list[rc.second].word.to_string() + " -> " + term(deg + 1)[rc.first].word.to_string() + ") = " +
           e.to_string() + "\n";
  }
  return s;
}

bool operator==(const FunctorComplex& a, const FunctorComplex& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [deg, list] : a.terms_) {
    const auto& other = b.term(deg);
    if (other.size() != list.size()) return false;
    for (std::size_t k = 0; k < list.size(); ++k)
      if (!(list[k].word == other[k].word) || list[k].key != other[k].key) return false;
  }
  for (const auto& [deg, list] : a.terms_) {
    auto da = a.differential(deg), db = b.differential(deg);
    for (std::size_t r = 0; r < da.size(); ++r)
      for (std::size_t c = 0; c < da[r].size(); ++c)
        if (!(da[r][c] == db[r][c])) return false;
  }
  return true;
}

FunctorComplex compose(const FunctorComplex& f, const FunctorComplex& g) {
  if (f.source() != g.target()) throw std::invalid_argument("functor complexes are not composable");
  FunctorComplex fg(g.source(), f.target());
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::pair<int, std::size_t>> where;
  for (const auto& [i, fl] : f.terms())
    for (const auto& [j, gl] : g.terms())
      for (std::size_t a = 0; a < fl.size(); ++a)
        for (std::size_t b = 0; b < gl.size(); ++b) {
          where[{i, a, j, b}] = {i + j, fg.term(i + j).size()};
          fg.add_summand(i + j, {concat(fl[a].word, gl[b].word), concat_keys(fl[a].key, gl[b].key)});
        }
  auto idx = [&](int i, std::size_t a, int j, std::size_t b) { return where.at({i, a, j, b}).second; };
  for (const auto& [i, fl] : f.terms()) {
    NatMatrix df = f.differential(i);
    for (const auto& [j, gl] : g.terms())
      for (std::size_t a = 0; a < fl.size(); ++a)
        for (std::size_t b = 0; b < gl.size(); ++b) {
          for (std::size_t a2 = 0; a2 < df.size(); ++a2)
            if (!df[a2][a].is_zero())
              fg.set_differential(i + j, idx(i + 1, a2, j, b), idx(i, a, j, b), whisker_right(df[a2][a], gl[b].word));
          NatMatrix dg = g.differential(j);
          for (std::size_t b2 = 0; b2 < dg.size(); ++b2)
            if (!dg[b2][b].is_zero()) {
              NatExpr e = whisker_left(fl[a].word.letters, dg[b2][b]);
              fg.set_differential(i + j, idx(i, a, j + 1, b2), idx(i, a, j, b), i % 2 == 0 ? e : -e);
            }
        }
  }
  fg.sort_summands();
  return fg;
}

NatExpr ComplexMap::at(int degree, std::size_t to, std::size_t from) const {
  auto it = comp.find(degree);
  if (it != comp.end()) return it->second.at(to).at(from);
  return NatExpr(source.term(degree).at(from).word, target.term(degree).at(to).word);
}

ComplexMap ComplexMap::identity(const FunctorComplex& f) {
  ComplexMap m{f, f, {}};
  for (const auto& [deg, list] : f.terms()) {
    NatMatrix id = zero_matrix(list, list);
    for (std::size_t k = 0; k < list.size(); ++k) id[k][k] = NatExpr::identity(list[k].word);
    m.comp[deg] = std::move(id);
  }
  return m;
}

namespace {

std::set<int> degrees(const FunctorComplex& a, const FunctorComplex& b) {
  std::set<int> d;
  for (const auto& [deg, l] : a.terms()) d.insert(deg);
  for (const auto& [deg, l] : b.terms()) d.insert(deg);
  return d;
}

}  // namespace

ComplexMap compose(const ComplexMap& outer, const ComplexMap& inner) {
  ComplexMap r{inner.source, outer.target, {}};
  for (int deg : degrees(inner.source, outer.target)) {
    const auto& from = inner.source.term(deg);
    const auto& mid = inner.target.term(deg);
    const auto& to = outer.target.term(deg);
    if (outer.source.term(deg).size() != mid.size()) throw std::invalid_argument("complex maps are not composable");
    NatMatrix m = zero_matrix(to, from);
    for (std::size_t c = 0; c < to.size(); ++c)
      for (std::size_t a = 0; a < from.size(); ++a)
        for (std::size_t k = 0; k < mid.size(); ++k) m[c][a] += compose(outer.at(deg, c, k), inner.at(deg, k, a));
    r.comp[deg] = std::move(m);
  }
  return r;
}

ComplexMap whisker_right(const ComplexMap& phi, const FunctorComplex& h) {
  ComplexMap r{compose(phi.source, h), compose(phi.target, h), {}};
  for (int deg : degrees(r.source, r.target)) r.comp[deg] = zero_matrix(r.target.term(deg), r.source.term(deg));
  for (int i : degrees(phi.source, phi.target)) {
    const auto& xs = phi.source.term(i);
    const auto& ys = phi.target.term(i);
    for (const auto& [j, hl] : h.terms())
      for (std::size_t b = 0; b < hl.size(); ++b)
        for (std::size_t a = 0; a < xs.size(); ++a)
          for (std::size_t c = 0; c < ys.size(); ++c) {
            std::size_t from = find_key(r.source.term(i + j), concat_keys(xs[a].key, hl[b].key));
            std::size_t to = find_key(r.target.term(i + j), concat_keys(ys[c].key, hl[b].key));
            r.comp[i + j][to][from] = whisker_right(phi.at(i, c, a), hl[b].word);
          }
  }
  return r;
}

ComplexMap whisker_left(const FunctorComplex& h, const ComplexMap& phi) {
  ComplexMap r{compose(h, phi.source), compose(h, phi.target), {}};
  for (int deg : degrees(r.source, r.target)) r.comp[deg] = zero_matrix(r.target.term(deg), r.source.term(deg));
  for (int j : degrees(phi.source, phi.target)) {
    const auto& xs = phi.source.term(j);
    const auto& ys = phi.target.term(j);
    for (const auto& [i, hl] : h.terms())
      for (std::size_t b = 0; b < hl.size(); ++b)
        for (std::size_t a = 0; a < xs.size(); ++a)
          for (std::size_t c = 0; c < ys.size(); ++c) {
            std::size_t from = find_key(r.source.term(i + j), concat_keys(hl[b].key, xs[a].key));
            std::size_t to = find_key(r.target.term(i + j), concat_keys(hl[b].key, ys[c].key));
            r.comp[i + j][to][from] = whisker_left(hl[b].word.letters, phi.at(j, c, a));
          }
  }
  return r;
}

ChainComplex ChainComplex::single(const Obj& x, int degree) {
  ChainComplex c;
  c.cat = x.cat;
  c.terms[degree] = x;
  return c;
}

Obj ChainComplex::term(int i) const {
  auto it = terms.find(i);
  return it == terms.end() ? Obj::zero(cat) : it->second;
}

QMatrix ChainComplex::differential(int i) const {
  auto it = d.find(i);
  if (it != d.end()) return it->second;
  return QMatrix(term(i + 1).dim(), term(i).dim());
}

std::pair<int, int> ChainComplex::range() const {
  int lo = 1, hi = 0;
  bool any = false;
  for (const auto& [deg, x] : terms) {
    if (x.dim() == 0) continue;
    if (!any) lo = deg;
    hi = deg;
    any = true;
  }
  return {lo, hi};
}

bool ChainComplex::squares_to_zero() const {
  auto [lo, hi] = range();
  for (int i = lo; i < hi; ++i)
    if (!(differential(i + 1) * differential(i)).is_zero()) return false;
  return true;
}

namespace {

std::map<int, ObjSum> summand_sums(const FunctorComplex& f, const Obj& x) {
  std::map<int, ObjSum> out;
  for (const auto& [deg, list] : f.terms()) {
    std::vector<Obj> parts;
    for (const auto& s : list) parts.push_back(apply(s.word, x));
    out[deg] = direct_sum(f.target(), parts);
  }
  return out;
}

}  // namespace

ChainComplex apply(const NatEvaluator& ev, const FunctorComplex& f, const Obj& x) {
  ChainComplex c;
  c.cat = f.target();
  auto sums = summand_sums(f, x);
  for (const auto& [deg, s] : sums) {
    c.terms[deg] = s.sum;
    for (const auto& sm : f.term(deg)) c.labels[deg].push_back(sm.word.to_string());
  }
  for (const auto& [deg, s] : sums) {
    auto next = sums.find(deg + 1);
    if (next == sums.end()) continue;
    NatMatrix d = f.differential(deg);
    QMatrix m(next->second.sum.dim(), s.sum.dim());
    for (std::size_t b = 0; b < d.size(); ++b)
      for (std::size_t a = 0; a < d[b].size(); ++a)
        if (!d[b][a].is_zero()) m += next->second.inj[b] * ev(d[b][a], x) * s.proj[a];
    c.d[deg] = std::move(m);
  }
  return c;
}

ChainComplex apply(const NatEvaluator& ev, const FunctorComplex& f, const ChainComplex& c) {
  ChainComplex out;
  out.cat = f.target();
  // summands (i, a, j) of total degree i + j, ordered lexicographically
  std::map<int, std::vector<std::tuple<int, std::size_t, int>>> parts;
  for (const auto& [i, fl] : f.terms())
    for (std::size_t a = 0; a < fl.size(); ++a)
      for (const auto& [j, x] : c.terms) parts[i + j].emplace_back(i, a, j);
  std::map<int, ObjSum> sums;
  for (const auto& [n, list] : parts) {
    std::vector<Obj> objs;
    for (const auto& [i, a, j] : list) {
      objs.push_back(apply(f.term(i)[a].word, c.term(j)));
      out.labels[n].push_back(f.term(i)[a].word.to_string() + "(C^" + std::to_string(j) + ")");
    }
    sums[n] = direct_sum(out.cat, objs);
    out.terms[n] = sums[n].sum;
  }
  auto index = [&](int n, std::tuple<int, std::size_t, int> key) -> std::optional<std::size_t> {
    auto it = parts.find(n);
    if (it == parts.end()) return std::nullopt;
    auto pos = std::find(it->second.begin(), it->second.end(), key);
    if (pos == it->second.end()) return std::nullopt;
    return static_cast<std::size_t>(pos - it->second.begin());
  };
  for (const auto& [n, list] : parts) {
    if (!sums.count(n + 1)) continue;
    QMatrix m(sums[n + 1].sum.dim(), sums[n].sum.dim());
    for (std::size_t k = 0; k < list.size(); ++k) {
      auto [i, a, j] = list[k];
      const FunctorWord& w = f.term(i)[a].word;
      NatMatrix df = f.differential(i);
      for (std::size_t b = 0; b < df.size(); ++b) {
        if (df[b][a].is_zero()) continue;
        auto to = index(n + 1, {i + 1, b, j});
        if (to) m += sums[n + 1].inj[*to] * ev(df[b][a], c.term(j)) * sums[n].proj[k];
      }
      auto to = index(n + 1, {i, a, j + 1});
      if (to) {
        QMatrix g = apply(w, c.differential(j), c.term(j), c.term(j + 1));
        if (i % 2 != 0) g = -g;
        m += sums[n + 1].inj[*to] * g * sums[n].proj[k];
      }
    }
    out.d[n] = std::move(m);
  }
  return out;
}

ChainMap apply(const NatEvaluator& ev, const ComplexMap& phi, const Obj& x) {
  auto src = summand_sums(phi.source, x);
  auto tgt = summand_sums(phi.target, x);
  ChainMap out;
  for (int deg : degrees(phi.source, phi.target)) {
    auto s = src.find(deg);
    auto t = tgt.find(deg);
    std::size_t ns = s == src.end() ? 0 : s->second.sum.dim();
    std::size_t nt = t == tgt.end() ? 0 : t->second.sum.dim();
    QMatrix m(nt, ns);
    if (ns && nt)
      for (std::size_t c = 0; c < phi.target.term(deg).size(); ++c)
        for (std::size_t a = 0; a < phi.source.term(deg).size(); ++a) {
          NatExpr e = phi.at(deg, c, a);
          if (!e.is_zero()) m += t->second.inj[c] * ev(e, x) * s->second.proj[a];
        }
    out[deg] = std::move(m);
  }
  return out;
}

std::map<int, std::size_t> homology_dims(const ChainComplex& c) {
  std::map<int, std::size_t> out;
  for (const auto& [deg, x] : c.terms)
    out[deg] = x.dim() - c.differential(deg).rank() - c.differential(deg - 1).rank();
  return out;
}

BlockModule homology_module(const ChainComplex& c, int i) {
  if (c.cat != Cat::O) throw std::invalid_argument("homology module of a complex of vector spaces");
  const BlockModule& m = c.term(i).module;
  SubSpace z = kernel(c.differential(i), m, c.term(i + 1).module);
  SubSpace b = image(c.differential(i - 1), c.term(i - 1).module, m);
  return subquotient(m, z, b);
}

namespace {

QMatrix map_at(const ChainMap& f, int i, std::size_t rows, std::size_t cols) {
  auto it = f.find(i);
  if (it != f.end()) return it->second;
  return QMatrix(rows, cols);
}

std::set<int> all_degrees(const ChainComplex& c, const ChainComplex& d) {
  std::set<int> s;
  for (const auto& [deg, x] : c.terms) s.insert(deg);
  for (const auto& [deg, x] : d.terms) s.insert(deg);
  return s;
}

}  // namespace

bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f) {
  for (int i : all_degrees(c, d)) {
    QMatrix fi = map_at(f, i, d.term(i).dim(), c.term(i).dim());
    QMatrix fn = map_at(f, i + 1, d.term(i + 1).dim(), c.term(i + 1).dim());
    if (fn * c.differential(i) != d.differential(i) * fi) return false;
  }
  return true;
}

bool is_quasi_isomorphism(const ChainComplex& c, const ChainComplex& d, const ChainMap& f, std::string* why) {
  auto hc = homology_dims(c);
  auto hd = homology_dims(d);
  for (int i : all_degrees(c, d)) {
    std::size_t a = hc.count(i) ? hc[i] : 0, b = hd.count(i) ? hd[i] : 0;
    QMatrix z = c.differential(i).nullspace();
    QMatrix bd = d.differential(i - 1).column_space();
    QMatrix fi = map_at(f, i, d.term(i).dim(), c.term(i).dim());
    std::size_t induced = hstack(bd, fi * z).rank() - bd.rank();
    if (a != b || induced != a) {
      if (why)
        *why = "degree " + std::to_string(i) + ": H dims " + std::to_string(a) + " vs " + std::to_string(b) +
               ", induced rank " + std::to_string(induced);
      return false;
    }
  }
  return true;
}

}  // namespace heckeo
