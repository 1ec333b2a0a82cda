#include "heckeo/hecke/hecke_algebra.hpp"

#include <functional>
#include <stdexcept>

namespace heckeo {

namespace {

const LaurentPoly& vinv_minus_v() {
  static const LaurentPoly p = LaurentPoly::v(-1) - LaurentPoly::v(1);
  return p;
}

}  // namespace

HeckeElt HeckeElt::standard(WeylElt x, const LaurentPoly& c) {
  if (!x.valid()) throw std::invalid_argument("invalid Weyl group element");
  HeckeElt h(x.group());
  h.add_term(x.id(), c);
  return h;
}

LaurentPoly HeckeElt::coeff(WeylElt x) const {
  if (x.group_ptr() != group_) throw std::invalid_argument("elements from different Weyl groups");
  return coeff(x.id());
}

LaurentPoly HeckeElt::coeff(std::uint32_t id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(std::uint32_t id, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void HeckeElt::require_same(const HeckeElt& o) const {
  if (group_ != o.group_) throw std::invalid_argument("Hecke elements from different Weyl groups");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  require_same(o);
  for (const auto& [id, c] : o.coeffs_) add_term(id, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  require_same(o);
  for (const auto& [id, c] : o.coeffs_) add_term(id, -c);
  return *this;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r = *this;
  for (auto& [id, c] : r.coeffs_) c = -c;
  return r;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& c) const {
  HeckeElt r(*group_);
  if (c.is_zero()) return r;
  for (const auto& [id, a] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), id, a * c);
  return r;
}

HeckeElt HeckeElt::right_mul_generator(int s) const {
  HeckeElt r(*group_);
  for (const auto& [id, c] : coeffs_) {
    WeylElt x{group_, id};
    WeylElt xs = group_->right_mul_simple(x, s);
    r.add_term(xs.id(), c);
    if (group_->length(xs) < group_->length(x)) r.add_term(id, c * vinv_minus_v());
  }
  return r;
}

HeckeElt HeckeElt::left_mul_generator(int s) const {
  HeckeElt r(*group_);
  for (const auto& [id, c] : coeffs_) {
    WeylElt x{group_, id};
    WeylElt sx = group_->left_mul_simple(s, x);
    r.add_term(sx.id(), c);
    if (group_->length(sx) < group_->length(x)) r.add_term(id, c * vinv_minus_v());
  }
  return r;
}

std::string HeckeElt::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != LaurentPoly(1)) out += "(" + it->second.to_string() + ")";
    out += "H_" + group_->word_string({group_, it->first});
  }
  return out;
}

nlohmann::json HeckeElt::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [id, c] : coeffs_) j.push_back({{"x", group_->word_string({group_, id})}, {"coeff", heckeo::to_json(c)}});
  return j;
}

HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) { return h.scaled(c); }

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (&a.group() != &b.group()) throw std::invalid_argument("Hecke elements from different Weyl groups");
  const WeylGroup& g = a.group();
  // a * H_y along the canonical reduced word; prefixes of lex-least reduced
  // words are again lex-least, so the cache is keyed by element.
  std::map<std::uint32_t, HeckeElt> cache;
  cache.emplace(0, a);
  std::function<const HeckeElt&(std::uint32_t)> times = [&](std::uint32_t y) -> const HeckeElt& {
    if (auto it = cache.find(y); it != cache.end()) return it->second;
    WeylElt ye{&g, y};
    int last = g.reduced_word(ye).back();
    const HeckeElt& prev = times(g.right_mul_simple(ye, last).id());
    return cache.emplace(y, prev.right_mul_generator(last)).first->second;
  };
  HeckeElt r(g);
  for (const auto& [y, c] : b.coeffs()) r += times(y).scaled(c);
  return r;
}

HeckeElt b_twist(const HeckeElt& h) {
  HeckeElt r(h.group());
  for (const auto& [id, c] : h.coeffs()) r.add_term(id, c.substitute(Substitution::v_to_neg_vinv));
  return r;
}

HeckeElt iota(const HeckeElt& h) {
  const WeylGroup& g = h.group();
  HeckeElt r(g);
  for (const auto& [id, c] : h.coeffs()) r.add_term(g.inverse({&g, id}).id(), c);
  return r;
}

LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b) {
  if (&a.group() != &b.group()) throw std::invalid_argument("Hecke elements from different Weyl groups");
  LaurentPoly s;
  for (const auto& [id, c] : a.coeffs()) {
    auto it = b.coeffs().find(id);
    if (it != b.coeffs().end()) s += c * it->second;
  }
  return s;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("null Weyl group");
}

void HeckeAlgebra::check_group(const HeckeElt& h) const {
  if (&h.group() != group_.get()) throw std::invalid_argument("Hecke element from a different Weyl group");
}

const HeckeElt& HeckeAlgebra::bar_standard(WeylElt x) const {
  if (x.group_ptr() != group_.get()) throw std::invalid_argument("elements from different Weyl groups");
  std::call_once(bar_once_, [this] {
    const WeylGroup& g = *group_;
    std::vector<HeckeElt> table;
    table.reserve(g.order());
    table.push_back(one());
    const LaurentPoly v_minus_vinv = LaurentPoly::v(1) - LaurentPoly::v(-1);
    // d(H_s) = H_s^{-1} = H_s + v - v^{-1}; multiply along the reduced word.
    for (std::uint32_t id = 1; id < g.order(); ++id) {
      WeylElt xe{&g, id};
      int s = g.reduced_word(xe).back();
      const HeckeElt& prev = table[g.right_mul_simple(xe, s).id()];
      table.push_back(prev.right_mul_generator(s) + prev.scaled(v_minus_vinv));
    }
    bar_table_ = std::move(table);
  });
  return bar_table_[x.id()];
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  check_group(h);
  HeckeElt r = zero();
  for (const auto& [id, c] : h.coeffs())
    r += bar_standard({group_.get(), id}).scaled(c.substitute(Substitution::v_to_vinv));
  return r;
}

const HeckeElt& HeckeAlgebra::kl_element(WeylElt x) const {
  if (x.group_ptr() != group_.get()) throw std::invalid_argument("elements from different Weyl groups");
  std::call_once(kl_once_, [this] {
    const WeylGroup& g = *group_;
    std::vector<HeckeElt> table;
    table.reserve(g.order());
    table.push_back(one());
    for (std::uint32_t id = 1; id < g.order(); ++id) {
      WeylElt xe{&g, id};
      int s = g.reduced_word(xe).front();
      const HeckeElt& lower = table[g.left_mul_simple(s, xe).id()];
      // C_s C_{sx} = (H_s + v) C_{sx}, then strip non-positive degrees.
      HeckeElt h = lower.left_mul_generator(s) + lower.scaled(LaurentPoly::v());
      for (std::uint32_t y = id; y-- > 0;) {
        LaurentPoly low = h.coeff(y).truncated_above(0);
        if (low.is_zero()) continue;
        LaurentPoly c = low + low.substitute(Substitution::v_to_vinv) - LaurentPoly(low.coeff(0));
        h -= table[y].scaled(c);
      }
      for (const auto& [y, c] : h.coeffs()) {
        bool ok = y == id ? c == LaurentPoly(1) : c.min_degree() >= 1;
        if (!ok) throw std::logic_error("KL recursion produced an invalid coefficient");
      }
      table.push_back(std::move(h));
    }
    kl_table_ = std::move(table);
  });
  return kl_table_[x.id()];
}

HeckeElt HeckeAlgebra::kl_element(WeylElt x, KlVariant variant) const {
  const HeckeElt& c = kl_element(x);
  return variant == KlVariant::C ? c : b_twist(c);
}

std::vector<std::vector<LaurentPoly>> invert_unitriangular(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
    if (m[i][i] != LaurentPoly(1)) throw std::invalid_argument("matrix is not unitriangular");
    for (std::size_t j = 0; j < i; ++j)
      if (!m[i][j].is_zero()) throw std::invalid_argument("matrix is not upper triangular");
  }
  std::vector<std::vector<LaurentPoly>> inv(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      LaurentPoly s;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!m[i][k].is_zero() && !inv[k][j].is_zero()) s += m[i][k] * inv[k][j];
      inv[i][j] = -s;
    }
  }
  return inv;
}

const std::vector<HeckeElt>& HeckeAlgebra::dual_basis(DualVariant variant) const {
  const int v = variant == DualVariant::dual_to_bC ? 0 : 1;
  std::call_once(dual_once_[v], [this, variant, v] {
    const WeylGroup& g = *group_;
    const std::size_t n = g.order();
    // m[z][y] = coefficient of H_z in the basis element indexed by y.
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::uint32_t y = 0; y < n; ++y) {
      HeckeElt basis = kl_element({&g, y}, variant == DualVariant::dual_to_bC ? KlVariant::Cprime : KlVariant::C);
      for (const auto& [z, c] : basis.coeffs()) m[z][y] = c;
    }
    auto inv = invert_unitriangular(m);
    // Q_x = sum_w (m^{-1})[x][w] H_w.
    std::vector<HeckeElt> duals;
    duals.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      HeckeElt q = zero();
      for (std::uint32_t w = 0; w < n; ++w) q.add_term(w, inv[x][w]);
      duals.push_back(std::move(q));
    }
    dual_table_[v] = std::move(duals);
  });
  return dual_table_[v];
}

CheckResult HeckeAlgebra::verify_hw0_identity() const {
  const WeylGroup& g = *group_;
  CheckTally tally("hecke.hw0_identity");
  const auto& q = dual_basis(DualVariant::dual_to_bC);
  const HeckeElt hw0 = standard(g.longest());
  for (auto x : g.elements()) {
    auto w0x = g.multiply(g.longest(), x);
    tally.expect(mul(hw0, kl_element(x)) == q[w0x.id()], "x=" + g.word_string(x));
  }
  return tally.result();
}

}  // namespace heckeo

namespace heckeo {

CheckResult verify_relations(const HeckeAlgebra& algebra) {
  const WeylGroup& g = algebra.group();
  CheckTally tally("hecke.relations");
  const HeckeElt one = algebra.one();
  for (int s = 0; s < g.rank(); ++s) {
    HeckeElt hs = algebra.generator(s);
    HeckeElt lhs = mul(hs + one.scaled(LaurentPoly::v()), hs - one.scaled(LaurentPoly::v(-1)));
    tally.expect(lhs.is_zero(), "quadratic relation at s" + std::to_string(s + 1));
  }
  for (auto x : g.elements())
    for (auto y : g.elements()) {
      auto xy = g.multiply(x, y);
      if (g.length(xy) != g.length(x) + g.length(y)) continue;
      tally.expect(mul(algebra.standard(x), algebra.standard(y)) == algebra.standard(xy),
                   "H_" + g.word_string(x) + " H_" + g.word_string(y));
    }
  return tally.result();
}

CheckResult verify_kl_basis(const HeckeAlgebra& algebra) {
  const WeylGroup& g = algebra.group();
  CheckTally tally("hecke.kl_basis");
  for (auto x : g.elements()) {
    const HeckeElt& c = algebra.kl_element(x);
    tally.expect(algebra.bar(c) == c, "d(C_" + g.word_string(x) + ")");
    bool bounds = c.coeff(x) == LaurentPoly(1);
    for (const auto& [y, p] : c.coeffs())
      if (y != x.id()) bounds = bounds && p.min_degree() >= 1;
    HeckeElt cp = algebra.kl_element(x, KlVariant::Cprime);
    for (const auto& [y, p] : cp.coeffs())
      if (y != x.id()) bounds = bounds && p.max_degree() <= -1;
    tally.expect(bounds, "degree bounds of C_" + g.word_string(x));
  }
  return tally.result();
}

}  // namespace heckeo
