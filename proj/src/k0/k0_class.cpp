#include "heckeo/k0/k0_class.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace heckeo {

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Verma: return "Verma";
    case BasisKind::DualVerma: return "DualVerma";
    case BasisKind::Simple: return "Simple";
    case BasisKind::Projective: return "Projective";
    case BasisKind::Tilting: return "Tilting";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& text) {
  std::string low;
  for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto k : {BasisKind::Verma, BasisKind::DualVerma, BasisKind::Simple, BasisKind::Projective, BasisKind::Tilting}) {
    std::string name = to_string(k);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == low) return k;
  }
  throw std::invalid_argument("unknown basis '" + text + "' (expected Verma, DualVerma, Simple, Projective, Tilting)");
}

std::string basis_symbol(BasisKind kind) {
  switch (kind) {
    case BasisKind::Verma: return "Δ";
    case BasisKind::DualVerma: return "∇";
    case BasisKind::Simple: return "L";
    case BasisKind::Projective: return "P";
    case BasisKind::Tilting: return "T";
  }
  return "?";
}

K0Class K0Class::verma(WeylElt x) {
  if (!x.valid()) throw std::invalid_argument("invalid Weyl group element");
  K0Class k(x.group());
  k.add_term(x.id(), 1);
  return k;
}

K0Class K0Class::from_hecke(const HeckeElt& h) {
  K0Class k(h.group());
  for (const auto& [id, c] : h.coeffs()) k.coords_.emplace(id, c);
  return k;
}

HeckeElt K0Class::to_hecke() const {
  HeckeElt h(*group_);
  for (const auto& [id, c] : coords_) h.add_term(id, c);
  return h;
}

LaurentPoly K0Class::coord(std::uint32_t id) const {
  auto it = coords_.find(id);
  return it == coords_.end() ? LaurentPoly() : it->second;
}

LaurentPoly K0Class::coord(WeylElt x) const {
  if (x.group_ptr() != group_) throw std::invalid_argument("elements from different Weyl groups");
  return coord(x.id());
}

void K0Class::add_term(std::uint32_t id, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

void K0Class::require_same(const K0Class& o) const {
  if (group_ != o.group_) throw std::invalid_argument("K0 classes from different Weyl groups");
}

K0Class& K0Class::operator+=(const K0Class& o) {
  require_same(o);
  for (const auto& [id, c] : o.coords_) add_term(id, c);
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
  require_same(o);
  for (const auto& [id, c] : o.coords_) add_term(id, -c);
  return *this;
}

K0Class K0Class::operator-() const {
  K0Class r = *this;
  for (auto& [id, c] : r.coords_) c = -c;
  return r;
}

K0Class K0Class::scaled(const LaurentPoly& c) const {
  K0Class r(*group_);
  for (const auto& [id, a] : coords_) r.add_term(id, a * c);
  return r;
}

K0Class K0Class::ungraded() const {
  K0Class r(*group_);
  for (const auto& [id, a] : coords_) r.add_term(id, LaurentPoly(a.at_one()));
  return r;
}

std::string K0Class::to_string(BasisKind kind) const {
  if (coords_.empty()) return "0";
  std::string out;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != LaurentPoly(1)) out += "(" + it->second.to_string() + ")";
    out += "[" + basis_symbol(kind) + "_" + group_->word_string({group_, it->first}) + "]";
  }
  return out;
}

K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }

K0Model::K0Model(std::shared_ptr<const HeckeAlgebra> algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("null Hecke algebra");
}

K0Model K0Model::for_type(const std::string& type, const GroupOptions& options) {
  return K0Model(std::make_shared<HeckeAlgebra>(WeylGroup::build(CartanDatum::parse(type), options)));
}

void K0Model::check_group(const K0Class& x) const {
  if (&x.group() != &group()) throw std::invalid_argument("K0 class from a different Weyl group");
}

K0Class K0Model::class_of(WeylElt x, BasisKind basis) const {
  if (x.group_ptr() != &group()) throw std::invalid_argument("elements from different Weyl groups");
  switch (basis) {
    case BasisKind::Verma: return K0Class::verma(x);
    case BasisKind::DualVerma: return dualize(K0Class::verma(x));
    case BasisKind::Simple: return K0Class::from_hecke(algebra_->kl_element(x, KlVariant::Cprime));
    case BasisKind::Tilting: return K0Class::from_hecke(algebra_->kl_element(x));
    case BasisKind::Projective: return K0Class::from_hecke(algebra_->dual_basis(DualVariant::dual_to_bC)[x.id()]);
  }
  throw std::invalid_argument("unknown basis kind");
}

K0Class K0Model::hecke_act(const HeckeElt& h, const K0Class& x) const {
  check_group(x);
  if (&h.group() != &group()) throw std::invalid_argument("Hecke element from a different Weyl group");
  return K0Class::from_hecke(mul(h, x.to_hecke()));
}

K0Class K0Model::wall_crossing(int s, const K0Class& x, WallVariant variant) const {
  check_group(x);
  const WeylGroup& g = group();
  if (s < 0 || s >= g.rank()) throw std::invalid_argument("wall crossing needs a simple reflection index");
  K0Class out(g);
  for (const auto& [id, c] : x.coords()) {
    WeylElt xe{&g, id};
    WeylElt sx = g.left_mul_simple(s, xe);
    // [θ_s Δ_x] = [Δ_x<1>] + [Δ_sx] if sx < x, [Δ_sx] + [Δ_x<-1>] if x < sx.
    out += K0Class::verma(sx).scaled(c);
    out += K0Class::verma(xe).shift(g.length(sx) < g.length(xe) ? 1 : -1).scaled(c);
  }
  switch (variant) {
    case WallVariant::theta: return out;
    case WallVariant::pi_star_pi: return out.shift(1);
    case WallVariant::pi_shriek_pi: return out.shift(-1);
  }
  return out;
}

K0Class K0Model::dualize(const K0Class& x) const {
  check_group(x);
  return K0Class::from_hecke(algebra_->bar(x.to_hecke()));
}

LaurentPoly K0Model::ext_pairing(const K0Class& a, const K0Class& b) const {
  check_group(a);
  check_group(b);
  return pairing(a.to_hecke(), b.to_hecke());
}

std::vector<LaurentPoly> K0Model::expand(const K0Class& x, BasisKind basis) const {
  check_group(x);
  const WeylGroup& g = group();
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<K0Class> cols;
  cols.reserve(n);
  for (std::uint32_t y = 0; y < n; ++y) cols.push_back(class_of({&g, y}, basis));
  // Projective classes have Verma flags going up, the others going down.
  const bool upward = basis == BasisKind::Projective;
  std::vector<LaurentPoly> c(n);
  K0Class residual = x;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t y = upward ? k : n - 1 - k;
    c[y] = residual.coord(y);
    if (!c[y].is_zero()) residual -= cols[y].scaled(c[y]);
  }
  if (!residual.is_zero()) throw std::logic_error("basis expansion failed: basis is not unitriangular");
  return c;
}

std::string K0Model::format_in_basis(const K0Class& x, BasisKind basis) const {
  auto c = expand(x, basis);
  K0Class view(group());
  for (std::uint32_t y = 0; y < c.size(); ++y) view.add_term(y, c[y]);
  return view.to_string(basis);
}

CheckResult K0Model::verify_bott(WeylElt x) const {
  const WeylGroup& g = group();
  CheckTally tally("k0.bott");
  const K0Class l_w0 = class_of(g.longest(), BasisKind::Simple);
  int l = g.length(g.multiply(x, g.longest()));
  tally.expect(ext_pairing(K0Class::verma(x), l_w0) == neg_vinv_power(l), "x=" + g.word_string(x));
  return tally.result();
}

CheckResult K0Model::verify_bott() const {
  const WeylGroup& g = group();
  CheckTally tally("k0.bott");
  const K0Class l_w0 = class_of(g.longest(), BasisKind::Simple);
  for (auto x : g.elements()) {
    int l = g.length(g.multiply(x, g.longest()));
    tally.expect(ext_pairing(K0Class::verma(x), l_w0) == neg_vinv_power(l), "x=" + g.word_string(x));
  }
  return tally.result();
}

std::vector<CheckResult> K0Model::verify_characters() const {
  const WeylGroup& g = group();
  const auto w0 = g.longest();
  std::vector<CheckResult> out;

  {
    CheckTally tally("k0.weyl_character");
    K0Class expected(g);
    for (auto x : g.elements()) expected.add_term(x.id(), (g.length(g.multiply(x, w0)) % 2) ? -1 : 1);
    tally.expect(class_of(w0, BasisKind::Simple).ungraded() == expected, "[L_w0] at v=1");
    out.push_back(tally.result());
  }

  std::vector<K0Class> tilt, proj, simple;
  for (auto x : g.elements()) {
    tilt.push_back(class_of(x, BasisKind::Tilting));
    proj.push_back(class_of(x, BasisKind::Projective));
    simple.push_back(class_of(x, BasisKind::Simple));
  }
  std::vector<std::vector<LaurentPoly>> verma_in_simples;  // [x][z] = [Δ_x : L_z]
  for (auto x : g.elements()) verma_in_simples.push_back(expand(K0Class::verma(x), BasisKind::Simple));

  {
    // [T_x : Δ_y] = d([P_{w0x} : Δ_{w0y}]), and at v = 1 this is [Δ_{w0y} : L_{w0x}].
    CheckTally tally("k0.tilting_character");
    for (auto x : g.elements())
      for (auto y : g.elements()) {
        auto w0x = g.multiply(w0, x), w0y = g.multiply(w0, y);
        LaurentPoly t = tilt[x.id()].coord(y);
        LaurentPoly p = proj[w0x.id()].coord(w0y);
        bool ok = t == p.substitute(Substitution::v_to_vinv) &&
                  t.at_one() == verma_in_simples[w0y.id()][w0x.id()].at_one();
        tally.expect(ok, "x=" + g.word_string(x) + " y=" + g.word_string(y));
      }
    out.push_back(tally.result());
  }

  {
    // Graded BGG reciprocity: [P_z : Δ_w] = [Δ_w : L_z].
    CheckTally tally("k0.reciprocity");
    for (auto z : g.elements())
      for (auto w : g.elements())
        tally.expect(proj[z.id()].coord(w) == verma_in_simples[w.id()][z.id()],
                     "z=" + g.word_string(z) + " w=" + g.word_string(w));
    out.push_back(tally.result());
  }

  {
    // [Δ_x : L_y] in Z>=0[v^{-1}], with v^{-1}Z[v^{-1}] off the diagonal (a
    // shift <n> is v^{-n}, so positive degrees appear as negative powers).
    CheckTally tally("k0.positivity");
    for (auto x : g.elements())
      for (auto y : g.elements()) {
        const LaurentPoly& c = verma_in_simples[x.id()][y.id()];
        bool ok = true;
        for (const auto& [e, a] : c.terms()) ok = ok && a > 0 && e <= 0 && (x == y ? true : e < 0);
        if (x == y) ok = ok && c == LaurentPoly(1);
        tally.expect(ok, "[Δ_" + g.word_string(x) + " : L_" + g.word_string(y) + "] = " + c.to_string());
      }
    tally.note("convention: <n> = v^{-n}");
    out.push_back(tally.result());
  }

  {
    // dim End(P_x) = dim End(D_{w0x}) via the form at v = 1.
    CheckTally tally("k0.ringel_dimension");
    Integer sum_p = 0, sum_t = 0;
    for (auto x : g.elements()) {
      auto w0x = g.multiply(w0, x);
      Integer ep = ext_pairing(proj[x.id()], proj[x.id()]).at_one();
      Integer et = ext_pairing(tilt[w0x.id()], tilt[w0x.id()]).at_one();
      sum_p += ep;
      sum_t += ext_pairing(tilt[x.id()], tilt[x.id()]).at_one();
      tally.expect(ep == et, "x=" + g.word_string(x));
    }
    tally.expect(sum_p == sum_t, "sum over x");
    out.push_back(tally.result());
  }
  return out;
}

std::vector<CheckResult> K0Model::verify_structure() const {
  const WeylGroup& g = group();
  const HeckeAlgebra& h = *algebra_;
  const auto w0 = g.longest();
  std::vector<CheckResult> out;

  {
    CheckTally tally("k0.module_axioms");
    const HeckeElt one = h.one();
    for (int s = 0; s < g.rank(); ++s) {
      HeckeElt hs = h.generator(s);
      HeckeElt quad_a = hs + one.scaled(LaurentPoly::v());
      HeckeElt quad_b = hs - one.scaled(LaurentPoly::v(-1));
      for (auto y : g.elements()) {
        K0Class dy = K0Class::verma(y);
        tally.expect(hecke_act(quad_a, hecke_act(quad_b, dy)).is_zero(), "quadratic on Δ_" + g.word_string(y));
        for (auto z : g.elements()) {
          HeckeElt hz = h.standard(z);
          tally.expect(hecke_act(mul(hs, hz), dy) == hecke_act(hs, hecke_act(hz, dy)),
                       "s" + std::to_string(s + 1) + " z=" + g.word_string(z) + " y=" + g.word_string(y));
        }
      }
    }
    for (auto y : g.elements()) tally.expect(hecke_act(one, K0Class::verma(y)) == K0Class::verma(y), "H_e acts trivially");
    out.push_back(tally.result());
  }

  {
    CheckTally tally("k0.intertwining");
    for (auto x : g.elements())
      for (auto y : g.elements()) {
        HeckeElt hx = h.standard(x);
        K0Class dy = K0Class::verma(y);
        tally.expect(dualize(hecke_act(hx, dy)) == hecke_act(h.bar(hx), dualize(dy)),
                     "x=" + g.word_string(x) + " y=" + g.word_string(y));
      }
    for (auto x : g.elements()) {
      K0Class l = class_of(x, BasisKind::Simple);
      tally.expect(dualize(l) == l, "D fixes L_" + g.word_string(x));
    }
    out.push_back(tally.result());
  }

  {
    CheckTally tally("k0.unitriangular");
    for (auto kind : {BasisKind::Verma, BasisKind::DualVerma, BasisKind::Simple, BasisKind::Projective,
                      BasisKind::Tilting}) {
      for (auto y : g.elements()) {
        K0Class c = class_of(y, kind);
        bool ok = c.coord(y) == LaurentPoly(1);
        for (const auto& [z, p] : c.coords()) {
          WeylElt ze{&g, z};
          ok = ok && (kind == BasisKind::Projective ? g.bruhat_leq(y, ze) : g.bruhat_leq(ze, y));
        }
        tally.expect(ok, to_string(kind) + " at " + g.word_string(y));
      }
    }
    out.push_back(tally.result());
  }

  {
    CheckTally tally("k0.tilting_switch");
    const HeckeElt hw0 = h.standard(w0);
    for (auto x : g.elements())
      tally.expect(hecke_act(hw0, class_of(x, BasisKind::Tilting)) == class_of(g.multiply(w0, x), BasisKind::Projective),
                   "x=" + g.word_string(x));
    out.push_back(tally.result());
  }

  {
    CheckTally tally("k0.wall_crossing");
    for (int s = 0; s < g.rank(); ++s) {
      HeckeElt hs = h.generator(s);
      HeckeElt cs = h.kl_element(g.simple(s));
      for (auto x : g.elements()) {
        K0Class dx = K0Class::verma(x);
        std::string tag = "s" + std::to_string(s + 1) + " x=" + g.word_string(x);
        tally.expect(wall_crossing(s, dx) == hecke_act(cs, dx), "theta = C_s, " + tag);
        tally.expect((wall_crossing(s, dx, WallVariant::pi_star_pi) - dx).scaled(LaurentPoly::v()) == hecke_act(hs, dx),
                     "v(pi*pi - id) = H_s, " + tag);
        tally.expect(wall_crossing(s, dx, WallVariant::pi_shriek_pi) == wall_crossing(s, dx).shift(-1),
                     "pi!pi shift, " + tag);
        bool up = g.length(g.left_mul_simple(s, x)) > g.length(x);
        if (up) tally.expect(hecke_act(hs, dx) == K0Class::verma(g.left_mul_simple(s, x)), "H_s Δ_x = Δ_sx, " + tag);
      }
    }
    out.push_back(tally.result());
  }

  {
    CheckTally tally("k0.simples_killed");
    for (int s = 0; s < g.rank(); ++s)
      for (auto x : g.elements()) {
        if (g.length(g.left_mul_simple(s, x)) > g.length(x)) continue;
        K0Class l = class_of(x, BasisKind::Simple);
        tally.expect(wall_crossing(s, l).is_zero(), "s" + std::to_string(s + 1) + " x=" + g.word_string(x));
      }
    out.push_back(tally.result());
  }
  return out;
}

std::vector<CheckResult> K0Model::verify_all() const {
  std::vector<CheckResult> out;
  out.push_back(verify_bott());
  for (auto& r : verify_characters()) out.push_back(std::move(r));
  for (auto& r : verify_structure()) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace heckeo
