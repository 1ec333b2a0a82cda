#include <doctest.h>

#include "heckeo/k0/k0_class.hpp"

using namespace heckeo;

namespace {

const LaurentPoly v = LaurentPoly::v(1);
const LaurentPoly vi = LaurentPoly::v(-1);

}  // namespace

TEST_CASE("A1 classes") {
  auto k = K0Model::for_type("A1");
  const auto& g = k.group();
  auto e = g.identity(), s = g.simple(0);
  auto de = K0Class::verma(e), ds = K0Class::verma(s);
  CHECK(k.class_of(e, BasisKind::Simple) == de);
  CHECK(k.class_of(s, BasisKind::Simple) == ds - de.scaled(vi));
  CHECK(k.class_of(s, BasisKind::Tilting) == ds + de.scaled(v));
  CHECK(k.class_of(s, BasisKind::Projective) == ds);
  CHECK(k.class_of(e, BasisKind::Projective) == de + ds.scaled(vi));
  CHECK(k.class_of(e, BasisKind::DualVerma) == de);
  CHECK(k.class_of(s, BasisKind::Simple).to_string() == "[Δ_1] + (-v^-1)[Δ_e]");
}

TEST_CASE("A1 Hecke action and wall crossing") {
  auto k = K0Model::for_type("A1");
  const auto& g = k.group();
  const auto& h = k.algebra();
  auto de = K0Class::verma(g.identity()), ds = K0Class::verma(g.simple(0));
  auto hs = h.generator(0);
  CHECK(k.hecke_act(hs, de) == ds);
  CHECK(k.hecke_act(hs, ds) == de + ds.scaled(vi - v));
  CHECK(k.hecke_act(h.one(), ds) == ds);
  CHECK(k.wall_crossing(0, ds) == ds.shift(1) + de);
  CHECK(k.wall_crossing(0, de) == ds + de.shift(-1));
  for (const auto& x : {de, ds}) {
    CHECK((k.wall_crossing(0, x, WallVariant::pi_star_pi) - x).scaled(v) == k.hecke_act(hs, x));
  }
  CHECK_THROWS_AS(k.wall_crossing(1, de), std::invalid_argument);
  CHECK(ds.shift(2) == ds.scaled(LaurentPoly::v(-2)));
}

TEST_CASE("duality") {
  auto k = K0Model::for_type("A1");
  const auto& g = k.group();
  auto de = K0Class::verma(g.identity());
  CHECK(k.dualize(de) == de);
  auto ls = k.class_of(g.simple(0), BasisKind::Simple);
  CHECK(k.dualize(ls) == ls);
  auto a2 = K0Model::for_type("A2");
  for (auto x : a2.group().elements())
    for (auto kind : {BasisKind::Verma, BasisKind::Tilting, BasisKind::Projective}) {
      auto c = a2.class_of(x, kind);
      CHECK(a2.dualize(a2.dualize(c)) == c);
    }
}

TEST_CASE("Euler form") {
  auto k = K0Model::for_type("A2");
  const auto& g = k.group();
  for (auto x : g.elements())
    for (auto y : g.elements()) {
      LaurentPoly d(x == y ? 1 : 0);
      CHECK(k.ext_pairing(K0Class::verma(x), K0Class::verma(y)) == d);
      CHECK(k.ext_pairing(k.class_of(x, BasisKind::Projective), k.class_of(y, BasisKind::Simple)) == d);
    }
  // [L_w0] = sum (-v^{-1})^{l(x w0)} [Δ_x] for A2, read off from b(C_w0).
  auto lw0 = k.class_of(g.longest(), BasisKind::Simple);
  for (auto x : g.elements())
    CHECK(lw0.coord(x) == neg_vinv_power(g.length(g.multiply(x, g.longest()))));
  CHECK(k.ext_pairing(K0Class::verma(g.simple(0)), lw0) == LaurentPoly::v(-2));
  // Shift behaviour pinned by <[Δ_x], [Δ_x<n>]> = v^{-n}.
  auto dx = K0Class::verma(g.simple(1));
  CHECK(k.ext_pairing(dx, dx.shift(3)) == LaurentPoly::v(-3));
  CHECK(k.ext_pairing(dx.shift(3), dx) == k.ext_pairing(dx, dx.shift(3)));
}

TEST_CASE("basis expansion round trip") {
  auto k = K0Model::for_type("B2");
  const auto& g = k.group();
  for (auto kind : {BasisKind::Verma, BasisKind::DualVerma, BasisKind::Simple, BasisKind::Projective,
                    BasisKind::Tilting})
    for (auto x : g.elements()) {
      auto coeffs = k.expand(k.class_of(x, kind), kind);
      for (auto y : g.elements()) CHECK(coeffs[y.id()] == LaurentPoly(x == y ? 1 : 0));
    }
  auto a1 = K0Model::for_type("A1");
  auto ts = a1.class_of(a1.group().simple(0), BasisKind::Tilting);
  CHECK(a1.format_in_basis(ts, BasisKind::Verma) == "[Δ_1] + (v)[Δ_e]");
  CHECK(a1.format_in_basis(ts, BasisKind::Simple) == "[L_1] + (v^-1 + v)[L_e]");
  CHECK(parse_basis_kind("tilting") == BasisKind::Tilting);
  CHECK_THROWS_AS(parse_basis_kind("Weird"), std::invalid_argument);
}

TEST_CASE("verifiers pass on A1, A2, A3, B2") {
  for (const char* t : {"A1", "A2", "A3", "B2"}) {
    CAPTURE(t);
    auto k = K0Model::for_type(t);
    for (const auto& r : k.verify_all()) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
  auto a1 = K0Model::for_type("A1");
  CHECK(a1.verify_bott(a1.group().longest()).pass);
}

TEST_CASE("mixed groups rejected") {
  auto a1 = K0Model::for_type("A1");
  auto a2 = K0Model::for_type("A2");
  CHECK_THROWS_AS(a1.ext_pairing(K0Class::verma(a2.group().identity()), K0Class::verma(a1.group().identity())),
                  std::invalid_argument);
  CHECK_THROWS_AS(a1.hecke_act(a2.algebra().one(), K0Class::verma(a1.group().identity())), std::invalid_argument);
}
