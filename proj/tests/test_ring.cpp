#include <doctest.h>

#include <random>

#include "heckeo/ring/laurent_poly.hpp"

using heckeo::ArithOp;
using heckeo::Integer;
using heckeo::LaurentPoly;
using heckeo::Substitution;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), exp(-4, 4), coeff(-7, 7);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(Integer(coeff(rng)), exp(rng));
  return p;
}

// Evaluate at a rational point to compare against an independent number.
mpq_class eval(const LaurentPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = c;
    for (int i = 0; i < std::abs(e); ++i) term = e > 0 ? mpq_class(term * x) : mpq_class(term / x);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("arith basics") {
  auto v = LaurentPoly::v();
  auto vi = LaurentPoly::v(-1);
  CHECK(arith(v, vi, ArithOp::add).to_string() == "v^-1 + v");
  CHECK(arith(v + 1, v - 1, ArithOp::mul) == LaurentPoly::v(2) - 1);
  auto z = arith(LaurentPoly::v(2), LaurentPoly::v(2), ArithOp::sub);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(z.to_string() == "0");
}

TEST_CASE("substitution rules") {
  auto v = LaurentPoly::v();
  CHECK(substitute(v + LaurentPoly::v(2), Substitution::v_to_vinv) == LaurentPoly::v(-1) + LaurentPoly::v(-2));
  CHECK(substitute(v, Substitution::v_to_neg_vinv) == -LaurentPoly::v(-1));
  CHECK(substitute(LaurentPoly(1), Substitution::v_to_vinv) == LaurentPoly(1));
  CHECK(substitute(LaurentPoly(1), Substitution::v_to_neg_vinv) == LaurentPoly(1));
}

TEST_CASE("pretty form and json") {
  LaurentPoly p = LaurentPoly::v(-1) + 2 + LaurentPoly::v();
  CHECK(p.to_string() == "v^-1 + 2 + v");
  CHECK((-LaurentPoly::v(-1)).to_string() == "-v^-1");
  CHECK(LaurentPoly::monomial(Integer(2), 2).to_string() == "2v^2");
  CHECK((LaurentPoly::v(3) - LaurentPoly::monomial(Integer(3), 1)).to_string() == "-3v + v^3");
  auto j = to_json(p);
  CHECK(j.dump() == R"({"-1":1,"0":2,"1":1})");
  CHECK(heckeo::laurent_from_json(j) == p);
  Integer big("123456789012345678901234567890");
  auto q = LaurentPoly::monomial(big, 5);
  CHECK(heckeo::laurent_from_json(to_json(q)) == q);
}

TEST_CASE("ring laws against evaluation oracle") {
  std::mt19937 rng(12345);
  const mpq_class pts[] = {mpq_class(2), mpq_class(-3, 2), mpq_class(5, 7)};
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (const auto& x : pts) {
      CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
      CHECK(eval(a - b, x) == eval(a, x) - eval(b, x));
      CHECK(eval(substitute(a, Substitution::v_to_vinv), x) == eval(a, 1 / x));
      CHECK(eval(substitute(a, Substitution::v_to_neg_vinv), x) == eval(a, -1 / x));
    }
    for (auto rule : {Substitution::v_to_vinv, Substitution::v_to_neg_vinv}) {
      CHECK(substitute(substitute(a, rule), rule) == a);
      CHECK(substitute(a * b, rule) == substitute(a, rule) * substitute(b, rule));
    }
  }
}

TEST_CASE("degrees and truncation") {
  LaurentPoly p = LaurentPoly::v(-2) + 3 + LaurentPoly::v(4);
  CHECK(p.min_degree() == -2);
  CHECK(p.max_degree() == 4);
  CHECK(p.truncated_below(0) == 3 + LaurentPoly::v(4));
  CHECK(p.truncated_above(0) == LaurentPoly::v(-2) + 3);
  CHECK(p.at_one() == 5);
  CHECK_THROWS_AS((void)LaurentPoly().min_degree(), std::domain_error);
  CHECK(heckeo::neg_vinv_power(3) == -LaurentPoly::v(-3));
}
