#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "heckeo/weyl/weyl_group.hpp"

using namespace heckeo;

namespace {

using Mat = std::vector<std::vector<long>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Reflection representation on simple-root coordinates, independent of the
// root-permutation model used by the library.
struct MatrixModel {
  std::vector<Mat> gens;
  std::map<Mat, int> dist;  // Cayley-graph distance = length

  explicit MatrixModel(const CartanDatum& d) {
    auto a = cartan_matrix(d);
    int n = d.rank;
    for (int i = 0; i < n; ++i) {
      Mat m(n, std::vector<long>(n, 0));
      for (int k = 0; k < n; ++k) m[k][k] = 1;
      for (int j = 0; j < n; ++j) m[i][j] -= a[i][j];
      gens.push_back(m);
    }
    Mat id(n, std::vector<long>(n, 0));
    for (int k = 0; k < n; ++k) id[k][k] = 1;
    dist[id] = 0;
    std::vector<Mat> frontier{id};
    for (int l = 1; !frontier.empty(); ++l) {
      std::vector<Mat> next;
      for (const auto& w : frontier)
        for (const auto& g : gens) {
          Mat x = mat_mul(w, g);
          if (dist.emplace(x, l).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
  }

  Mat of_word(const std::vector<int>& w) const {
    std::size_t n = gens.size();
    Mat m(n, std::vector<long>(n, 0));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
    for (int s : w) m = mat_mul(m, gens[s]);
    return m;
  }
};

bool subword_leq(const MatrixModel& mm, const std::vector<int>& xw, const std::vector<int>& yw) {
  Mat target = mm.of_word(xw);
  std::size_t l = yw.size();
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != xw.size()) continue;
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask & (1u << k)) sub.push_back(yw[k]);
    if (mm.of_word(sub) == target) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("cartan parsing") {
  CHECK(CartanDatum::parse("a3").name() == "A3");
  CHECK(CartanDatum::parse("G2").rank == 2);
  for (const char* bad : {"G3", "F2", "D3", "B1", "C1", "A0", "X2", "A", "", "Aq"})
    CHECK_THROWS_AS(CartanDatum::parse(bad), std::invalid_argument);
}

TEST_CASE("group orders against the matrix model") {
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2", "D4", "F4"}) {
    CAPTURE(t);
    auto d = CartanDatum::parse(t);
    auto g = WeylGroup::build(d);
    MatrixModel mm(d);
    CHECK(g->order() == mm.dist.size());
    CHECK(g->order() == expected_order(d));
    CHECK(static_cast<int>(g->num_positive_roots()) == expected_positive_roots(d));
    CHECK(g->length(g->longest()) == static_cast<int>(g->num_positive_roots()));
    for (auto x : g->elements()) {
      const auto& w = g->reduced_word(x);
      REQUIRE(static_cast<int>(w.size()) == g->length(x));
      CHECK(mm.dist.at(mm.of_word(w)) == g->length(x));
      CHECK(g->from_word(w) == x);
    }
  }
}

TEST_CASE("small examples") {
  auto a1 = WeylGroup::build(CartanDatum::parse("A1"));
  CHECK(a1->order() == 2);
  CHECK(a1->length(a1->longest()) == 1);
  auto s = a1->simple(0);
  CHECK(a1->multiply(s, s) == a1->identity());
  CHECK(a1->parse_word("s") == s);
  CHECK(a1->word_string(s) == "1");

  auto a2 = WeylGroup::build(CartanDatum::parse("A2"));
  CHECK(a2->order() == 6);
  CHECK(a2->length(a2->longest()) == 3);
  auto s1 = a2->simple(0), s2 = a2->simple(1);
  auto s1s2 = a2->multiply(s1, s2);
  CHECK(a2->length(s1s2) == 2);
  CHECK(a2->bruhat_leq(s1, s1s2));
  CHECK(a2->reduced_word(a2->longest()) == std::vector<int>{0, 1, 0});
  CHECK(a2->word_string(a2->longest()) == "1.2.1");
  CHECK(a2->parse_word("2.1.2") == a2->longest());
  CHECK(a2->parse_word("s1.s2") == s1s2);
  CHECK(a2->parse_word("w0") == a2->longest());
  CHECK(a2->word_string(a2->identity()) == "e");
  CHECK(a2->reduced_word(s2) == std::vector<int>{1});

  auto b2 = WeylGroup::build(CartanDatum::parse("B2"));
  CHECK(b2->order() == 8);
  CHECK(b2->length(b2->longest()) == 4);
  auto g2 = WeylGroup::build(CartanDatum::parse("G2"));
  CHECK(g2->order() == 12);
  CHECK(g2->length(g2->longest()) == 6);
}

TEST_CASE("errors") {
  auto a2 = WeylGroup::build(CartanDatum::parse("A2"));
  auto a1 = WeylGroup::build(CartanDatum::parse("A1"));
  CHECK_THROWS_AS(a2->parse_word("1.3"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_word("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_word("x"), std::invalid_argument);
  CHECK_THROWS_AS(a2->parse_word("s"), std::invalid_argument);
  CHECK_THROWS_AS(a2->multiply(a2->identity(), a1->identity()), std::invalid_argument);
  CHECK_THROWS_AS(a2->bruhat_leq(a2->identity(), a1->identity()), std::invalid_argument);
  CHECK_THROWS_AS(WeylGroup::build(CartanDatum::parse("A8")), EnumerationCapExceeded);
  CHECK_THROWS_AS(WeylGroup::build(CartanDatum::parse("A3"), GroupOptions{10}), EnumerationCapExceeded);
}

TEST_CASE("bruhat order against the subword property") {
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    CAPTURE(t);
    auto d = CartanDatum::parse(t);
    auto g = WeylGroup::build(d);
    MatrixModel mm(d);
    for (auto x : g->elements())
      for (auto y : g->elements()) {
        bool lib = g->bruhat_leq(x, y);
        CHECK(lib == subword_leq(mm, g->reduced_word(x), g->reduced_word(y)));
        if (lib && x != y) CHECK(g->length(x) < g->length(y));
      }
  }
}

TEST_CASE("group invariants") {
  std::mt19937 rng(7);
  for (const char* t : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(t);
    auto g = WeylGroup::build(CartanDatum::parse(t));
    auto w0 = g->longest();
    int lw0 = g->length(w0);
    CHECK(g->multiply(w0, w0) == g->identity());
    int n0 = 0, ntop = 0;
    for (auto x : g->elements()) {
      n0 += g->length(x) == 0;
      ntop += g->length(x) == lw0;
      CHECK(g->length(g->multiply(w0, x)) == lw0 - g->length(x));
      CHECK(g->multiply(x, g->inverse(x)) == g->identity());
      CHECK(g->bruhat_leq(g->identity(), x));
      CHECK(g->bruhat_leq(x, w0));
      for (int s = 0; s < g->rank(); ++s) {
        int d = g->length(g->left_mul_simple(s, x)) - g->length(x);
        CHECK((d == 1 || d == -1));
        CHECK(g->right_mul_simple(x, s) == g->multiply(x, g->simple(s)));
        CHECK(g->left_mul_simple(s, x) == g->multiply(g->simple(s), x));
      }
    }
    CHECK(n0 == 1);
    CHECK(ntop == 1);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g->order() - 1));
    for (int k = 0; k < 200; ++k) {
      auto x = g->element(pick(rng)), y = g->element(pick(rng)), z = g->element(pick(rng));
      CHECK(g->multiply(x, g->multiply(y, z)) == g->multiply(g->multiply(x, y), z));
      auto xy = g->multiply(x, y);
      CHECK(g->length(xy) <= g->length(x) + g->length(y));
      // Equality iff the concatenation of reduced words is reduced.
      std::vector<int> cat = g->reduced_word(x);
      cat.insert(cat.end(), g->reduced_word(y).begin(), g->reduced_word(y).end());
      CHECK((g->length(xy) == g->length(x) + g->length(y)) ==
            (g->length(g->from_word(cat)) == static_cast<int>(cat.size())));
    }
  }
}

TEST_CASE("ids sorted by length then word, json export") {
  auto g = WeylGroup::build(CartanDatum::parse("B2"));
  for (std::uint32_t k = 1; k < g->order(); ++k) {
    auto a = g->element(k - 1), b = g->element(k);
    bool ordered = g->length(a) < g->length(b) ||
                   (g->length(a) == g->length(b) && g->reduced_word(a) < g->reduced_word(b));
    CHECK(ordered);
  }
  auto j = g->to_json();
  CHECK(j["order"] == 8);
  CHECK(j["longest_length"] == 4);
  CHECK(j["elements"].size() == 8);
  CHECK(j["bruhat_covers"].size() > 0);
}
