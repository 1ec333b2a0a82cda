#include "heckeo/hecke/kl_oracle.hpp"

#include <map>
#include <stdexcept>

#include "heckeo/ring/rational_matrix.hpp"

namespace heckeo {

namespace {

using Dense = std::vector<LaurentPoly>;

Dense dense_times_generator(const WeylGroup& g, const Dense& h, int s) {
  Dense r(h.size());
  for (std::uint32_t x = 0; x < h.size(); ++x) {
    if (h[x].is_zero()) continue;
    WeylElt xe{&g, x};
    WeylElt xs = g.right_mul_simple(xe, s);
    r[xs.id()] += h[x];
    if (g.length(xs) < g.length(xe)) r[x] += h[x] * (LaurentPoly::v(-1) - LaurentPoly::v(1));
  }
  return r;
}

// d(H_y) = prod over the reduced word of (H_s + v - v^{-1}).
Dense dense_bar_standard(const WeylGroup& g, WeylElt y) {
  Dense h(g.order());
  h[0] = 1;
  const LaurentPoly shift = LaurentPoly::v(1) - LaurentPoly::v(-1);
  for (int s : g.reduced_word(y)) {
    Dense next = dense_times_generator(g, h, s);
    for (std::size_t k = 0; k < h.size(); ++k) next[k] += h[k] * shift;
    h = std::move(next);
  }
  return h;
}

}  // namespace

HeckeElt kl_element_by_linear_system(WeylElt x) {
  const WeylGroup& g = x.group();
  const int lx = g.length(x);

  struct Unknown {
    std::uint32_t y;
    int k;
  };
  std::vector<Unknown> unknowns;
  for (std::uint32_t y = 0; y < g.order(); ++y) {
    int ly = g.length({&g, y});
    for (int k = 1; k <= lx - ly; ++k) unknowns.push_back({y, k});
  }

  // Residual d(C) - C = (D_x - H_x) + sum p_{y,k} (v^{-k} D_y - v^k H_y).
  std::map<std::pair<std::uint32_t, int>, std::size_t> row_of;
  auto row = [&](std::uint32_t z, int e) {
    return row_of.try_emplace({z, e}, row_of.size()).first->second;
  };
  std::vector<std::map<std::size_t, Integer>> cols(unknowns.size());
  std::map<std::size_t, Integer> rhs;
  std::map<std::uint32_t, Dense> bars;
  auto bar_of = [&](std::uint32_t y) -> const Dense& {
    auto it = bars.find(y);
    if (it == bars.end()) it = bars.emplace(y, dense_bar_standard(g, {&g, y})).first;
    return it->second;
  };

  const Dense& dx = bar_of(x.id());
  for (std::uint32_t z = 0; z < dx.size(); ++z) {
    LaurentPoly c = dx[z];
    if (z == x.id()) c -= 1;
    for (const auto& [e, a] : c.terms()) rhs[row(z, e)] -= a;
  }
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [y, k] = unknowns[u];
    const Dense& dy = bar_of(y);
    for (std::uint32_t z = 0; z < dy.size(); ++z)
      for (const auto& [e, a] : dy[z].terms()) cols[u][row(z, e - k)] += a;
    cols[u][row(y, k)] -= 1;
  }

  QMatrix a(row_of.size(), unknowns.size());
  QMatrix b(row_of.size(), 1);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [r, val] : cols[u]) a(r, u) = val;
  for (const auto& [r, val] : rhs) b(r, 0) = val;

  if (a.rank() != unknowns.size()) throw std::logic_error("KL linear system is not uniquely solvable");
  auto sol = a.solve(b);
  if (!sol) throw std::logic_error("KL linear system is inconsistent");

  HeckeElt c = HeckeElt::standard(x);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const Rational& p = (*sol)(u, 0);
    if (p.get_den() != 1) throw std::logic_error("KL linear system has a non-integral solution");
    c.add_term(unknowns[u].y, LaurentPoly::monomial(p.get_num(), unknowns[u].k));
  }
  return c;
}

CheckResult verify_kl_oracle(const HeckeAlgebra& algebra) {
  const WeylGroup& g = algebra.group();
  CheckTally tally("hecke.kl_oracle");
  for (auto x : g.elements()) {
    bool same = false;
    try {
      same = kl_element_by_linear_system(x) == algebra.kl_element(x);
    } catch (const std::logic_error&) {
      same = false;
    }
    tally.expect(same, "x=" + g.word_string(x));
  }
  return tally.result();
}

}  // namespace heckeo
