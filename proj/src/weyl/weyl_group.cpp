#include "heckeo/weyl/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckeo {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string key_of(const std::vector<std::uint16_t>& perm, const std::vector<std::uint16_t>& simple_idx) {
  std::string key;
  key.reserve(simple_idx.size() * 2);
  for (auto r : simple_idx) {
    auto img = perm[r];
    key.push_back(static_cast<char>(img & 0xff));
    key.push_back(static_cast<char>(img >> 8));
  }
  return key;
}

}  // namespace

CartanDatum CartanDatum::parse(const std::string& text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw std::invalid_argument("unknown Cartan type '" + text + "'");
  CartanDatum d;
  d.type_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("unknown Cartan type '" + text + "'");
  d.rank = std::stoi(digits);
  validate(d);
  return d;
}

std::string CartanDatum::name() const { return std::string(1, type_letter) + std::to_string(rank); }

void validate(const CartanDatum& d) {
  bool ok = false;
  switch (d.type_letter) {
    case 'A': ok = d.rank >= 1; break;
    case 'B':
    case 'C': ok = d.rank >= 2; break;
    case 'D': ok = d.rank >= 4; break;
    case 'F': ok = d.rank == 4; break;
    case 'G': ok = d.rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("unknown Cartan type '" + d.name() + "'");
}

std::vector<std::vector<int>> cartan_matrix(const CartanDatum& d) {
  validate(d);
  const int n = d.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (d.type_letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::uint64_t expected_order(const CartanDatum& d) {
  validate(d);
  switch (d.type_letter) {
    case 'A': return factorial(d.rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << d.rank) * factorial(d.rank);
    case 'D': return (std::uint64_t{1} << (d.rank - 1)) * factorial(d.rank);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

int expected_positive_roots(const CartanDatum& d) {
  validate(d);
  const int n = d.rank;
  switch (d.type_letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

void require_same_group(const WeylElt& a, const WeylElt& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("invalid Weyl group element");
  if (a.group_ptr() != b.group_ptr()) throw std::invalid_argument("elements from different Weyl groups");
}

std::shared_ptr<const WeylGroup> WeylGroup::build(const CartanDatum& datum, const GroupOptions& options) {
  validate(datum);
  const std::uint64_t want = expected_order(datum);
  if (want > options.max_order)
    throw EnumerationCapExceeded("group " + datum.name() + " has order " + std::to_string(want) +
                                 ", above the enumeration cap " + std::to_string(options.max_order));

  std::shared_ptr<WeylGroup> g(new WeylGroup());
  g->datum_ = datum;
  const int n = datum.rank;
  const auto cm = cartan_matrix(datum);

  // Roots as integer coordinates in the simple-root basis, closed under the
  // simple reflections s_i(b) = b - <alpha_i^vee, b> alpha_i.
  using Root = std::vector<int>;
  auto reflect = [&](int i, const Root& b) {
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += cm[i][j] * b[j];
    Root r = b;
    r[i] -= pairing;
    return r;
  };
  std::map<Root, int> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.emplace(r, 0);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& b : frontier)
      for (int i = 0; i < n; ++i) {
        Root r = reflect(i, b);
        if (seen.emplace(r, 0).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<Root> positive;
  for (const auto& [r, _] : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.push_back(r);
  std::stable_sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  const std::size_t npos = positive.size();
  if (static_cast<int>(npos) != expected_positive_roots(datum) || 2 * npos > 0xffff)
    throw std::logic_error("root system enumeration failed for " + datum.name());
  g->num_pos_roots_ = npos;

  std::map<Root, std::uint16_t> root_index;
  for (std::size_t k = 0; k < npos; ++k) {
    root_index[positive[k]] = static_cast<std::uint16_t>(k);
    Root neg = positive[k];
    for (auto& c : neg) c = -c;
    root_index[neg] = static_cast<std::uint16_t>(npos + k);
  }
  std::vector<Root> all_roots(2 * npos);
  for (const auto& [r, k] : root_index) all_roots[k] = r;
  std::vector<std::vector<std::uint16_t>> refl(n, std::vector<std::uint16_t>(2 * npos));
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < 2 * npos; ++k) refl[i][k] = root_index.at(reflect(i, all_roots[k]));
  g->simple_root_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    g->simple_root_index_[i] = root_index.at(r);
  }

  // Breadth-first enumeration by left multiplication with simple reflections.
  std::vector<std::vector<std::uint16_t>> perms;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint16_t> id_perm(2 * npos);
  std::iota(id_perm.begin(), id_perm.end(), std::uint16_t{0});
  perms.push_back(id_perm);
  index.emplace(key_of(id_perm, g->simple_root_index_), 0);
  std::vector<std::vector<std::uint32_t>> left(n);
  for (std::size_t cur = 0; cur < perms.size(); ++cur) {
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint16_t> p(2 * npos);
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = refl[i][perms[cur][k]];
      auto [it, inserted] = index.emplace(key_of(p, g->simple_root_index_), static_cast<std::uint32_t>(perms.size()));
      if (inserted) {
        if (perms.size() >= want) throw std::logic_error("Weyl group enumeration overflow");
        perms.push_back(std::move(p));
      }
      left[i].resize(perms.size());
      left[i][cur] = it->second;
    }
  }
  const std::size_t order = perms.size();
  if (order != want) throw std::logic_error("Weyl group enumeration produced wrong order");
  for (int i = 0; i < n; ++i) left[i].resize(order);

  std::vector<int> length(order);
  for (std::size_t w = 0; w < order; ++w) {
    int l = 0;
    for (std::size_t k = 0; k < npos; ++k)
      if (perms[w][k] >= npos) ++l;
    length[w] = l;
  }

  // Lexicographically least reduced words: first letter is the smallest left
  // descent, the rest is the canonical word of s x.
  std::vector<std::size_t> by_len(order);
  std::iota(by_len.begin(), by_len.end(), std::size_t{0});
  std::stable_sort(by_len.begin(), by_len.end(), [&](auto a, auto b) { return length[a] < length[b]; });
  std::vector<std::vector<int>> words(order);
  for (auto w : by_len) {
    if (length[w] == 0) continue;
    for (int i = 0; i < n; ++i) {
      auto sw = left[i][w];
      if (length[sw] < length[w]) {
        words[w].push_back(i);
        words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
        break;
      }
    }
  }

  // Renumber by (length, word).
  std::vector<std::uint32_t> order_ids(order);
  std::iota(order_ids.begin(), order_ids.end(), 0u);
  std::sort(order_ids.begin(), order_ids.end(), [&](auto a, auto b) {
    if (length[a] != length[b]) return length[a] < length[b];
    return words[a] < words[b];
  });
  std::vector<std::uint32_t> new_id(order);
  for (std::uint32_t k = 0; k < order; ++k) new_id[order_ids[k]] = k;

  g->perms_.resize(order);
  g->length_.resize(order);
  g->words_.resize(order);
  for (std::uint32_t k = 0; k < order; ++k) {
    auto old = order_ids[k];
    g->perms_[k] = std::move(perms[old]);
    g->length_[k] = length[old];
    g->words_[k] = std::move(words[old]);
  }
  for (auto& [key, id] : index) id = new_id[id];
  g->index_ = std::move(index);
  g->left_.assign(n, std::vector<std::uint32_t>(order));
  for (int i = 0; i < n; ++i)
    for (std::uint32_t old = 0; old < order; ++old) g->left_[i][new_id[old]] = new_id[left[i][old]];

  g->right_.assign(n, std::vector<std::uint32_t>(order));
  g->inverse_.resize(order);
  for (std::uint32_t w = 0; w < order; ++w) {
    const auto& p = g->perms_[w];
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint16_t> q(p.size());
      for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[refl[i][k]];
      g->right_[i][w] = g->lookup(q);
    }
    std::vector<std::uint16_t> inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<std::uint16_t>(k);
    g->inverse_[w] = g->lookup(inv);
  }
  return g;
}

std::uint32_t WeylGroup::lookup(const std::vector<std::uint16_t>& perm) const {
  auto it = index_.find(key_of(perm, simple_root_index_));
  if (it == index_.end()) throw std::logic_error("permutation is not a group element");
  return it->second;
}

void WeylGroup::check(WeylElt x) const {
  if (x.group_ptr() != this) throw std::invalid_argument("elements from different Weyl groups");
}

WeylElt WeylGroup::element(std::uint32_t id) const {
  if (id >= order()) throw std::out_of_range("element id " + std::to_string(id) + " out of range");
  return {this, id};
}

WeylElt WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple reflection index out of range");
  return {this, left_[i][0]};
}

std::vector<WeylElt> WeylGroup::elements() const {
  std::vector<WeylElt> out;
  out.reserve(order());
  for (std::uint32_t k = 0; k < order(); ++k) out.emplace_back(this, k);
  return out;
}

int WeylGroup::length(WeylElt x) const {
  check(x);
  return length_[x.id()];
}

WeylElt WeylGroup::multiply(WeylElt x, WeylElt y) const {
  check(x);
  check(y);
  const auto& px = perms_[x.id()];
  const auto& py = perms_[y.id()];
  std::string key;
  key.reserve(simple_root_index_.size() * 2);
  for (auto r : simple_root_index_) {
    auto img = px[py[r]];
    key.push_back(static_cast<char>(img & 0xff));
    key.push_back(static_cast<char>(img >> 8));
  }
  return {this, index_.at(key)};
}

WeylElt WeylGroup::inverse(WeylElt x) const {
  check(x);
  return {this, inverse_[x.id()]};
}

WeylElt WeylGroup::left_mul_simple(int s, WeylElt x) const {
  check(x);
  return {this, left_.at(s)[x.id()]};
}

WeylElt WeylGroup::right_mul_simple(WeylElt x, int s) const {
  check(x);
  return {this, right_.at(s)[x.id()]};
}

void WeylGroup::fill_bruhat() const {
  std::call_once(bruhat_once_, [this] {
    const std::size_t n = order();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> table(n, std::vector<std::uint64_t>(words, 0));
    table[0][0] = 1;
    // Ids are sorted by length, so s y < y has a smaller id. With s a left
    // descent of y, [e, y] = [e, sy] union s[e, sy].
    for (std::uint32_t y = 1; y < n; ++y) {
      int s = words_[y].front();
      std::uint32_t sy = left_[s][y];
      auto& row = table[y];
      row = table[sy];
      const auto& base = table[sy];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = base[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          std::uint32_t x = static_cast<std::uint32_t>(w * 64 + b);
          std::uint32_t sx = left_[s][x];
          row[sx / 64] |= std::uint64_t{1} << (sx % 64);
        }
      }
    }
    bruhat_ = std::move(table);
  });
}

bool WeylGroup::bruhat_leq(WeylElt x, WeylElt y) const {
  check(x);
  check(y);
  if (length_[x.id()] > length_[y.id()]) return false;
  fill_bruhat();
  return (bruhat_[y.id()][x.id() / 64] >> (x.id() % 64)) & 1u;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> WeylGroup::bruhat_covers() const {
  fill_bruhat();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  for (std::uint32_t y = 0; y < order(); ++y)
    for (std::uint32_t x = 0; x < y; ++x)
      if (length_[x] + 1 == length_[y] && ((bruhat_[y][x / 64] >> (x % 64)) & 1u)) covers.emplace_back(x, y);
  std::sort(covers.begin(), covers.end());
  return covers;
}

const std::vector<int>& WeylGroup::reduced_word(WeylElt x) const {
  check(x);
  return words_[x.id()];
}

std::string WeylGroup::word_string(WeylElt x) const {
  const auto& w = reduced_word(x);
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(w[k] + 1);
  }
  return out;
}

WeylElt WeylGroup::from_word(std::span<const int> word) const {
  WeylElt x = identity();
  for (int s : word) {
    if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
    x = right_mul_simple(x, s);
  }
  return x;
}

WeylElt WeylGroup::parse_word(const std::string& text) const {
  if (text == "e" || text.empty()) return identity();
  if (text == "w0") return longest();
  if (text == "s" && rank() == 1) return simple(0);
  std::vector<int> word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    std::string digits = (!tok.empty() && tok[0] == 's') ? tok.substr(1) : tok;
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed word string '" + text + "'");
    int label = std::stoi(digits);
    if (label < 1 || label > rank())
      throw std::invalid_argument("malformed word string '" + text + "': generator " + digits + " not in " +
                                  datum_.name());
    word.push_back(label - 1);
  }
  if (word.empty()) throw std::invalid_argument("malformed word string '" + text + "'");
  return from_word(word);
}

nlohmann::json WeylGroup::to_json(bool with_covers) const {
  nlohmann::json j;
  j["type"] = datum_.name();
  j["order"] = order();
  j["longest_length"] = length(longest());
  j["positive_roots"] = num_pos_roots_;
  nlohmann::json elems = nlohmann::json::array();
  for (std::uint32_t k = 0; k < order(); ++k)
    elems.push_back({{"id", k}, {"word", word_string({this, k})}, {"length", length_[k]}});
  j["elements"] = std::move(elems);
  if (with_covers) {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [x, y] : bruhat_covers()) covers.push_back({x, y});
    j["bruhat_covers"] = std::move(covers);
  }
  return j;
}

}  // namespace heckeo
