#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace heckeo {

/// Cartan type letter plus rank, e.g. {'B', 2}.
struct CartanDatum {
  char type_letter = 'A';
  int rank = 1;

  /// Parses "A3", "g2", ... Throws std::invalid_argument on malformed or
  /// inadmissible input.
  static CartanDatum parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;
};

/// Throws std::invalid_argument unless the pair is a finite type
/// (A_n n>=1, B_n/C_n n>=2, D_n n>=4, F_4, G_2).
void validate(const CartanDatum& datum);

/// Matrix a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering (0-based here).
std::vector<std::vector<int>> cartan_matrix(const CartanDatum& datum);

std::uint64_t expected_order(const CartanDatum& datum);
int expected_positive_roots(const CartanDatum& datum);

struct GroupOptions {
  /// Largest group order we are willing to enumerate (default 8!).
  std::uint64_t max_order = 40320;
};

/// Raised when a group exceeds GroupOptions::max_order.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WeylGroup;

/// Handle to an element of a specific WeylGroup. Cheap to copy; the group
/// must outlive it.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(const WeylGroup* group, std::uint32_t id) : group_(group), id_(id) {}

  std::uint32_t id() const { return id_; }
  const WeylGroup& group() const { return *group_; }
  const WeylGroup* group_ptr() const { return group_; }
  bool valid() const { return group_ != nullptr; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.group_ == b.group_ && a.id_ == b.id_; }
  friend auto operator<=>(const WeylElt& a, const WeylElt& b) {
    if (auto c = a.group_ <=> b.group_; c != 0) return c;
    return a.id_ <=> b.id_;
  }

 private:
  const WeylGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

/// Throws std::invalid_argument if the two elements live in different groups.
void require_same_group(const WeylElt& a, const WeylElt& b);

/// A finite Weyl group, enumerated through its action on the root system.
///
/// Element ids are sorted by (length, lexicographically least reduced word),
/// so id 0 is the identity and the last id is the longest element. The group
/// is immutable after build(); the Bruhat table is filled lazily on first use
/// under a once-flag.
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> build(const CartanDatum& datum, const GroupOptions& options = {});

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  std::size_t order() const { return length_.size(); }
  std::size_t num_positive_roots() const { return num_pos_roots_; }

  WeylElt element(std::uint32_t id) const;
  WeylElt identity() const { return {this, 0}; }
  WeylElt longest() const { return {this, static_cast<std::uint32_t>(order() - 1)}; }
  /// Simple reflection s_i, i in [0, rank).
  WeylElt simple(int i) const;
  std::vector<WeylElt> elements() const;

  int length(WeylElt x) const;
  WeylElt multiply(WeylElt x, WeylElt y) const;
  WeylElt inverse(WeylElt x) const;
  WeylElt left_mul_simple(int s, WeylElt x) const;   // s x
  WeylElt right_mul_simple(WeylElt x, int s) const;  // x s
  bool is_left_descent(int s, WeylElt x) const { return length(left_mul_simple(s, x)) < length(x); }
  bool is_right_descent(WeylElt x, int s) const { return length(right_mul_simple(x, s)) < length(x); }

  bool bruhat_leq(WeylElt x, WeylElt y) const;
  bool bruhat_less(WeylElt x, WeylElt y) const { return x != y && bruhat_leq(x, y); }
  /// Pairs (x, y) with x < y and l(y) = l(x) + 1, sorted by id.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bruhat_covers() const;

  /// Lexicographically least reduced word, 0-based generator indices.
  const std::vector<int>& reduced_word(WeylElt x) const;
  /// Reduced word with 1-based labels joined by '.', or "e" for the identity.
  std::string word_string(WeylElt x) const;
  /// Product of the given 0-based generators (not necessarily reduced).
  WeylElt from_word(std::span<const int> word) const;
  /// Accepts "e", "w0", "1.2.1", "s1.s2" and, in rank one, "s".
  WeylElt parse_word(const std::string& text) const;

  /// {"type", "order", "longest_length", "elements":[{"id","word","length"}], "bruhat_covers"}
  nlohmann::json to_json(bool with_covers = true) const;

 private:
  WeylGroup() = default;
  void check(WeylElt x) const;
  void fill_bruhat() const;
  std::uint32_t lookup(const std::vector<std::uint16_t>& perm) const;

  CartanDatum datum_;
  std::size_t num_pos_roots_ = 0;
  std::vector<std::vector<std::uint16_t>> perms_;  // action on all roots, per element
  std::vector<std::uint16_t> simple_root_index_;
  std::unordered_map<std::string, std::uint32_t> index_;  // images of simple roots -> id
  std::vector<int> length_;
  std::vector<std::vector<std::uint32_t>> left_;   // left_[s][x] = s x
  std::vector<std::vector<std::uint32_t>> right_;  // right_[s][x] = x s
  std::vector<std::uint32_t> inverse_;
  std::vector<std::vector<int>> words_;

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::vector<std::uint64_t>> bruhat_;  // bruhat_[y] = bitset of {x <= y}
};

}  // namespace heckeo
