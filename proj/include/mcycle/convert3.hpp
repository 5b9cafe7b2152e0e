#pragma once

// Ucycle -> Mcycle conversion on a fixed ground set.
//
// Doubling an adjacency ...a b... into ...a b a b... adds exactly the
// multisets {a,a,b} and {a,b,b}. Doing this at the first occurrence of every
// adjacent pair except the n pairs of a boundary permutation x_1..x_n, then
// appending x_1x_1x_1 x_2x_2x_2 ... x_nx_nx_n, supplies every 3-multiset
// with a repeated letter exactly once.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcycle/sequence.hpp"
#include "mcycle/verify.hpp"

namespace mcycle::convert {

/// Set of unordered pairs of distinct letters from [n].
class PairSet {
 public:
  using value_type = std::pair<int, int>;  // (smaller, larger)

  explicit PairSet(int n) : n_(n) {}
  PairSet(int n, std::initializer_list<value_type> pairs) : n_(n) {
    for (auto [x, y] : pairs) insert(x, y);
  }

  void insert(int x, int y) {
    if (x == y) throw error(errc::input, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} repeats a letter");
    if (x < 1 || y < 1 || x > n_ || y > n_) throw error(errc::input, "pair letter outside [1," + std::to_string(n_) + "]");
    pairs_.insert(std::minmax(x, y));
  }

  bool contains(int x, int y) const { return pairs_.count(std::minmax(x, y)) != 0; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  int n() const noexcept { return n_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// Partner of x if x occurs in some pair (first such pair).
  std::optional<int> partner(int x) const {
    for (auto [a, b] : pairs_) {
      if (a == x) return b;
      if (b == x) return a;
    }
    return std::nullopt;
  }

  /// No letter belongs to two pairs.
  bool is_matching() const {
    std::vector<bool> seen(n_ + 1, false);
    for (auto [a, b] : pairs_) {
      if (seen[a] || seen[b]) return false;
      seen[a] = seen[b] = true;
    }
    return true;
  }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int n_;
  std::set<value_type> pairs_;
};

/// Pairs of letters at cyclically adjacent positions, wraparound included.
inline PairSet cyclic_adjacent_pairs(const CyclicSequence& X) {
  PairSet out(X.n());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const int a = X[i], b = X[i + 1];
    if (a == b) throw error(errc::not_a_ucycle, "letter " + std::to_string(a) + " is adjacent to itself");
    out.insert(a, b);
  }
  return out;
}

/// Pairs never adjacent in X. In a 3-Ucycle these form a matching, since
/// two missing pairs {a,b}, {a,c} would leave {a,b,c} uncovered.
inline PairSet missing_pairs(const CyclicSequence& X) {
  const auto present = cyclic_adjacent_pairs(X);
  PairSet out(X.n());
  for (int a = 1; a <= X.n(); ++a)
    for (int b = a + 1; b <= X.n(); ++b)
      if (!present.contains(a, b)) out.insert(a, b);
  if (!out.is_matching()) throw error(errc::not_a_ucycle, "two missing pairs share a letter");
  return out;
}

/// x_1..x_n with x_1 = first and x_n = last character of the Ucycle, and
/// every missing pair sitting in one of the designated slots.
struct BoundaryPermutation {
  std::vector<int> x;
  int list = 0;  // odd n: which of the three slot lists was used; 0 for even n
};

namespace detail {

using Slot = std::pair<std::size_t, std::size_t>;  // zero-based positions

inline std::vector<Slot> slot_list(int n, int list) {
  std::vector<Slot> slots;
  const auto un = static_cast<std::size_t>(n);
  switch (list) {
    case 0:  // even n: {x1,x2},{x3,x4},...,{x_{n-1},x_n}
      for (std::size_t i = 0; i + 1 < un; i += 2) slots.emplace_back(i, i + 1);
      break;
    case 1:  // {x1,x2},...,{x_{n-2},x_{n-1}}
      for (std::size_t i = 0; i + 2 < un; i += 2) slots.emplace_back(i, i + 1);
      break;
    case 2:  // {x1,x2},{x4,x5},{x6,x7},...,{x_{n-1},x_n}
      slots.emplace_back(0, 1);
      for (std::size_t i = 3; i + 1 < un; i += 2) slots.emplace_back(i, i + 1);
      break;
    case 3:  // {x2,x3},...,{x_{n-1},x_n}
      for (std::size_t i = 1; i + 1 < un; i += 2) slots.emplace_back(i, i + 1);
      break;
  }
  return slots;
}

inline std::optional<std::vector<int>> place(const PairSet& missing, int first, int last,
                                             const std::vector<Slot>& slots) {
  const int n = missing.n();
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> x(un, 0);
  std::vector<bool> used(un + 1, false);
  std::vector<bool> slot_taken(slots.size(), false);
  x[0] = first;
  x[un - 1] = last;
  used[first] = used[last] = true;

  // endpoint letters: their partner goes in the other half of the endpoint's slot
  for (auto [pos, letter] : {std::pair{std::size_t{0}, first}, std::pair{un - 1, last}}) {
    const auto partner = missing.partner(letter);
    if (!partner) continue;
    auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& s) { return s.first == pos || s.second == pos; });
    if (it == slots.end()) return std::nullopt;
    const std::size_t other = it->first == pos ? it->second : it->first;
    if (x[other] != 0) return std::nullopt;
    x[other] = *partner;
    used[*partner] = true;
    slot_taken[it - slots.begin()] = true;
  }
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (x[slots[i].first] != 0 || x[slots[i].second] != 0) slot_taken[i] = true;

  std::size_t next_slot = 0;
  for (auto [a, b] : missing) {
    if (used[a] || used[b]) continue;  // already placed at an endpoint
    while (next_slot < slots.size() && slot_taken[next_slot]) ++next_slot;
    if (next_slot == slots.size()) return std::nullopt;
    x[slots[next_slot].first] = a;
    x[slots[next_slot].second] = b;
    used[a] = used[b] = true;
    slot_taken[next_slot] = true;
  }
  int letter = 1;
  for (auto& v : x) {
    if (v != 0) continue;
    while (used[letter]) ++letter;
    v = letter;
    used[letter] = true;
  }
  return x;
}

}  // namespace detail

inline BoundaryPermutation build_permutation(const CyclicSequence& X, const PairSet& missing) {
  const int n = X.n();
  if (!missing.is_matching() || missing.size() > static_cast<std::size_t>(n / 2))
    throw error(errc::not_a_ucycle, "missing pairs do not form a matching of size <= n/2");
  const int first = X.front(), last = X.back();
  if (n % 2 == 0) {
    if (auto x = detail::place(missing, first, last, detail::slot_list(n, 0))) return {std::move(*x), 0};
    throw error(errc::not_a_ucycle, "missing pairs cannot be placed in the boundary permutation");
  }
  const bool first_missing = missing.partner(first).has_value();
  const bool last_missing = missing.partner(last).has_value();
  int preferred = 1;
  if (last_missing && !first_missing) preferred = 3;
  if (first_missing && last_missing) preferred = 2;
  std::array<int, 3> order{preferred, preferred == 1 ? 2 : 1, preferred == 3 ? 2 : 3};
  for (int list : order)
    if (auto x = detail::place(missing, first, last, detail::slot_list(n, list))) return {std::move(*x), list};
  throw error(errc::not_a_ucycle, "missing pairs fit none of the three slot lists");
}

/// Left-to-right over the original adjacencies a_i a_{i+1}: the first
/// occurrence of each non-excluded pair is written as a_i a_{i+1} a_i a_{i+1}.
inline std::vector<int> double_first_instances(std::span<const int> X, const PairSet& excluded) {
  std::vector<int> out;
  if (X.empty()) return out;
  out.reserve(X.size() * 2);
  PairSet marked(excluded.n());
  out.push_back(X[0]);
  for (std::size_t i = 0; i + 1 < X.size(); ++i) {
    const int a = X[i], b = X[i + 1];
    out.push_back(b);
    if (a == b || excluded.contains(a, b) || marked.contains(a, b)) continue;
    marked.insert(a, b);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

/// Consecutive pairs of the boundary permutation, {x_n, x_1} included.
inline PairSet boundary_pairs(const BoundaryPermutation& perm) {
  const auto& x = perm.x;
  PairSet out(static_cast<int>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out.insert(x[i], x[(i + 1) % x.size()]);
  return out;
}

/// 3-Ucycle on [n] -> 3-Mcycle on [n] of length C(n+2,3).
inline CyclicSequence convert3(const CyclicSequence& X) {
  if (X.t() != 3 || X.kind() != Kind::subset) throw error(errc::input, "convert3 expects a 3-Ucycle");
  if (!verify_cycle(X).ok) throw error(errc::not_a_ucycle, "input is not a 3-Ucycle on [" + std::to_string(X.n()) + "]");
  const auto missing = missing_pairs(X);
  const auto perm = build_permutation(X, missing);
  auto out = double_first_instances(X.symbols(), boundary_pairs(perm));
  for (int letter : perm.x) out.insert(out.end(), 3, letter);
  CyclicSequence result(std::move(out), X.n(), 3, Kind::multiset);
  require_valid(result, "3-Ucycle conversion");
  return result;
}

/// 2-Ucycle -> 2-Mcycle: the first occurrence of every letter is doubled.
inline CyclicSequence convert2(const CyclicSequence& X) {
  if (X.t() != 2 || X.kind() != Kind::subset) throw error(errc::input, "convert2 expects a 2-Ucycle");
  if (!verify_cycle(X).ok) throw error(errc::not_a_ucycle, "input is not a 2-Ucycle on [" + std::to_string(X.n()) + "]");
  std::vector<bool> seen(X.n() + 1, false);
  std::vector<int> out;
  out.reserve(X.size() + X.n());
  for (int a : X.symbols()) {
    out.push_back(a);
    if (!seen[a]) out.push_back(a);
    seen[a] = true;
  }
  CyclicSequence result(std::move(out), X.n(), 2, Kind::multiset);
  require_valid(result, "2-Ucycle conversion");
  return result;
}

}  // namespace mcycle::convert
