#pragma once

// Ground-truth checker for candidate universal cycles. Every construction in
// this library runs its output through verify_cycle before returning it.

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcycle/combinatorics.hpp"
#include "mcycle/sequence.hpp"

namespace mcycle {

/// Dense ranking of the sorted t-multisets (or t-subsets) of [n] onto
/// 0..C-1 via the combinatorial number system. A multiset s_1<=...<=s_t
/// maps to the strictly increasing tuple s_i + (i-1) first.
class WindowIndex {
 public:
  WindowIndex(int n, int t, Kind kind) : n_(n), t_(t), kind_(kind), size_(cycle_length(n, t, kind)) {
    const int top = n + t;
    table_.assign(static_cast<std::size_t>(top + 1) * (t + 1), 0);
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= t; ++b) table_[a * (t + 1) + b] = b > a ? 0 : binomial(a, b);
  }

  std::uint64_t size() const noexcept { return size_; }

  /// Rank of a sorted tuple that is a valid element of the universe.
  std::uint64_t rank(std::span<const int> sorted) const noexcept {
    std::uint64_t r = 0;
    const int shift = kind_ == Kind::multiset ? 1 : 0;
    for (int i = 0; i < t_; ++i) {
      const int u = sorted[i] + shift * i;  // 1-based, strictly increasing
      r += table_[(u - 1) * (t_ + 1) + (i + 1)];
    }
    return r;
  }

  /// True when the sorted tuple belongs to the universe (range, and
  /// distinctness for subsets).
  bool admissible(std::span<const int> sorted) const noexcept {
    if (sorted.front() < 1 || sorted.back() > n_) return false;
    if (kind_ == Kind::subset)
      return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return true;
  }

  /// Calls fn(tuple) for every element of the universe in lexicographic
  /// order until fn returns false.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::vector<int> cur(t_);
    const int step = kind_ == Kind::multiset ? 0 : 1;
    auto rec = [&](auto&& self, int i, int lo) -> bool {
      if (i == t_) return fn(std::span<const int>(cur));
      const int hi = n_ - step * (t_ - 1 - i);
      for (int v = lo; v <= hi; ++v) {
        cur[i] = v;
        if (!self(self, i + 1, v + step)) return false;
      }
      return true;
    };
    rec(rec, 0, 1);
  }

 private:
  int n_;
  int t_;
  Kind kind_;
  std::uint64_t size_;
  std::vector<std::uint64_t> table_;
};

/// The length-t windows of a cyclic sequence as sorted tuples, one per
/// position, including the t-1 windows that wrap around.
inline std::vector<std::vector<int>> windows(std::span<const int> seq, int t) {
  if (t < 1 || seq.size() < static_cast<std::size_t>(t))
    throw error(errc::input, "sequence shorter than t");
  std::vector<std::vector<int>> out(seq.size(), std::vector<int>(t));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (int j = 0; j < t; ++j) out[i][j] = seq[(i + j) % seq.size()];
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

inline std::vector<std::vector<int>> windows(const CyclicSequence& seq) { return windows(seq.symbols(), seq.t()); }

struct VerificationReport {
  struct Duplicate {
    std::vector<int> multiset;
    std::vector<std::size_t> positions;
  };

  static constexpr std::size_t listing_cap = 100;

  bool ok = false;
  std::uint64_t window_count = 0;
  std::uint64_t length_expected = 0;
  // Listings are capped at listing_cap entries; the *_count fields are exact.
  std::vector<Duplicate> duplicates;
  std::uint64_t duplicate_count = 0;
  std::vector<std::vector<int>> missing;
  std::uint64_t missing_count = 0;
  // Ucycle windows that repeat a symbol.
  std::vector<std::size_t> invalid_positions;
  std::uint64_t invalid_count = 0;
  std::vector<std::string> diagnostics;
};

/// Checks that the windows of seq enumerate every t-multiset (t-subset) of
/// [n] exactly once. Never throws on malformed input; failures are report
/// content.
inline VerificationReport verify_cycle(std::span<const int> seq, int n, int t, Kind kind) {
  VerificationReport rep;
  rep.window_count = seq.size();
  try {
    rep.length_expected = cycle_length(n, t, kind);
  } catch (const std::exception& e) {
    rep.diagnostics.push_back(e.what());
    return rep;
  }
  if (seq.size() != rep.length_expected) {
    rep.diagnostics.push_back("length " + std::to_string(seq.size()) + " != expected " +
                              std::to_string(rep.length_expected));
  }
  if (seq.size() < static_cast<std::size_t>(t)) {
    rep.diagnostics.push_back("sequence shorter than t");
    rep.missing_count = rep.length_expected;
    return rep;
  }
  std::size_t out_of_range = 0;
  for (int s : seq)
    if (s < 1 || s > n) ++out_of_range;
  if (out_of_range) {
    rep.diagnostics.push_back(std::to_string(out_of_range) + " symbols outside [1," + std::to_string(n) + "]");
  }

  const WindowIndex index(n, t, kind);
  constexpr std::uint64_t dense_limit = std::uint64_t{1} << 26;
  const bool dense = index.size() <= dense_limit;
  std::vector<std::uint32_t> dense_counts(dense ? index.size() : 0);
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_counts;
  auto count_of = [&](std::uint64_t r) -> std::uint32_t& { return dense ? dense_counts[r] : sparse_counts[r]; };

  // rank per position, or npos for windows outside the universe
  constexpr std::uint64_t npos = ~std::uint64_t{0};
  std::vector<std::uint64_t> ranks(seq.size(), npos);
  std::vector<int> w(t);
  std::uint64_t present = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (int j = 0; j < t; ++j) w[j] = seq[(i + j) % seq.size()];
    std::sort(w.begin(), w.end());
    if (w.front() < 1 || w.back() > n) continue;
    if (!index.admissible(w)) {
      ++rep.invalid_count;
      if (rep.invalid_positions.size() < VerificationReport::listing_cap) rep.invalid_positions.push_back(i);
      continue;
    }
    const auto r = index.rank(w);
    ranks[i] = r;
    auto& c = count_of(r);
    if (c == 0) ++present;
    if (c == 1) ++rep.duplicate_count;
    ++c;
  }
  if (rep.invalid_count)
    rep.diagnostics.push_back(std::to_string(rep.invalid_count) + " windows repeat a symbol in a Ucycle");

  if (rep.duplicate_count) {
    std::unordered_map<std::uint64_t, std::size_t> slot;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (ranks[i] == npos || count_of(ranks[i]) < 2) continue;
      auto it = slot.find(ranks[i]);
      if (it == slot.end()) {
        if (rep.duplicates.size() >= VerificationReport::listing_cap) continue;
        std::vector<int> m(t);
        for (int j = 0; j < t; ++j) m[j] = seq[(i + j) % seq.size()];
        std::sort(m.begin(), m.end());
        it = slot.emplace(ranks[i], rep.duplicates.size()).first;
        rep.duplicates.push_back({std::move(m), {}});
      }
      rep.duplicates[it->second].positions.push_back(i);
    }
  }

  rep.missing_count = index.size() - present;
  if (rep.missing_count) {
    index.for_each([&](std::span<const int> m) {
      const auto r = index.rank(m);
      const bool seen = dense ? dense_counts[r] != 0 : sparse_counts.count(r) != 0;
      if (!seen) rep.missing.emplace_back(m.begin(), m.end());
      return rep.missing.size() < VerificationReport::listing_cap;
    });
  }

  rep.ok = rep.duplicate_count == 0 && rep.missing_count == 0 && rep.invalid_count == 0 && out_of_range == 0 &&
           rep.window_count == rep.length_expected;
  return rep;
}

inline VerificationReport verify_cycle(const CyclicSequence& seq) {
  return verify_cycle(seq.symbols(), seq.n(), seq.t(), seq.kind());
}

/// Throws errc::verification_failed with a short summary unless seq is valid.
inline void require_valid(const CyclicSequence& seq, std::string_view what) {
  const auto rep = verify_cycle(seq);
  if (rep.ok) return;
  std::ostringstream os;
  os << what << " produced an invalid cycle: duplicates=" << rep.duplicate_count << " missing=" << rep.missing_count
     << " invalid=" << rep.invalid_count << " length=" << rep.window_count << "/" << rep.length_expected;
  throw error(errc::verification_failed, os.str());
}

}  // namespace mcycle
