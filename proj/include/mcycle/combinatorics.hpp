#pragma once

// Multisets, forms, difference classes and patterns over [n] = {1..n},
// plus the exact binomial arithmetic behind the divisibility condition.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcycle/error.hpp"

namespace mcycle {

/// Whether windows range over t-multisets (Mcycles) or t-subsets (Ucycles).
enum class Kind { multiset, subset };

constexpr char kind_code(Kind kind) noexcept { return kind == Kind::multiset ? 'm' : 'u'; }

inline Kind kind_from_code(std::string_view code) {
  if (code == "m") return Kind::multiset;
  if (code == "u") return Kind::subset;
  throw error(errc::input, "unknown kind '" + std::string(code) + "' (expected m or u)");
}

/// Exact C(n, k). Throws std::overflow_error when the value does not fit in
/// 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n-k+i) / i stays integral at every step
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Number of windows in a universal cycle: C(n+t-1, t) or C(n, t).
inline std::uint64_t cycle_length(int n, int t, Kind kind) {
  if (n < 1 || t < 1) throw error(errc::input, "n and t must be positive");
  return kind == Kind::multiset ? binomial(n + t - 1, t) : binomial(n, t);
}

/// n | C(n+t-1, t) for multisets, n | C(n, t) for subsets.
inline bool necessary_condition(int n, int t, Kind kind) {
  return cycle_length(n, t, kind) % static_cast<std::uint64_t>(n) == 0;
}

namespace detail {

inline std::string join(std::span<const int> xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace detail

/// A t-multiset of [n], stored sorted nondecreasing.
class Multiset {
 public:
  Multiset(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
    if (n_ < 1 || elements_.empty()) throw error(errc::input, "multiset needs n >= 1 and t >= 1");
    std::sort(elements_.begin(), elements_.end());
    if (elements_.front() < 1 || elements_.back() > n_)
      throw error(errc::input, "multiset element outside [1," + std::to_string(n_) + "]");
  }

  std::span<const int> elements() const noexcept { return elements_; }
  int n() const noexcept { return n_; }
  int t() const noexcept { return static_cast<int>(elements_.size()); }
  bool is_subset() const noexcept {
    return std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end();
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<int> elements_;
  int n_;
};

/// Ordered tuple of cyclic differences; the last coordinate uses n for 0.
class Form {
 public:
  Form(std::vector<int> diffs, int n, Kind kind) : diffs_(std::move(diffs)), n_(n), kind_(kind) {
    if (diffs_.empty() || n_ < 1) throw error(errc::input, "form needs t >= 1 and n >= 1");
    const int lo = kind_ == Kind::multiset ? 0 : 1;
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
      if (diffs_[i] < lo || diffs_[i] > n_ - 1)
        throw error(errc::input, "form coordinate out of range: (" + detail::join(diffs_) + ")");
    if (diffs_.back() < 1 || diffs_.back() > n_)
      throw error(errc::input, "closing form coordinate out of range: (" + detail::join(diffs_) + ")");
    if (std::accumulate(diffs_.begin(), diffs_.end(), 0) != n_)
      throw error(errc::input, "form (" + detail::join(diffs_) + ") does not sum to n");
  }

  std::span<const int> diffs() const noexcept { return diffs_; }
  int n() const noexcept { return n_; }
  int t() const noexcept { return static_cast<int>(diffs_.size()); }
  Kind kind() const noexcept { return kind_; }

  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::vector<int> diffs_;
  int n_;
  Kind kind_;
};

/// Partition of t by the multiplicities of equal class parts.
struct Pattern {
  std::vector<int> multiplicities;  // nonincreasing, sums to t

  bool good() const noexcept {
    return std::find(multiplicities.begin(), multiplicities.end(), 1) != multiplicities.end();
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  return os << '<' << detail::join(p.multiplicities) << '>';
}

/// Unordered multiset of differences (a partition of n into t parts, zeros
/// allowed for multisets), optionally with its distinguished coordinate.
class DifferenceClass {
 public:
  DifferenceClass(std::vector<int> parts, int n, Kind kind, std::optional<int> distinguished = {})
      : parts_(std::move(parts)), n_(n), kind_(kind) {
    if (parts_.empty() || n_ < 1) throw error(errc::input, "class needs t >= 1 and n >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    const int lo = kind_ == Kind::multiset ? 0 : 1;
    if (parts_.back() < lo || parts_.front() > n_)
      throw error(errc::input, "class part out of range: [" + detail::join(parts_) + "]");
    if (std::accumulate(parts_.begin(), parts_.end(), 0) != n_)
      throw error(errc::input, "class [" + detail::join(parts_) + "] does not sum to n");
    if (distinguished) set_distinguished(*distinguished);
  }

  std::span<const int> parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  int t() const noexcept { return static_cast<int>(parts_.size()); }
  Kind kind() const noexcept { return kind_; }
  std::optional<int> distinguished() const noexcept { return distinguished_; }

  int multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  /// Part values occurring exactly once, largest first.
  std::vector<int> unique_values() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (j - i == 1) out.push_back(parts_[i]);
      i = j;
    }
    return out;
  }

  void set_distinguished(int value) {
    if (multiplicity(value) != 1)
      throw error(errc::input, "distinguished value " + std::to_string(value) +
                                   " must occur exactly once in [" + detail::join(parts_) + "]");
    distinguished_ = value;
  }

  std::string str() const {
    if (!distinguished_) return "[" + detail::join(parts_) + "]";
    std::vector<int> rest(parts_);
    rest.erase(std::find(rest.begin(), rest.end(), *distinguished_));
    return "[" + detail::join(rest) + ";" + std::to_string(*distinguished_) + "]";
  }

  friend bool operator==(const DifferenceClass&, const DifferenceClass&) = default;

 private:
  std::vector<int> parts_;
  int n_;
  Kind kind_;
  std::optional<int> distinguished_;
};

inline Form form_of(const Multiset& s, Kind kind = Kind::multiset) {
  if (kind == Kind::subset && !s.is_subset())
    throw error(errc::input, "subset form requested for a multiset with repeats");
  auto e = s.elements();
  std::vector<int> diffs(e.size());
  for (std::size_t i = 0; i + 1 < e.size(); ++i) diffs[i] = e[i + 1] - e[i];
  diffs.back() = s.n() - (e.back() - e.front());
  return Form(std::move(diffs), s.n(), kind);
}

inline bool is_cyclic_equivalent(const Form& f, const Form& g) {
  if (f.n() != g.n() || f.t() != g.t() || f.kind() != g.kind())
    throw error(errc::input, "cyclic equivalence needs forms with equal (n, t, kind)");
  auto a = f.diffs();
  auto b = g.diffs();
  const std::size_t t = a.size();
  for (std::size_t r = 0; r < t; ++r) {
    bool same = true;
    for (std::size_t i = 0; i < t && same; ++i) same = a[(i + r) % t] == b[i];
    if (same) return true;
  }
  return false;
}

inline DifferenceClass class_of(const Form& f) {
  return DifferenceClass({f.diffs().begin(), f.diffs().end()}, f.n(), f.kind());
}

/// All classes for (n, t, kind), in decreasing lexicographic order of the
/// nonincreasing part tuples.
inline std::vector<DifferenceClass> enumerate_classes(int n, int t, Kind kind) {
  if (n < 1 || t < 1) throw error(errc::input, "n and t must be positive");
  std::vector<DifferenceClass> out;
  std::vector<int> parts(t);
  const int lo = kind == Kind::multiset ? 0 : 1;
  auto rec = [&](auto&& self, int i, int remaining, int cap) -> void {
    const int slots = t - i;
    if (slots == 1) {
      if (remaining >= lo && remaining <= cap) {
        parts[i] = remaining;
        out.emplace_back(parts, n, kind);
      }
      return;
    }
    const int hi = std::min(cap, remaining - lo * (slots - 1));
    const int floor = (remaining + slots - 1) / slots;
    for (int p = hi; p >= std::max(floor, lo); --p) {
      parts[i] = p;
      self(self, i + 1, remaining - p, p);
    }
  };
  rec(rec, 0, n, n);
  return out;
}

inline Pattern pattern_of(const DifferenceClass& c) {
  Pattern p;
  auto parts = c.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    p.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(p.multiplicities.begin(), p.multiplicities.end(), std::greater<>());
  return p;
}

/// True when some class of (n, t, kind) has a bad pattern.
inline bool has_bad_pattern(int n, int t, Kind kind) {
  for (const auto& c : enumerate_classes(n, t, kind))
    if (!pattern_of(c).good()) return true;
  return false;
}

/// Subset class over [n+t] -> multiset class over [n]: every part minus one.
inline DifferenceClass shift_down(const DifferenceClass& c) {
  if (c.kind() != Kind::subset) throw error(errc::input, "shift_down expects a subset class");
  std::vector<int> parts(c.parts().begin(), c.parts().end());
  for (int& p : parts) --p;
  std::optional<int> dist;
  if (c.distinguished()) dist = *c.distinguished() - 1;
  return DifferenceClass(std::move(parts), c.n() - c.t(), Kind::multiset, dist);
}

/// Inverse of shift_down.
inline DifferenceClass shift_up(const DifferenceClass& c) {
  if (c.kind() != Kind::multiset) throw error(errc::input, "shift_up expects a multiset class");
  std::vector<int> parts(c.parts().begin(), c.parts().end());
  for (int& p : parts) ++p;
  std::optional<int> dist;
  if (c.distinguished()) dist = *c.distinguished() + 1;
  return DifferenceClass(std::move(parts), c.n() + c.t(), Kind::subset, dist);
}

}  // namespace mcycle
