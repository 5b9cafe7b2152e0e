#pragma once

#include <span>
#include <string>
#include <vector>

#include "mcycle/combinatorics.hpp"

namespace mcycle {

/// A cyclic string over [n] declared as a candidate t-Mcycle or t-Ucycle.
/// Position 0 is the linearization point; the last symbol is adjacent to it.
class CyclicSequence {
 public:
  CyclicSequence(std::vector<int> symbols, int n, int t, Kind kind)
      : symbols_(std::move(symbols)), n_(n), t_(t), kind_(kind) {
    if (n_ < 1 || t_ < 1) throw error(errc::input, "sequence needs n >= 1 and t >= 1");
    if (symbols_.empty()) throw error(errc::input, "sequence is empty");
    for (int s : symbols_)
      if (s < 1 || s > n_)
        throw error(errc::input, "symbol " + std::to_string(s) + " outside [1," + std::to_string(n_) + "]");
  }

  std::span<const int> symbols() const noexcept { return symbols_; }
  const std::vector<int>& vec() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  int operator[](std::size_t i) const noexcept { return symbols_[i % symbols_.size()]; }
  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  Kind kind() const noexcept { return kind_; }

  int front() const noexcept { return symbols_.front(); }
  int back() const noexcept { return symbols_.back(); }

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<int> symbols_;
  int n_;
  int t_;
  Kind kind_;
};

/// Space-separated decimal rendering, e.g. "1 1 1 2 3".
inline std::string to_string(std::span<const int> symbols) { return detail::join(symbols, " "); }

}  // namespace mcycle
