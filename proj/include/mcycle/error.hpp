#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcycle {

/// Failure categories surfaced by the constructions, the verifier and the
/// file reader. The CLI maps these onto process exit codes.
enum class errc {
  input,               // malformed arguments, out-of-range symbols, bad files
  bad_pattern,         // a difference class has no part of multiplicity one
  not_eulerian,        // transition graph unbalanced or disconnected
  not_coprime_shift,   // block shift shares a factor with n
  not_a_ucycle,        // conversion input is not a Ucycle
  budget_exceeded,     // exhaustive search over its position budget
  verification_failed  // a construction produced an invalid cycle
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::input: return "InputError";
    case errc::bad_pattern: return "BadPattern";
    case errc::not_eulerian: return "NotEulerian";
    case errc::not_coprime_shift: return "NotCoprimeShift";
    case errc::not_a_ucycle: return "NotAUcycle";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace mcycle
