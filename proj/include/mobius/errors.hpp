#pragma once

#include <stdexcept>
#include <string>

namespace mobius {

/// Error taxonomy shared by the whole library.  The CLI maps these to its
/// exit-code contract (parse -> 2, bounds -> 3, disagreement -> 4).
enum class errc {
  invalid_input,
  parse_error,
  cycle_detected,
  unknown_element,
  not_comparable,
  not_graded,
  bound_exceeded,
  malformed_composition,
  malformed_partition,
  sum_mismatch,
  mismatched_n,
  condition_violated,
  construction_mismatch,
  not_prime,
  not_knapsack,
  sum_too_large,
  size_mismatch,
  not_in_ideal,
  empty_filter,
  divisibility_mismatch,
  out_of_range,
  arithmetic_overflow,
  disagreement,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::parse_error: return "parse_error";
    case errc::cycle_detected: return "cycle_detected";
    case errc::unknown_element: return "unknown_element";
    case errc::not_comparable: return "not_comparable";
    case errc::not_graded: return "not_graded";
    case errc::bound_exceeded: return "bound_exceeded";
    case errc::malformed_composition: return "malformed_composition";
    case errc::malformed_partition: return "malformed_partition";
    case errc::sum_mismatch: return "sum_mismatch";
    case errc::mismatched_n: return "mismatched_n";
    case errc::condition_violated: return "condition_violated";
    case errc::construction_mismatch: return "construction_mismatch";
    case errc::not_prime: return "not_prime";
    case errc::not_knapsack: return "not_knapsack";
    case errc::sum_too_large: return "sum_too_large";
    case errc::size_mismatch: return "size_mismatch";
    case errc::not_in_ideal: return "not_in_ideal";
    case errc::empty_filter: return "empty_filter";
    case errc::divisibility_mismatch: return "divisibility_mismatch";
    case errc::out_of_range: return "out_of_range";
    case errc::arithmetic_overflow: return "arithmetic_overflow";
    case errc::disagreement: return "disagreement";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace mobius
