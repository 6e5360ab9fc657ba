#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raised by the automorphism solver when its node budget runs out
struct BudgetExceeded : Error {
  using Error::Error;
};

// an exact formula produced a non-integer; a finding, not a tool bug
struct NonIntegerResult : Error {
  using Error::Error;
};

inline uint64_t mul_checked(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in group order");
  return r;
}

// seed for every randomized search; DTG_SEED overrides
uint64_t default_seed();

}  // namespace dtg
