#include "mfcalc/integer.hpp"

#include <limits>

#include "mfcalc/error.hpp"

namespace mfcalc {

std::string to_string(const Integer& value) { return value.get_str(); }

std::int64_t to_int64(const Integer& value) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (value < lo || value > hi) {
    throw DomainError("integer " + value.get_str() + " exceeds 64 bits");
  }
  return std::stoll(value.get_str());
}

std::uint64_t to_uint64(const Integer& value) {
  static const Integer hi(std::to_string(std::numeric_limits<std::uint64_t>::max()));
  if (value < 0 || value > hi) {
    throw DomainError("integer " + value.get_str() +
                      " is not an unsigned 64-bit value");
  }
  return std::stoull(value.get_str());
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace mfcalc
