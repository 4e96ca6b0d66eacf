#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mfcalc {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

std::string to_string(const Integer& value);

/// Converts to a machine integer, throwing DomainError when out of range.
std::int64_t to_int64(const Integer& value);
std::uint64_t to_uint64(const Integer& value);

Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace mfcalc
