#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfcalc/integer.hpp"

namespace mfcalc {

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dm.
///
/// The torsion coefficients are kept as elementary divisors: every entry is
/// at least 2 and d1 | d2 | ... | dm. With that normal form two groups are
/// isomorphic exactly when their (free_rank, torsion) pairs are equal.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  /// Builds Z^free_rank + Z/c1 + ... from arbitrary cyclic orders. Orders of
  /// absolute value 1 are dropped and zero orders count as free summands.
  FgAbGroup(std::uint64_t free_rank, std::vector<Integer> cyclic_orders);

  static FgAbGroup free(std::uint64_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer& order) {
    return FgAbGroup(0, {order});
  }

  /// Trusts `divisors` to already be a divisibility chain of entries >= 2.
  /// Throws std::invalid_argument otherwise.
  static FgAbGroup from_elementary_divisors(std::uint64_t free_rank,
                                            std::vector<Integer> divisors);

  std::uint64_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Infinite cyclic.
  bool is_z() const { return free_rank_ == 1 && torsion_.empty(); }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

  /// "Z^2 + Z/3 + Z/3"; rank one prints as "Z" and the trivial group as "0".
  std::string to_string() const;

 private:
  std::uint64_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// The direct sum of `copies` copies of `g`.
FgAbGroup repeat(const FgAbGroup& g, std::uint64_t copies);

/// Parses the text form written by FgAbGroup::to_string. Summands may repeat
/// and appear in any order ("Z/3 + Z + Z/3"); "Z^1" and "Z" are equivalent.
FgAbGroup parse_group(std::string_view text);

/// Rewrites cyclic orders as an elementary-divisor chain (1s removed).
std::vector<Integer> elementary_divisor_chain(std::vector<Integer> orders);

/// Prime-power decomposition of the torsion subgroup, as a sorted list of
/// prime powers (e.g. Z/12 + Z/2 -> [2, 3, 4]).
std::vector<Integer> primary_decomposition(const FgAbGroup& g);

}  // namespace mfcalc
