#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfcalc/abelian_group.hpp"

namespace mfcalc {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(Word word);

/// Finite group presentation <generators | relators>. Relators are stored
/// freely reduced and may only mention declared generators.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Throws std::invalid_argument when a relator names an undeclared
  /// generator or uses an exponent other than +-1.
  GroupPresentation(std::vector<std::string> generators,
                    std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// Relator as "a1*z*a1^-1*z^-1"; the empty word prints "1".
  std::string word_to_string(const Word& w) const;
  /// "<a1,b1,z|a1*z*a1^-1*z^-1,...>"
  std::string to_string() const;

  friend bool operator==(const GroupPresentation&,
                         const GroupPresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Cokernel of the relator exponent-sum matrix.
FgAbGroup abelianization(const GroupPresentation& p);

}  // namespace mfcalc
