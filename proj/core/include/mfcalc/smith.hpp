#pragma once

#include <vector>

#include "mfcalc/abelian_group.hpp"
#include "mfcalc/int_matrix.hpp"

namespace mfcalc {

/// D = U * A * V with U, V unimodular and D diagonal, d1 | d2 | ... | dr,
/// all nonzero diagonal entries positive and zeros last.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of the Smith form (including 1s), without transforms.
std::vector<Integer> elementary_divisors(const IntMatrix& a);

/// Z^rows / im(A).
FgAbGroup cokernel(const IntMatrix& a);

}  // namespace mfcalc
