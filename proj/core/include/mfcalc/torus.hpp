#pragma once

#include <vector>

#include "mfcalc/integer.hpp"
#include "mfcalc/manifold.hpp"

namespace mfcalc {

/// b_i = (k-1)C(k-1,i) - C(k-1,i+1) + (k-1)C(k-1,i-1) - C(k-1,i-2) for
/// 1 <= i <= floor(k/2). Throws DomainError for k < 1.
std::vector<Integer> b_coefficients(int k);

/// Q_k = #_{c_1}(S^3 x S^(k+1)) # ... # #_{c_r}(S^(r+2) x S^(k-r+2)),
/// r = floor(k/2), with c_i = b_i except c_r = b_r / 2 for even k.
ManifoldExpr q_manifold(int k);

/// Q_k again, this time by iterating circle bundles over
/// N = #_{k-1}(S^2 x S^3): each step replaces one S^2 x S^(n-2) summand by
/// S^3 x S^(n-2) and applies Sigma_1 to the rest.
ManifoldExpr torus_tower(int k);

/// Total space of the principal T^k bundle over a simply connected
/// 4-manifold with second Betti number k.
struct TorusBundleSpec {
  int k = 1;
};

ManifoldExpr theorem_d(const TorusBundleSpec& spec);

}  // namespace mfcalc
