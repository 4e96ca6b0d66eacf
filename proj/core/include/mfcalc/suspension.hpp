#pragma once

#include "mfcalc/graded_group.hpp"
#include "mfcalc/manifold.hpp"
#include "mfcalc/presentation.hpp"

namespace mfcalc {

/// Sigma_i N. Closed forms are applied in this order:
///   1. spheres:            Sigma_i S^n = S^(n+1)
///   2. distribution:       Sigma_i(N1 # ... # Nk) = Sigma_i N1 # ... when every
///                          summand is simply connected and dim N >= 4
///   3. sphere products:    Sigma_i(S^p x S^q) = S^p x S^(q+1) # S^(p+1) x S^q
///                          for i = 0, or for i = 1 when q >= 3
///      surfaces:           Sigma_0(Surf(g)) = #_{2g} S^1 x S^2
///   4. stable index merge: Sigma-stable N has its index normalized to 0
/// Anything else stays as an unevaluated Sig atom. Throws
/// DomainError("dimension too small") when dim N < 2.
ManifoldExpr suspend(const ManifoldExpr& n, FramingIndex i);

/// Spheres and single sphere products with a factor of dimension >= 3.
bool is_sigma_stable(const ManifoldExpr& n);

/// H_*(Sigma_i N) = reduced H_*(SN) + H_*(N - point), computed from H_*(N).
/// The result does not depend on i.
GradedGroup suspension_homology(const ManifoldExpr& n, FramingIndex i);

/// Same formula on raw graded data for a closed oriented n-manifold.
GradedGroup suspension_homology(const GradedGroup& h, int n);

/// w2(Sigma_i N) != 0 iff w2(N) != 0. Requires dim N >= 4; throws
/// DomainError("restriction isomorphism unavailable") otherwise.
bool suspension_w2(const ManifoldExpr& n);

/// H_*(N) agrees with H_*(S^dim N).
bool is_homology_sphere(const ManifoldExpr& n);
bool is_homology_sphere(const GradedGroup& h, int n);

/// pi_1 of Sigma_i of the genus-g surface. Sigma_0 gives the free group on
/// a1,b1,...,ag,bg; Sigma_1 adds a central z with z * prod [aj,bj] = 1.
/// g = 0 returns the empty presentation.
GroupPresentation surface_pi1(int genus, FramingIndex i);

}  // namespace mfcalc
