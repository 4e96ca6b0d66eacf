#pragma once

#include <string>

#include "mfcalc/abelian_group.hpp"
#include "mfcalc/manifold.hpp"

namespace mfcalc {

/// Z/2-valued framing invariant of a framed circle (the epsilon and delta
/// bits of the tunnel-sum calculus).
enum class FramingBit : int { Zero = 0, One = 1 };

inline int to_int(FramingBit b) { return static_cast<int>(b); }
FramingBit framing_bit(int b);  // throws DomainError unless b is 0 or 1

/// Oriented circle bundle total -> base, recorded through invariants only.
struct CircleBundle {
  ManifoldExpr base;
  ManifoldExpr total;
  bool euler_primitive = true;
  /// The Euler class reduces mod 2 to w2(base).
  bool euler_equals_w2_mod2 = false;

  /// Throws DomainError unless dim total = dim base + 1 and a simply
  /// connected total space comes with a primitive Euler class.
  void validate() const;
};

/// Epsilon of a fibre with its canonical frame: 0 if w2(B) != 0, else 1.
FramingBit epsilon_of_base(const ManifoldExpr& base);

/// Epsilon after twisting the frame: 1 -> 0; 0 -> 1 when w2 = 0; 0 -> 0
/// when w2 != 0.
FramingBit flip(FramingBit epsilon, bool w2_nonzero);

/// Gluing M and S^1 x N along framed circles with bits epsilon, delta:
/// M # Sigma_0 N when the bits agree, M # Sigma_1 N otherwise, with both
/// choices identified when w2(M) != 0. Requires M simply connected,
/// dim M >= 5, dim N = dim M - 1; otherwise throws
/// DomainError("tunnel sum hypothesis violated: ...").
ManifoldExpr tunnel_sum(const ManifoldExpr& m, FramingBit epsilon,
                        const ManifoldExpr& n, FramingBit delta);

/// Total space of the pullback of E -> B along B # N -> B:
/// E # Sigma_0 N if w2(B) != 0, E # Sigma_1 N if w2(B) = 0, index
/// normalized to 0 when w2(E) != 0.
ManifoldExpr pullback_total(const ManifoldExpr& e, const ManifoldExpr& b,
                            const ManifoldExpr& n);
ManifoldExpr pullback_total(const CircleBundle& bundle, const ManifoldExpr& n);

/// Rebuilds a simply connected 5-manifold from (H_2, w2):
///   w2 = 0:  #_r S^2xS^3 # M(k_1) # ... # M(k_t)
///   w2 != 0: the same plus one H in {S^2~xS^3, W, X(i)}
/// Throws DomainError("not realizable as 1-connected 5-manifold data") when
/// no such decomposition exists.
ManifoldExpr smale_barden_decompose(const FgAbGroup& h2, bool w2);

/// Intermediate data of the 6-manifold classification.
struct Classification6 {
  ManifoldExpr quotient = ManifoldExpr::sphere(5);       // N
  ManifoldExpr split_summand = ManifoldExpr::sphere(5);  // carries the Euler class
  ManifoldExpr complement = ManifoldExpr::sphere(5);     // N = split_summand # N'
  FramingIndex index = FramingIndex::Zero;
  ManifoldExpr total = ManifoldExpr::sphere(6);          // S^3xS^3 # Sigma_index N'
};

/// Total space M of a regular circle action on a simply connected
/// 6-manifold, from the quotient's H_2, its w2 and whether the Euler class
/// reduces to w2 mod 2.
Classification6 classify_6mfd_detailed(const FgAbGroup& quotient_h2,
                                       bool quotient_w2, bool euler_equals_w2);
ManifoldExpr classify_6mfd(const FgAbGroup& quotient_h2, bool quotient_w2,
                           bool euler_equals_w2);

/// Atoms allowed in a classification result: S^3xS^3, S^2xS^4 and Sig atoms
/// over M(k), S^2~xS^3, W or X(i).
bool in_six_manifold_grammar(const ManifoldExpr& m);

}  // namespace mfcalc
