#pragma once

#include <map>
#include <string>

#include "mfcalc/abelian_group.hpp"
#include "mfcalc/polynomial.hpp"

namespace mfcalc {

/// Degreewise finitely generated abelian group with finite support. Degrees
/// that are absent are the zero group; zero groups are never stored.
class GradedGroup {
 public:
  GradedGroup() = default;
  explicit GradedGroup(std::map<int, FgAbGroup> groups);

  /// Z in degrees 0 and n (the homology of the n-sphere).
  static GradedGroup sphere(int n);

  FgAbGroup at(int degree) const;
  void set(int degree, FgAbGroup group);
  const std::map<int, FgAbGroup>& groups() const { return groups_; }

  /// Largest degree with a nonzero group, or -1 when everything vanishes.
  int top_degree() const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

  /// One "H_i = ..." line per nonzero degree.
  std::string to_string(const std::string& prefix = "H") const;

 private:
  std::map<int, FgAbGroup> groups_;
};

GradedGroup graded_sum(const GradedGroup& a, const GradedGroup& b);

/// Moves degree i to degree i + d. Throws DomainError("negative degree") when
/// a nonzero group would land below degree 0.
GradedGroup shift(const GradedGroup& g, int d);

/// Reduced version: one copy of Z removed from degree 0.
GradedGroup reduced(const GradedGroup& g);

/// Coefficient i is the free rank in degree i; torsion is ignored.
IntPolynomial poincare_polynomial(const GradedGroup& g);

}  // namespace mfcalc
