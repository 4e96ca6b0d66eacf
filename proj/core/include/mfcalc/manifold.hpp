#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mfcalc/graded_group.hpp"
#include "mfcalc/integer.hpp"
#include "mfcalc/polynomial.hpp"

namespace mfcalc {

/// Which of the two circle framings a suspension is glued with:
/// Zero glues by the identity, One by the twist tau.
enum class FramingIndex : int { Zero = 0, One = 1 };

inline int to_int(FramingIndex i) { return static_cast<int>(i); }
FramingIndex framing_index(int i);  // throws DomainError unless i is 0 or 1

enum class Field { Complex, Quaternion };

/// Atom kinds, listed in canonical-form order.
enum class AtomKind {
  Sphere,
  SphereProduct,
  TwistedProduct,
  ProjectiveSpace,
  WuManifold,
  M,
  X,
  Surface,
  Suspension,
};

class ManifoldExpr;

/// A basic closed oriented manifold. Construct through the named factories,
/// which validate parameters and apply the identifications
/// S^p x S^q = S^q x S^p, CP^1 = S^2, HP^1 = S^4, Surf(0) = S^2 and
/// S^1 x S^1 = Surf(1).
class Atom {
 public:
  static Atom sphere(int n);
  static Atom sphere_product(int p, int q);
  /// The nontrivial S^q bundle over S^2, written S^2 ~x S^q.
  static Atom twisted_product(int q);
  static Atom projective_space(Field field, int n);
  /// The Wu manifold W = SU(3)/SO(3).
  static Atom wu();
  /// Smale-Barden M_k, H_2 = Z/k + Z/k.
  static Atom m(int k);
  /// Smale-Barden X_{2^i}, H_2 = Z/2^i + Z/2^i.
  static Atom x(int i);
  static Atom surface(int genus);
  /// Unevaluated Sigma_i(inner). Callers normally go through suspend(),
  /// which only falls back to this when no closed form applies.
  static Atom suspension(FramingIndex index, const ManifoldExpr& inner);

  AtomKind kind() const { return kind_; }
  const std::vector<int>& params() const { return params_; }
  int dim() const { return dim_; }

  bool is_sphere() const { return kind_ == AtomKind::Sphere; }
  /// Only meaningful for suspension atoms.
  FramingIndex suspension_index() const;
  const ManifoldExpr& suspension_inner() const;

  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
  friend bool operator==(const Atom& a, const Atom& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// DSL text, e.g. "SxS(2,3)" or "Sig1(M(3))".
  std::string to_string() const;

 private:
  Atom(AtomKind kind, std::vector<int> params, int dim);

  AtomKind kind_ = AtomKind::Sphere;
  std::vector<int> params_;
  int dim_ = 0;
  std::shared_ptr<const ManifoldExpr> inner_;
};

/// Formal connected sum of atoms in a fixed dimension, stored canonically:
/// sorted by the atom order with multiplicities merged and sphere atoms
/// absorbed. The empty sum is the n-sphere.
class ManifoldExpr {
 public:
  using Term = std::pair<Atom, std::uint64_t>;

  static ManifoldExpr sphere(int n);
  static ManifoldExpr from_atoms(int dim, const std::vector<Atom>& atoms);
  /// Throws DomainError("dimension mismatch ...") if an atom has another
  /// dimension than `dim`.
  ManifoldExpr(int dim, std::vector<Term> terms);
  explicit ManifoldExpr(const Atom& atom);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_sphere() const { return terms_.empty(); }
  /// Number of summands counted with multiplicity.
  std::uint64_t summand_count() const;
  /// Exactly one summand.
  bool is_single_atom() const;
  /// The summand of a single-atom expression.
  const Atom& single_atom() const;

  friend std::strong_ordering operator<=>(const ManifoldExpr& a,
                                          const ManifoldExpr& b);
  friend bool operator==(const ManifoldExpr& a, const ManifoldExpr& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// DSL text with multiplicity sugar: "SxS(2,4) # 2*SxS(3,3)".
  std::string to_string() const;

 private:
  ManifoldExpr(int dim, std::vector<Term> terms, bool already_canonical);

  int dim_ = 0;
  std::vector<Term> terms_;
};

int dim(const ManifoldExpr& m);

/// Throws DomainError("dimension mismatch a vs b") for unequal dimensions.
ManifoldExpr connected_sum(const ManifoldExpr& a, const ManifoldExpr& b);
/// #_copies m; zero copies give the sphere.
ManifoldExpr connected_sum_power(const ManifoldExpr& m, std::uint64_t copies);

ManifoldExpr canonicalize(const ManifoldExpr& m);

GradedGroup atom_homology(const Atom& atom);
GradedGroup homology(const ManifoldExpr& m);
IntPolynomial poincare_poly(const ManifoldExpr& m);

bool atom_w2_nonzero(const Atom& atom);
/// True iff some summand has w2 != 0. Suspension summands defer to
/// suspension_w2 and therefore throw for inner dimension below 4.
bool w2_nonzero(const ManifoldExpr& m);

Integer euler_characteristic(const ManifoldExpr& m);
bool atom_simply_connected(const Atom& atom);
bool is_simply_connected(const ManifoldExpr& m);

/// Member of the semigroup generated by products of two spheres.
bool in_sphere_product_semigroup(const ManifoldExpr& m);

}  // namespace mfcalc
