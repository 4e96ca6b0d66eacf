#include "mfcalc/manifold.hpp"

#include <algorithm>
#include <stdexcept>

#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {

FramingIndex framing_index(int i) {
  if (i != 0 && i != 1) {
    throw DomainError("framing index must be 0 or 1, got " + std::to_string(i));
  }
  return static_cast<FramingIndex>(i);
}

// ---------------------------------------------------------------- Atom

Atom::Atom(AtomKind kind, std::vector<int> params, int dim)
    : kind_(kind), params_(std::move(params)), dim_(dim) {}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

}  // namespace

Atom Atom::sphere(int n) {
  require(n >= 1, "sphere dimension must be at least 1");
  return Atom(AtomKind::Sphere, {n}, n);
}

Atom Atom::sphere_product(int p, int q) {
  require(p >= 1 && q >= 1, "sphere product factors must have dimension >= 1");
  if (p > q) std::swap(p, q);
  if (p == 1 && q == 1) return surface(1);
  return Atom(AtomKind::SphereProduct, {p, q}, p + q);
}

Atom Atom::twisted_product(int q) {
  require(q >= 2, "twisted product S^2 ~x S^q needs q >= 2");
  return Atom(AtomKind::TwistedProduct, {q}, q + 2);
}

Atom Atom::projective_space(Field field, int n) {
  require(n >= 1, "projective space needs n >= 1");
  if (field == Field::Complex) {
    if (n == 1) return sphere(2);
    return Atom(AtomKind::ProjectiveSpace, {0, n}, 2 * n);
  }
  if (n == 1) return sphere(4);
  return Atom(AtomKind::ProjectiveSpace, {1, n}, 4 * n);
}

Atom Atom::wu() { return Atom(AtomKind::WuManifold, {}, 5); }

Atom Atom::m(int k) {
  require(k >= 2, "M(k) needs k >= 2");
  return Atom(AtomKind::M, {k}, 5);
}

Atom Atom::x(int i) {
  require(i >= 1 && i <= 62, "X(i) needs 1 <= i <= 62");
  return Atom(AtomKind::X, {i}, 5);
}

Atom Atom::surface(int genus) {
  require(genus >= 0, "surface genus must be non-negative");
  if (genus == 0) return sphere(2);
  return Atom(AtomKind::Surface, {genus}, 2);
}

Atom Atom::suspension(FramingIndex index, const ManifoldExpr& inner) {
  require(inner.dim() >= 2, "dimension too small");
  Atom a(AtomKind::Suspension, {to_int(index)}, inner.dim() + 1);
  a.inner_ = std::make_shared<const ManifoldExpr>(inner);
  return a;
}

FramingIndex Atom::suspension_index() const {
  if (kind_ != AtomKind::Suspension) throw std::logic_error("not a suspension atom");
  return static_cast<FramingIndex>(params_[0]);
}

const ManifoldExpr& Atom::suspension_inner() const {
  if (kind_ != AtomKind::Suspension) throw std::logic_error("not a suspension atom");
  return *inner_;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.params_ <=> b.params_; c != 0) return c;
  if (a.kind_ == AtomKind::Suspension) return *a.inner_ <=> *b.inner_;
  return std::strong_ordering::equal;
}

std::string Atom::to_string() const {
  auto arg = [this](std::size_t i) { return std::to_string(params_[i]); };
  switch (kind_) {
    case AtomKind::Sphere:
      return "S(" + arg(0) + ")";
    case AtomKind::SphereProduct:
      return "SxS(" + arg(0) + "," + arg(1) + ")";
    case AtomKind::TwistedProduct:
      return "TwS(" + arg(0) + ")";
    case AtomKind::ProjectiveSpace:
      return (params_[0] == 0 ? "CP(" : "HP(") + arg(1) + ")";
    case AtomKind::WuManifold:
      return "W";
    case AtomKind::M:
      return "M(" + arg(0) + ")";
    case AtomKind::X:
      return "X(" + arg(0) + ")";
    case AtomKind::Surface:
      return "Surf(" + arg(0) + ")";
    case AtomKind::Suspension:
      return "Sig" + arg(0) + "(" + inner_->to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------- ManifoldExpr

ManifoldExpr::ManifoldExpr(int dim, std::vector<Term> terms, bool already_canonical)
    : dim_(dim), terms_(std::move(terms)) {
  if (already_canonical) return;
  require(dim_ >= 1, "manifold dimension must be at least 1");
  for (const auto& [atom, count] : terms_) {
    if (atom.dim() != dim_) {
      throw DomainError("dimension mismatch " + std::to_string(dim_) + " vs " +
                        std::to_string(atom.dim()));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.first.is_sphere() || t.second == 0; });
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  terms_ = std::move(merged);
}

ManifoldExpr::ManifoldExpr(int dim, std::vector<Term> terms)
    : ManifoldExpr(dim, std::move(terms), false) {}

ManifoldExpr::ManifoldExpr(const Atom& atom)
    : ManifoldExpr(atom.dim(), {Term{atom, 1}}, false) {}

ManifoldExpr ManifoldExpr::sphere(int n) { return ManifoldExpr(n, {}, false); }

ManifoldExpr ManifoldExpr::from_atoms(int dim, const std::vector<Atom>& atoms) {
  std::vector<Term> terms;
  terms.reserve(atoms.size());
  for (const auto& a : atoms) terms.emplace_back(a, 1);
  return ManifoldExpr(dim, std::move(terms), false);
}

std::uint64_t ManifoldExpr::summand_count() const {
  std::uint64_t n = 0;
  for (const auto& t : terms_) n += t.second;
  return n;
}

bool ManifoldExpr::is_single_atom() const {
  return terms_.size() == 1 && terms_[0].second == 1;
}

const Atom& ManifoldExpr::single_atom() const {
  if (!is_single_atom()) throw std::logic_error("expression is not a single atom");
  return terms_[0].first;
}

std::strong_ordering operator<=>(const ManifoldExpr& a, const ManifoldExpr& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const ManifoldExpr::Term& x, const ManifoldExpr::Term& y) {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

std::string ManifoldExpr::to_string() const {
  if (terms_.empty()) return "S(" + std::to_string(dim_) + ")";
  std::string out;
  for (const auto& [atom, count] : terms_) {
    if (!out.empty()) out += " # ";
    if (count > 1) out += std::to_string(count) + "*";
    out += atom.to_string();
  }
  return out;
}

int dim(const ManifoldExpr& m) { return m.dim(); }

ManifoldExpr connected_sum(const ManifoldExpr& a, const ManifoldExpr& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("dimension mismatch " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
  std::vector<ManifoldExpr::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return ManifoldExpr(a.dim(), std::move(terms));
}

ManifoldExpr connected_sum_power(const ManifoldExpr& m, std::uint64_t copies) {
  std::vector<ManifoldExpr::Term> terms = m.terms();
  for (auto& t : terms) t.second *= copies;
  return ManifoldExpr(m.dim(), std::move(terms));
}

ManifoldExpr canonicalize(const ManifoldExpr& m) {
  return ManifoldExpr(m.dim(), m.terms());
}

// ------------------------------------------------------------ Invariants

namespace {

FgAbGroup z() { return FgAbGroup::free(1); }

FgAbGroup paired_torsion(const Integer& order) {
  return FgAbGroup(0, {order, order});
}

GradedGroup smale_barden_homology(FgAbGroup h2) {
  GradedGroup h;
  h.set(0, z());
  h.set(2, std::move(h2));
  h.set(5, z());
  return h;
}

}  // namespace

GradedGroup atom_homology(const Atom& atom) {
  const auto& p = atom.params();
  GradedGroup h;
  switch (atom.kind()) {
    case AtomKind::Sphere:
      return GradedGroup::sphere(p[0]);
    case AtomKind::SphereProduct:
    case AtomKind::TwistedProduct: {
      const int a = atom.kind() == AtomKind::SphereProduct ? p[0] : 2;
      const int b = atom.kind() == AtomKind::SphereProduct ? p[1] : p[0];
      h.set(0, z());
      h.set(a, z());
      h.set(b, direct_sum(h.at(b), z()));
      h.set(a + b, z());
      return h;
    }
    case AtomKind::ProjectiveSpace: {
      const int step = p[0] == 0 ? 2 : 4;
      for (int i = 0; i <= p[1]; ++i) h.set(step * i, z());
      return h;
    }
    case AtomKind::WuManifold:
      return smale_barden_homology(FgAbGroup::cyclic(2));
    case AtomKind::M:
      return smale_barden_homology(paired_torsion(p[0]));
    case AtomKind::X: {
      Integer order;
      mpz_ui_pow_ui(order.get_mpz_t(), 2, static_cast<unsigned long>(p[0]));
      return smale_barden_homology(paired_torsion(order));
    }
    case AtomKind::Surface:
      h.set(0, z());
      h.set(1, FgAbGroup::free(2 * static_cast<std::uint64_t>(p[0])));
      h.set(2, z());
      return h;
    case AtomKind::Suspension:
      return suspension_homology(atom.suspension_inner(), atom.suspension_index());
  }
  return h;
}

GradedGroup homology(const ManifoldExpr& m) {
  const int n = m.dim();
  GradedGroup h = GradedGroup::sphere(n);
  for (const auto& [atom, count] : m.terms()) {
    const GradedGroup ah = atom_homology(atom);
    for (const auto& [degree, group] : ah.groups()) {
      if (degree <= 0 || degree >= n) continue;
      h.set(degree, direct_sum(h.at(degree), repeat(group, count)));
    }
  }
  return h;
}

IntPolynomial poincare_poly(const ManifoldExpr& m) {
  return poincare_polynomial(homology(m));
}

bool atom_w2_nonzero(const Atom& atom) {
  switch (atom.kind()) {
    case AtomKind::Sphere:
    case AtomKind::SphereProduct:
    case AtomKind::M:
    case AtomKind::Surface:
      return false;
    case AtomKind::TwistedProduct:
    case AtomKind::WuManifold:
    case AtomKind::X:
      return true;
    case AtomKind::ProjectiveSpace:
      // w2(CP^n) = (n+1) x mod 2; HP^n is spin.
      return atom.params()[0] == 0 && atom.params()[1] % 2 == 0;
    case AtomKind::Suspension:
      return suspension_w2(atom.suspension_inner());
  }
  return false;
}

bool w2_nonzero(const ManifoldExpr& m) {
  bool nonzero = false;
  for (const auto& term : m.terms()) {
    // Evaluate every summand so that undetermined ones always surface.
    if (atom_w2_nonzero(term.first)) nonzero = true;
  }
  return nonzero;
}

Integer euler_characteristic(const ManifoldExpr& m) {
  const int n = m.dim();
  const Integer sphere_chi = n % 2 == 0 ? 2 : 0;
  if (m.is_sphere()) return sphere_chi;
  Integer chi = 0;
  for (const auto& [atom, count] : m.terms()) {
    Integer atom_chi = poincare_polynomial(atom_homology(atom)).alternating_sum();
    chi += atom_chi * Integer(std::to_string(count));
  }
  chi -= Integer(std::to_string(m.summand_count() - 1)) * sphere_chi;
  return chi;
}

bool atom_simply_connected(const Atom& atom) {
  switch (atom.kind()) {
    case AtomKind::Sphere:
      return atom.dim() >= 2;
    case AtomKind::SphereProduct:
      return atom.params()[0] >= 2;
    case AtomKind::Surface:
      return false;
    case AtomKind::Suspension:
      return is_simply_connected(atom.suspension_inner());
    default:
      return true;
  }
}

bool is_simply_connected(const ManifoldExpr& m) {
  if (m.dim() < 2) return false;
  return std::all_of(m.terms().begin(), m.terms().end(),
                     [](const auto& t) { return atom_simply_connected(t.first); });
}

bool in_sphere_product_semigroup(const ManifoldExpr& m) {
  return std::all_of(m.terms().begin(), m.terms().end(), [](const auto& t) {
    const Atom& a = t.first;
    return a.kind() == AtomKind::SphereProduct ||
           (a.kind() == AtomKind::Surface && a.params()[0] == 1);
  });
}

}  // namespace mfcalc
