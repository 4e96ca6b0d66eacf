#include "mfcalc/suspension.hpp"

#include "mfcalc/error.hpp"

namespace mfcalc {

namespace {

ManifoldExpr symbolic(const ManifoldExpr& n, FramingIndex i) {
  if (is_sigma_stable(n)) i = FramingIndex::Zero;
  return ManifoldExpr(Atom::suspension(i, n));
}

ManifoldExpr suspend_atom(const Atom& atom, FramingIndex i) {
  const auto& p = atom.params();
  if (atom.kind() == AtomKind::SphereProduct && (i == FramingIndex::Zero || p[1] >= 3)) {
    return connected_sum(ManifoldExpr(Atom::sphere_product(p[0], p[1] + 1)),
                         ManifoldExpr(Atom::sphere_product(p[0] + 1, p[1])));
  }
  if (atom.kind() == AtomKind::Surface && i == FramingIndex::Zero) {
    return connected_sum_power(ManifoldExpr(Atom::sphere_product(1, 2)),
                               2 * static_cast<std::uint64_t>(p[0]));
  }
  return symbolic(ManifoldExpr(atom), i);
}

}  // namespace

bool is_sigma_stable(const ManifoldExpr& n) {
  if (n.is_sphere()) return true;
  if (!n.is_single_atom()) return false;
  const Atom& a = n.single_atom();
  return a.kind() == AtomKind::SphereProduct && a.params()[1] >= 3;
}

ManifoldExpr suspend(const ManifoldExpr& n, FramingIndex i) {
  if (n.dim() < 2) throw DomainError("dimension too small");
  if (n.is_sphere()) return ManifoldExpr::sphere(n.dim() + 1);
  if (n.is_single_atom()) return suspend_atom(n.single_atom(), i);
  if (n.dim() < 4 || !is_simply_connected(n)) return symbolic(n, i);
  ManifoldExpr out = ManifoldExpr::sphere(n.dim() + 1);
  for (const auto& [atom, count] : n.terms()) {
    out = connected_sum(out, connected_sum_power(suspend_atom(atom, i), count));
  }
  return out;
}

GradedGroup suspension_homology(const ManifoldExpr& n, FramingIndex) {
  return suspension_homology(homology(n), n.dim());
}

GradedGroup suspension_homology(const GradedGroup& h, int n) {
  if (n < 2) throw DomainError("dimension too small");
  GradedGroup punctured;
  for (const auto& [degree, group] : h.groups()) {
    if (degree != n) punctured.set(degree, group);
  }
  return graded_sum(shift(reduced(h), 1), punctured);
}

bool suspension_w2(const ManifoldExpr& n) {
  if (n.dim() < 4) throw DomainError("restriction isomorphism unavailable");
  return w2_nonzero(n);
}

bool is_homology_sphere(const ManifoldExpr& n) {
  return is_homology_sphere(homology(n), n.dim());
}

bool is_homology_sphere(const GradedGroup& h, int n) {
  return h == GradedGroup::sphere(n);
}

GroupPresentation surface_pi1(int genus, FramingIndex i) {
  if (genus < 0) throw DomainError("surface genus must be non-negative");
  if (genus == 0) return {};
  const auto g = static_cast<std::size_t>(genus);
  std::vector<std::string> gens;
  for (std::size_t j = 1; j <= g; ++j) {
    gens.push_back("a" + std::to_string(j));
    gens.push_back("b" + std::to_string(j));
  }
  if (i == FramingIndex::Zero) return GroupPresentation(std::move(gens), {});
  gens.push_back("z");
  const std::size_t zi = 2 * g;
  auto commutator = [](std::size_t x, std::size_t y) {
    return Word{{x, 1}, {y, 1}, {x, -1}, {y, -1}};
  };
  std::vector<Word> relators;
  for (std::size_t gen = 0; gen < 2 * g; ++gen) relators.push_back(commutator(gen, zi));
  Word product{{zi, 1}};
  for (std::size_t j = 0; j < g; ++j) {
    Word c = commutator(2 * j, 2 * j + 1);
    product.insert(product.end(), c.begin(), c.end());
  }
  relators.push_back(std::move(product));
  return GroupPresentation(std::move(gens), std::move(relators));
}

}  // namespace mfcalc
