#include <algorithm>
#include <map>
#include <optional>

#include "mfcalc/bundle.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {

namespace {

constexpr const char* kUnrealizable = "not realizable as 1-connected 5-manifold data";

// Half of a multiset of prime powers when every entry occurs an even number
// of times.
std::optional<std::vector<Integer>> halve(const std::vector<Integer>& powers) {
  std::map<Integer, std::uint64_t> counts;
  for (const auto& p : powers) ++counts[p];
  std::vector<Integer> half;
  for (const auto& [p, c] : counts) {
    if (c % 2 != 0) return std::nullopt;
    half.insert(half.end(), c / 2, p);
  }
  return half;
}

int small_int(const Integer& v) {
  if (!v.fits_sint_p()) throw DomainError("torsion order too large");
  return static_cast<int>(v.get_si());
}

ManifoldExpr assemble(std::uint64_t free_copies, const std::vector<Integer>& half,
                      std::optional<Atom> extra) {
  std::vector<ManifoldExpr::Term> terms;
  if (free_copies > 0) terms.emplace_back(Atom::sphere_product(2, 3), free_copies);
  const FgAbGroup g(0, half);
  for (const auto& d : g.torsion()) terms.emplace_back(Atom::m(small_int(d)), 1);
  if (extra) terms.emplace_back(*extra, 1);
  return ManifoldExpr(5, std::move(terms));
}

// Exponent i with v = 2^i, or 0 when v is not a power of two.
int two_exponent(const Integer& v) {
  if (v < 2 || mpz_popcount(v.get_mpz_t()) != 1) return 0;
  return static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

}  // namespace

ManifoldExpr smale_barden_decompose(const FgAbGroup& h2, bool w2) {
  const std::uint64_t r = h2.free_rank();
  const std::vector<Integer> powers = primary_decomposition(h2);
  const auto half = halve(powers);

  if (!w2) {
    if (!half) throw DomainError(kUnrealizable);
    return assemble(r, *half, std::nullopt);
  }
  if (!half) {
    // Only W can absorb a single unpaired Z/2.
    std::vector<Integer> rest = powers;
    auto it = std::find(rest.begin(), rest.end(), Integer(2));
    if (it == rest.end()) throw DomainError(kUnrealizable);
    rest.erase(it);
    auto rest_half = halve(rest);
    if (!rest_half) throw DomainError(kUnrealizable);
    return assemble(r, *rest_half, Atom::wu());
  }
  if (r >= 1) return assemble(r - 1, *half, Atom::twisted_product(3));
  // Rank zero: X(i) takes the smallest 2-primary pair.
  for (std::size_t j = 0; j < half->size(); ++j) {
    if (int i = two_exponent((*half)[j]); i > 0) {
      std::vector<Integer> rest = *half;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      return assemble(0, rest, Atom::x(i));
    }
  }
  throw DomainError(kUnrealizable);
}

Classification6 classify_6mfd_detailed(const FgAbGroup& quotient_h2, bool quotient_w2,
                                       bool euler_equals_w2) {
  if (quotient_h2.free_rank() == 0) {
    throw DomainError("no primitive Euler class: H_2 of the quotient has no free summand");
  }
  if (euler_equals_w2 && !quotient_w2) {
    throw DomainError("a primitive Euler class cannot reduce to w2 = 0");
  }
  smale_barden_decompose(quotient_h2, quotient_w2);
  const FgAbGroup rest(quotient_h2.free_rank() - 1, quotient_h2.torsion());

  Classification6 c;
  if (!euler_equals_w2) {
    c.split_summand = ManifoldExpr(Atom::sphere_product(2, 3));
    c.complement = smale_barden_decompose(rest, quotient_w2);
    c.index = FramingIndex::One;
  } else {
    c.split_summand = ManifoldExpr(Atom::twisted_product(3));
    c.complement = smale_barden_decompose(rest, false);
    c.index = FramingIndex::Zero;
  }
  c.quotient = connected_sum(c.split_summand, c.complement);
  c.total = connected_sum(ManifoldExpr(Atom::sphere_product(3, 3)), suspend(c.complement, c.index));
  return c;
}

ManifoldExpr classify_6mfd(const FgAbGroup& quotient_h2, bool quotient_w2,
                           bool euler_equals_w2) {
  return classify_6mfd_detailed(quotient_h2, quotient_w2, euler_equals_w2).total;
}

bool in_six_manifold_grammar(const ManifoldExpr& m) {
  if (m.dim() != 6) return false;
  for (const auto& [atom, count] : m.terms()) {
    if (atom.kind() == AtomKind::SphereProduct) {
      const auto& p = atom.params();
      if (!((p[0] == 3 && p[1] == 3) || (p[0] == 2 && p[1] == 4))) return false;
      continue;
    }
    if (atom.kind() != AtomKind::Suspension) return false;
    const ManifoldExpr& inner = atom.suspension_inner();
    if (!inner.is_single_atom()) return false;
    const Atom& a = inner.single_atom();
    const bool allowed = a.kind() == AtomKind::M || a.kind() == AtomKind::WuManifold ||
                         a.kind() == AtomKind::X ||
                         (a.kind() == AtomKind::TwistedProduct && a.params()[0] == 3);
    if (!allowed) return false;
  }
  return true;
}

}  // namespace mfcalc
