#include "mfcalc/torus.hpp"

#include <algorithm>
#include <stdexcept>

#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {

std::vector<Integer> b_coefficients(int k) {
  if (k < 1) throw DomainError("k must be at least 1");
  const std::int64_t n = k - 1;
  std::vector<Integer> b;
  for (std::int64_t i = 1; i <= k / 2; ++i) {
    b.push_back(n * binomial(n, i) - binomial(n, i + 1) + n * binomial(n, i - 1) -
                binomial(n, i - 2));
  }
  return b;
}

ManifoldExpr q_manifold(int k) {
  const std::vector<Integer> b = b_coefficients(k);
  const int r = k / 2;
  std::vector<ManifoldExpr::Term> terms;
  for (int i = 1; i <= r; ++i) {
    Integer c = b[static_cast<std::size_t>(i - 1)];
    if (k % 2 == 0 && i == r) {
      if (c % 2 != 0) throw DomainError("middle coefficient is odd");
      c /= 2;
    }
    terms.emplace_back(Atom::sphere_product(i + 2, k - i + 2), to_uint64(c));
  }
  return ManifoldExpr(k + 4, std::move(terms));
}

ManifoldExpr torus_tower(int k) {
  if (k < 1) throw DomainError("k must be at least 1");
  ManifoldExpr current = connected_sum_power(ManifoldExpr(Atom::sphere_product(2, 3)),
                                             static_cast<std::uint64_t>(k - 1));
  for (int step = 1; step < k; ++step) {
    const int n = current.dim();
    const Atom host = Atom::sphere_product(2, n - 2);
    std::vector<ManifoldExpr::Term> rest = current.terms();
    auto it = std::find_if(rest.begin(), rest.end(),
                           [&host](const auto& t) { return t.first == host; });
    if (it == rest.end()) throw std::logic_error("torus tower lost its S^2 x S^(n-2) summand");
    if (--it->second == 0) rest.erase(it);
    current = connected_sum(ManifoldExpr(Atom::sphere_product(3, n - 2)),
                            suspend(ManifoldExpr(n, std::move(rest)), FramingIndex::One));
  }
  return current;
}

ManifoldExpr theorem_d(const TorusBundleSpec& spec) { return q_manifold(spec.k); }

}  // namespace mfcalc
