// Randomized invariants with hand-rolled generators over a fixed seed.
#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "dsl.hpp"
#include "mfcalc/bundle.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/json_io.hpp"
#include "mfcalc/smith.hpp"
#include "mfcalc/sparse_matrix.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {
namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  IntMatrix matrix(int max_dim, int bound) {
    IntMatrix a(static_cast<std::size_t>(uniform(0, max_dim)), static_cast<std::size_t>(uniform(0, max_dim)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (uniform(0, 2) == 0) a(i, j) = uniform(-bound, bound);
      }
    }
    return a;
  }

  FgAbGroup group() {
    std::vector<Integer> orders;
    for (int j = uniform(0, 4); j > 0; --j) orders.emplace_back(uniform(2, 30));
    return FgAbGroup(static_cast<std::uint64_t>(uniform(0, 3)), orders);
  }

  // Any atom of dimension n, simply connected or not.
  Atom atom(int n) {
    std::vector<Atom> pool;
    for (int p = 1; 2 * p <= n; ++p) pool.push_back(Atom::sphere_product(p, n - p));
    if (n >= 4) pool.push_back(Atom::twisted_product(n - 2));
    if (n % 2 == 0 && n >= 4) pool.push_back(Atom::projective_space(Field::Complex, n / 2));
    if (n % 4 == 0 && n >= 8) pool.push_back(Atom::projective_space(Field::Quaternion, n / 4));
    if (n == 2) pool.push_back(Atom::surface(uniform(1, 4)));
    if (n == 5) {
      pool.push_back(Atom::wu());
      pool.push_back(Atom::m(uniform(2, 12)));
      pool.push_back(Atom::x(uniform(1, 4)));
    }
    return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
  }

  // Canonical summand: an atom, or a suspension evaluated through suspend().
  ManifoldExpr summand(int n) {
    if (n >= 3 && uniform(0, 3) == 0) return suspend(expr(n - 1, 2), framing_index(uniform(0, 1)));
    return ManifoldExpr(atom(n));
  }

  ManifoldExpr expr(int n, int max_atoms) {
    ManifoldExpr out = ManifoldExpr::sphere(n);
    for (int j = uniform(0, max_atoms); j > 0; --j) out = connected_sum(out, summand(n));
    return out;
  }

  ManifoldExpr simply_connected_expr(int n, int max_atoms) {
    for (;;) {
      ManifoldExpr e = expr(n, max_atoms);
      if (is_simply_connected(e)) return e;
    }
  }

 private:
  std::mt19937_64 rng_;
};

constexpr int kCases = 300;

TEST(Property, SmithReconstruction) {
  Gen g(1);
  for (int t = 0; t < kCases; ++t) {
    const IntMatrix a = g.matrix(8, 20);
    const SmithForm s = smith_normal_form(a);
    ASSERT_EQ(s.u * a * s.v, s.d) << a.to_string();
    ASSERT_TRUE(s.d.is_diagonal());
    ASSERT_TRUE(is_unimodular(s.u) && is_unimodular(s.v));
    ASSERT_EQ(elementary_divisors(a).size(), rank(a));
  }
}

TEST(Property, SparseMatchesDense) {
  Gen g(2);
  for (int t = 0; t < kCases; ++t) {
    const IntMatrix a = g.matrix(10, 3);
    SparseIntMatrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) s.add(i, j, a(i, j));
    }
    ASSERT_EQ(sparse_elementary_divisors(s), elementary_divisors(a)) << a.to_string();
  }
}

TEST(Property, GroupTextRoundTrip) {
  Gen g(3);
  for (int t = 0; t < kCases; ++t) {
    const FgAbGroup a = g.group();
    ASSERT_EQ(parse_group(a.to_string()), a);
    ASSERT_EQ(group_from_json(to_json(a)), a);
    const FgAbGroup b = g.group();
    ASSERT_EQ(direct_sum(a, b), direct_sum(b, a));
  }
}

TEST(Property, CanonicalFormIsOrderFree) {
  Gen g(4);
  std::mt19937 shuffle_rng(4);
  for (int t = 0; t < kCases; ++t) {
    const int n = g.uniform(2, 8);
    std::vector<Atom> atoms;
    for (int j = g.uniform(0, 6); j > 0; --j) {
      const ManifoldExpr e = g.summand(n);
      for (const auto& [atom, count] : e.terms()) atoms.insert(atoms.end(), count, atom);
    }
    const ManifoldExpr a = ManifoldExpr::from_atoms(n, atoms);
    std::shuffle(atoms.begin(), atoms.end(), shuffle_rng);
    ASSERT_EQ(ManifoldExpr::from_atoms(n, atoms), a);
    ASSERT_EQ(canonicalize(canonicalize(a)), canonicalize(a));
  }
}

TEST(Property, ConnectedSumInvariants) {
  Gen g(5);
  for (int t = 0; t < kCases; ++t) {
    const int n = g.uniform(2, 8);
    const ManifoldExpr a = g.expr(n, 3);
    const ManifoldExpr b = g.expr(n, 3);
    const ManifoldExpr s = connected_sum(a, b);
    ASSERT_EQ(poincare_poly(s) + poincare_poly(ManifoldExpr::sphere(n)),
              poincare_poly(a) + poincare_poly(b));
    ASSERT_EQ(euler_characteristic(s), poincare_poly(s).alternating_sum());
    ASSERT_EQ(is_simply_connected(s), is_simply_connected(a) && is_simply_connected(b));
    ASSERT_TRUE(poincare_poly(s).is_palindromic()) << s.to_string();
  }
}

TEST(Property, SuspensionPreservesHomologyFormula) {
  Gen g(6);
  for (int t = 0; t < kCases; ++t) {
    const int n = g.uniform(2, 7);
    const ManifoldExpr m = g.expr(n, 3);
    const FramingIndex i = framing_index(g.uniform(0, 1));
    const ManifoldExpr s = suspend(m, i);
    ASSERT_EQ(s.dim(), n + 1);
    ASSERT_EQ(homology(s), suspension_homology(m, i)) << m.to_string();
    ASSERT_EQ(is_simply_connected(s), is_simply_connected(m)) << m.to_string();
    if (n >= 4) {
      std::optional<bool> w2m;
      try {
        w2m = w2_nonzero(m);
      } catch (const DomainError&) {
        // Undetermined for suspensions of 3-manifolds.
      }
      if (w2m) ASSERT_EQ(w2_nonzero(s), *w2m) << m.to_string();
    }
  }
}

TEST(Property, HomologySpherePreserved) {
  Gen g(7);
  for (int t = 0; t < kCases; ++t) {
    const int n = g.uniform(2, 12);
    GradedGroup h = GradedGroup::sphere(n);
    if (g.coin()) h.set(g.uniform(1, n - 1), g.group());
    const GradedGroup s = suspension_homology(h, n);
    ASSERT_EQ(is_homology_sphere(s, n + 1), is_homology_sphere(h, n));
  }
}

TEST(Property, DslAndJsonRoundTrip) {
  Gen g(8);
  for (int t = 0; t < kCases; ++t) {
    const ManifoldExpr m = g.expr(g.uniform(2, 8), 4);
    ASSERT_EQ(cli::parse_expr(m.to_string()), m) << m.to_string();
    ASSERT_EQ(manifold_from_json(to_json(m)), m) << m.to_string();
  }
}

TEST(Property, SmaleBardenReproducesInput) {
  Gen g(9);
  for (int t = 0; t < kCases; ++t) {
    std::vector<Integer> torsion;
    for (int j = g.uniform(0, 3); j > 0; --j) torsion.insert(torsion.end(), 2, Integer(g.uniform(2, 24)));
    const bool w2 = g.coin();
    std::uint64_t rank = static_cast<std::uint64_t>(g.uniform(0, 3));
    if (w2) {
      switch (g.uniform(0, 2)) {
        case 0: ++rank; break;
        case 1: torsion.emplace_back(2); break;
        default: torsion.insert(torsion.end(), 2, Integer(1) << g.uniform(1, 4));
      }
    }
    const FgAbGroup h2(rank, torsion);
    const ManifoldExpr n = smale_barden_decompose(h2, w2);
    ASSERT_EQ(homology(n).at(2), h2) << n.to_string();
    ASSERT_EQ(w2_nonzero(n), w2) << n.to_string();
    ASSERT_TRUE(is_simply_connected(n));
  }
}

TEST(Property, PullbackEulerCharacteristic) {
  Gen g(10);
  for (int t = 0; t < kCases; ++t) {
    // Dimension-6 total spaces over 5-dimensional bases.
    const ManifoldExpr e = g.simply_connected_expr(6, 3);
    if (euler_characteristic(e) != 0) continue;
    const ManifoldExpr b = g.expr(5, 2);
    const ManifoldExpr n = g.expr(5, 2);
    ASSERT_EQ(euler_characteristic(pullback_total(e, b, n)), 0) << e.to_string();
  }
}

TEST(Property, TunnelSumDoubleFlip) {
  Gen g(11);
  for (int t = 0; t < kCases; ++t) {
    const int n = g.uniform(5, 8);
    const ManifoldExpr m = g.simply_connected_expr(n, 3);
    const ManifoldExpr nn = g.expr(n - 1, 3);
    const FramingBit e = framing_bit(g.uniform(0, 1));
    const FramingBit d = framing_bit(g.uniform(0, 1));
    const bool w2m = w2_nonzero(m);
    ASSERT_EQ(tunnel_sum(m, e, nn, d), tunnel_sum(m, flip(e, w2m), nn, flip(d, w2m)));
  }
}

}  // namespace
}  // namespace mfcalc
