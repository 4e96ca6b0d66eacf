#include <gtest/gtest.h>

#include "mfcalc/error.hpp"
#include "mfcalc/manifold.hpp"

namespace mfcalc {
namespace {

ManifoldExpr one(const Atom& a) { return ManifoldExpr(a); }
ManifoldExpr sxs(int p, int q) { return one(Atom::sphere_product(p, q)); }

TEST(Atom, Normalization) {
  EXPECT_EQ(Atom::sphere_product(3, 2), Atom::sphere_product(2, 3));
  EXPECT_EQ(Atom::projective_space(Field::Complex, 1), Atom::sphere(2));
  EXPECT_EQ(Atom::projective_space(Field::Quaternion, 1), Atom::sphere(4));
  EXPECT_EQ(Atom::surface(0), Atom::sphere(2));
  EXPECT_EQ(Atom::sphere_product(1, 1), Atom::surface(1));
  EXPECT_THROW(Atom::m(1), DomainError);
  EXPECT_THROW(Atom::twisted_product(1), DomainError);
  EXPECT_THROW(Atom::suspension(FramingIndex::Zero, ManifoldExpr::sphere(1)), DomainError);
}

TEST(Atom, Order) {
  EXPECT_LT(Atom::sphere_product(2, 3), Atom::twisted_product(3));
  EXPECT_LT(Atom::twisted_product(3), Atom::wu());
  EXPECT_LT(Atom::wu(), Atom::m(2));
  EXPECT_LT(Atom::m(9), Atom::x(1));
  EXPECT_LT(Atom::m(2), Atom::m(3));
}

TEST(ConnectedSum, SphereIsNeutral) {
  EXPECT_EQ(connected_sum(sxs(2, 3), ManifoldExpr::sphere(5)), sxs(2, 3));
  EXPECT_EQ(connected_sum(ManifoldExpr::sphere(5), ManifoldExpr::sphere(5)), ManifoldExpr::sphere(5));
}

TEST(ConnectedSum, CommutativeAndSorted) {
  const ManifoldExpr a = connected_sum(sxs(2, 3), one(Atom::m(3)));
  const ManifoldExpr b = connected_sum(one(Atom::m(3)), sxs(2, 3));
  EXPECT_EQ(a, b);
  const ManifoldExpr c =
      connected_sum(connected_sum(one(Atom::wu()), one(Atom::m(3))), sxs(2, 3));
  EXPECT_EQ(c.to_string(), "SxS(2,3) # W # M(3)");
  EXPECT_EQ(connected_sum(sxs(2, 3), sxs(2, 3)).to_string(), "2*SxS(2,3)");
}

TEST(ConnectedSum, DimensionMismatch) {
  EXPECT_THROW(connected_sum(ManifoldExpr::sphere(3), sxs(2, 3)), DomainError);
}

TEST(Homology, Spot) {
  EXPECT_EQ(homology(one(Atom::m(3))).at(2), FgAbGroup(0, {3, 3}));
  EXPECT_TRUE(homology(one(Atom::m(3))).at(3).is_trivial());
  EXPECT_EQ(homology(ManifoldExpr::sphere(5)), GradedGroup::sphere(5));
  const GradedGroup h = homology(connected_sum_power(sxs(2, 3), 2));
  EXPECT_EQ(h.at(2), FgAbGroup::free(2));
  EXPECT_EQ(h.at(3), FgAbGroup::free(2));
  EXPECT_EQ(homology(one(Atom::wu())).at(2), FgAbGroup::cyclic(2));
  EXPECT_EQ(homology(one(Atom::x(2))).at(2), FgAbGroup(0, {4, 4}));
  EXPECT_EQ(homology(one(Atom::surface(2))).at(1), FgAbGroup::free(4));
}

TEST(Poincare, Spot) {
  EXPECT_EQ(poincare_poly(sxs(3, 3)).to_string(), "1+2t^3+t^6");
  EXPECT_EQ(poincare_poly(connected_sum_power(sxs(3, 4), 5)).to_string(), "1+5t^3+5t^4+t^7");
  EXPECT_EQ(poincare_poly(ManifoldExpr::sphere(6)).to_string(), "1+t^6");
  EXPECT_EQ(poincare_poly(connected_sum(sxs(3, 3), sxs(2, 4))).to_string(), "1+t^2+2t^3+t^4+t^6");
  EXPECT_EQ(poincare_poly(one(Atom::m(7))).to_string(), "1+t^5");
}

TEST(Canonicalize, IdempotentAndOrderFree) {
  const ManifoldExpr e = ManifoldExpr::from_atoms(
      5, {Atom::m(3), Atom::sphere(5), Atom::sphere_product(2, 3), Atom::wu(), Atom::m(3)});
  EXPECT_EQ(canonicalize(e), e);
  EXPECT_EQ(canonicalize(canonicalize(e)), canonicalize(e));
  EXPECT_EQ(e.to_string(), "SxS(2,3) # W # 2*M(3)");
  EXPECT_EQ(canonicalize(ManifoldExpr::from_atoms(5, {Atom::sphere(5), Atom::sphere_product(2, 3)})),
            sxs(2, 3));
}

TEST(W2, Table) {
  EXPECT_TRUE(w2_nonzero(one(Atom::twisted_product(3))));
  EXPECT_FALSE(w2_nonzero(connected_sum_power(sxs(2, 3), 4)));
  EXPECT_TRUE(w2_nonzero(one(Atom::projective_space(Field::Complex, 2))));
  EXPECT_FALSE(w2_nonzero(one(Atom::projective_space(Field::Complex, 3))));
  EXPECT_FALSE(w2_nonzero(one(Atom::projective_space(Field::Quaternion, 2))));
  EXPECT_TRUE(w2_nonzero(connected_sum(sxs(2, 3), one(Atom::wu()))));
}

TEST(Euler, Spot) {
  EXPECT_EQ(euler_characteristic(connected_sum(connected_sum_power(sxs(3, 5), 9),
                                               connected_sum_power(sxs(4, 4), 8))),
            0);
  EXPECT_EQ(euler_characteristic(ManifoldExpr::sphere(6)), 2);
  EXPECT_EQ(euler_characteristic(one(Atom::projective_space(Field::Complex, 2))), 3);
  EXPECT_EQ(euler_characteristic(connected_sum_power(one(Atom::projective_space(Field::Complex, 2)), 3)), 5);
  EXPECT_EQ(euler_characteristic(one(Atom::surface(2))), -2);
}

TEST(SimplyConnected, Table) {
  EXPECT_FALSE(is_simply_connected(one(Atom::surface(1))));
  EXPECT_FALSE(is_simply_connected(sxs(1, 4)));
  EXPECT_FALSE(is_simply_connected(ManifoldExpr::sphere(1)));
  EXPECT_TRUE(is_simply_connected(connected_sum(sxs(2, 3), one(Atom::x(1)))));
  EXPECT_TRUE(in_sphere_product_semigroup(connected_sum(sxs(2, 3), sxs(1, 4))));
  EXPECT_FALSE(in_sphere_product_semigroup(one(Atom::wu())));
}

}  // namespace
}  // namespace mfcalc
