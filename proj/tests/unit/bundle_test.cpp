#include <gtest/gtest.h>

#include "mfcalc/bundle.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {
namespace {

ManifoldExpr one(const Atom& a) { return ManifoldExpr(a); }
ManifoldExpr sxs(int p, int q) { return one(Atom::sphere_product(p, q)); }
ManifoldExpr tws(int q) { return one(Atom::twisted_product(q)); }
ManifoldExpr sig(int i, const ManifoldExpr& n) { return one(Atom::suspension(framing_index(i), n)); }

TEST(Framing, EpsilonOfBase) {
  EXPECT_EQ(epsilon_of_base(tws(4)), FramingBit::Zero);
  EXPECT_EQ(epsilon_of_base(sxs(2, 4)), FramingBit::One);
  EXPECT_EQ(epsilon_of_base(one(Atom::projective_space(Field::Complex, 2))), FramingBit::Zero);
}

TEST(Framing, FlipTruthTable) {
  EXPECT_EQ(flip(FramingBit::One, false), FramingBit::Zero);
  EXPECT_EQ(flip(FramingBit::One, true), FramingBit::Zero);
  EXPECT_EQ(flip(FramingBit::Zero, false), FramingBit::One);
  EXPECT_EQ(flip(FramingBit::Zero, true), FramingBit::Zero);
  EXPECT_THROW(framing_bit(2), DomainError);
}

TEST(TunnelSum, Examples) {
  const auto z = FramingBit::Zero;
  const auto o = FramingBit::One;
  EXPECT_EQ(tunnel_sum(sxs(3, 3), z, sxs(2, 3), z).to_string(), "SxS(2,4) # 2*SxS(3,3)");
  EXPECT_EQ(tunnel_sum(sxs(3, 3), o, sxs(2, 3), o), tunnel_sum(sxs(3, 3), z, sxs(2, 3), z));
  const ManifoldExpr m3 = one(Atom::m(3));
  EXPECT_EQ(tunnel_sum(tws(4), z, m3, o), tunnel_sum(tws(4), z, m3, z));
  EXPECT_EQ(tunnel_sum(sxs(3, 3), z, m3, o), connected_sum(sxs(3, 3), sig(1, m3)));
  for (auto e : {z, o}) {
    for (auto d : {z, o}) {
      EXPECT_EQ(tunnel_sum(ManifoldExpr::sphere(6), e, ManifoldExpr::sphere(5), d), ManifoldExpr::sphere(6));
    }
  }
}

TEST(TunnelSum, Hypotheses) {
  const auto z = FramingBit::Zero;
  EXPECT_THROW(tunnel_sum(sxs(2, 2), z, sxs(1, 2), z), DomainError);
  EXPECT_THROW(tunnel_sum(sxs(1, 5), z, sxs(2, 3), z), DomainError);
  EXPECT_THROW(tunnel_sum(sxs(3, 3), z, sxs(2, 2), z), DomainError);
  try {
    tunnel_sum(sxs(3, 3), z, sxs(2, 2), z);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("tunnel sum hypothesis violated"), std::string::npos);
  }
}

TEST(Pullback, Branches) {
  for (int k = 2; k <= 4; ++k) {
    const ManifoldExpr mk = one(Atom::m(k));
    EXPECT_EQ(pullback_total(sxs(3, 3), tws(3), mk), connected_sum(sxs(3, 3), sig(0, mk)));
    EXPECT_EQ(pullback_total(sxs(3, 3), sxs(2, 3), mk), connected_sum(sxs(3, 3), sig(1, mk)));
  }
  EXPECT_EQ(pullback_total(sxs(3, 4), sxs(2, 4), ManifoldExpr::sphere(6)), sxs(3, 4));
  EXPECT_EQ(pullback_total(ManifoldExpr::sphere(7), one(Atom::projective_space(Field::Complex, 3)),
                           connected_sum_power(sxs(3, 3), 2)),
            connected_sum_power(sxs(3, 4), 4));
  // N = M(k) has dimension 5, not dim B = 6.
  EXPECT_THROW(pullback_total(sxs(3, 4), tws(4), one(Atom::m(3))), DomainError);
}

TEST(SmaleBarden, Decompose) {
  EXPECT_EQ(smale_barden_decompose(FgAbGroup::free(2), false), connected_sum_power(sxs(2, 3), 2));
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(0, {3, 3}), false), one(Atom::m(3)));
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(1, {2}), true).to_string(), "SxS(2,3) # W");
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(1, {}), true), tws(3));
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(0, {4, 4}), true), one(Atom::x(2)));
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(0, {2, 2, 4, 4}), true).to_string(), "M(4) # X(1)");
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(0, {12, 12}), false), one(Atom::m(12)));
  EXPECT_EQ(smale_barden_decompose(FgAbGroup(0, {}), false), ManifoldExpr::sphere(5));
  EXPECT_THROW(smale_barden_decompose(FgAbGroup(0, {3}), false), DomainError);
  EXPECT_THROW(smale_barden_decompose(FgAbGroup(0, {3, 3}), true), DomainError);
  EXPECT_THROW(smale_barden_decompose(FgAbGroup(1, {2}), false), DomainError);
}

TEST(Classify6, Examples) {
  EXPECT_EQ(classify_6mfd(FgAbGroup::free(1), false, false), sxs(3, 3));
  EXPECT_EQ(classify_6mfd(FgAbGroup::free(2), false, false).to_string(), "SxS(2,4) # 2*SxS(3,3)");
  EXPECT_EQ(classify_6mfd(FgAbGroup(1, {3, 3}), false, false), connected_sum(sxs(3, 3), sig(1, one(Atom::m(3)))));
  EXPECT_EQ(classify_6mfd(FgAbGroup::free(1), true, true), sxs(3, 3));
  const Classification6 c = classify_6mfd_detailed(FgAbGroup(1, {2}), true, false);
  EXPECT_EQ(c.quotient.to_string(), "SxS(2,3) # W");
  EXPECT_EQ(c.total.to_string(), "SxS(3,3) # Sig1(W)");
  EXPECT_TRUE(in_six_manifold_grammar(c.total));
}

TEST(Classify6, Errors) {
  EXPECT_THROW(classify_6mfd(FgAbGroup(0, {3, 3}), false, false), DomainError);
  EXPECT_THROW(classify_6mfd(FgAbGroup::free(1), false, true), DomainError);
  EXPECT_THROW(classify_6mfd(FgAbGroup::free(1), true, false), DomainError);
  EXPECT_THROW(classify_6mfd(FgAbGroup(1, {5}), false, false), DomainError);
}

TEST(Classify6, Grammar) {
  EXPECT_TRUE(in_six_manifold_grammar(connected_sum(sxs(3, 3), sxs(2, 4))));
  EXPECT_FALSE(in_six_manifold_grammar(sxs(1, 5)));
  EXPECT_FALSE(in_six_manifold_grammar(sxs(2, 3)));
  EXPECT_FALSE(in_six_manifold_grammar(connected_sum(sxs(3, 3), suspend(sxs(1, 4), FramingIndex::One))));
  EXPECT_FALSE(in_six_manifold_grammar(sig(0, connected_sum(sxs(1, 4), one(Atom::m(3))))));
  EXPECT_TRUE(in_six_manifold_grammar(connected_sum(sig(0, one(Atom::m(3))), sig(1, one(Atom::x(1))))));
}

}  // namespace
}  // namespace mfcalc
