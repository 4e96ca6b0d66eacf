#include <gtest/gtest.h>

#include "mfcalc/error.hpp"
#include "mfcalc/json_io.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {
namespace {

TEST(Json, Integer) {
  EXPECT_EQ(to_json(Integer(42)), json(42));
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big), json("123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_THROW(integer_from_json(json("12x")), ParseError);
}

TEST(Json, Group) {
  const FgAbGroup g(2, {3, 3});
  EXPECT_EQ(to_json(g), json::parse(R"({"rank":2,"torsion":[3,3]})"));
  EXPECT_EQ(group_from_json(to_json(g)), g);
}

TEST(Json, Manifold) {
  const ManifoldExpr m = connected_sum(ManifoldExpr(Atom::sphere_product(2, 3)),
                                       ManifoldExpr(Atom::m(3)));
  const json j = to_json(m);
  EXPECT_EQ(j["dim"], 5);
  ASSERT_EQ(j["atoms"].size(), 2u);
  EXPECT_EQ(j["atoms"][0]["kind"], "SxS");
  EXPECT_EQ(j["atoms"][0]["params"], json::array({2, 3}));
  EXPECT_EQ(j["atoms"][1]["kind"], "M");
  EXPECT_EQ(manifold_from_json(j), m);
}

TEST(Json, SuspensionRoundTrip) {
  const ManifoldExpr m = suspend(ManifoldExpr(Atom::projective_space(Field::Quaternion, 2)),
                                 FramingIndex::One);
  const json j = to_json(m);
  EXPECT_EQ(j["atoms"][0]["kind"], "Sig");
  EXPECT_EQ(j["atoms"][0]["params"], json::array({1}));
  EXPECT_EQ(j["atoms"][0]["inner"]["atoms"][0]["kind"], "HP");
  EXPECT_EQ(manifold_from_json(j), m);
}

TEST(Json, Errors) {
  EXPECT_THROW(manifold_from_json(json::parse(R"({"dim":5,"atoms":[{"kind":"Q"}]})")), ParseError);
  EXPECT_THROW(manifold_from_json(json::parse(R"({"dim":5,"atoms":[{"kind":"S","params":[3]}]})")),
               ParseError);
  EXPECT_THROW(manifold_from_json(json::parse(R"({"atoms":[]})")), ParseError);
}

TEST(Json, Presentation) {
  const json j = to_json(surface_pi1(1, FramingIndex::One));
  EXPECT_EQ(j["generators"], json::array({"a1", "b1", "z"}));
  EXPECT_EQ(j["relators"][2], "z*a1*b1*a1^-1*b1^-1");
}

}  // namespace
}  // namespace mfcalc
