#include <gtest/gtest.h>

#include "mfcalc/abelian_group.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/graded_group.hpp"
#include "mfcalc/int_matrix.hpp"
#include "mfcalc/polynomial.hpp"
#include "mfcalc/smith.hpp"
#include "mfcalc/sparse_matrix.hpp"
#include "mfcalc/spectral.hpp"

namespace mfcalc {
namespace {

TEST(FgAbGroup, CanonicalChain) {
  const FgAbGroup g(1, {6, 4, 1, 0});
  EXPECT_EQ(g.free_rank(), 2u);
  EXPECT_EQ(g.torsion(), (std::vector<Integer>{2, 12}));
  EXPECT_EQ(g.to_string(), "Z^2 + Z/2 + Z/12");
  EXPECT_EQ(FgAbGroup::free(1).to_string(), "Z");
  EXPECT_EQ(FgAbGroup().to_string(), "0");
}

TEST(FgAbGroup, DirectSum) {
  EXPECT_EQ(direct_sum(FgAbGroup::free(1), FgAbGroup::cyclic(2)), FgAbGroup(1, {2}));
  EXPECT_EQ(direct_sum(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3)), FgAbGroup::cyclic(6));
  EXPECT_EQ(repeat(FgAbGroup::cyclic(3), 2), FgAbGroup(0, {3, 3}));
}

TEST(FgAbGroup, ParseRoundTrip) {
  for (const char* text : {"0", "Z", "Z^3", "Z/2", "Z^2 + Z/3 + Z/3", "Z/2 + Z/12"}) {
    EXPECT_EQ(parse_group(text).to_string(), text);
  }
  EXPECT_EQ(parse_group("Z/3 + Z + Z/3"), FgAbGroup(1, {3, 3}));
  EXPECT_EQ(parse_group("Z^1"), parse_group("Z"));
  EXPECT_THROW(parse_group("Z/"), ParseError);
  EXPECT_THROW(parse_group("Q"), ParseError);
}

TEST(FgAbGroup, PrimaryDecomposition) {
  EXPECT_EQ(primary_decomposition(FgAbGroup(0, {12, 2})), (std::vector<Integer>{2, 3, 4}));
  EXPECT_TRUE(primary_decomposition(FgAbGroup::free(3)).empty());
}

TEST(Smith, TwoByTwo) {
  const IntMatrix a{{2, 4}, {6, 8}};
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.d, IntMatrix::diagonal(2, 2, {2, 4}));
  EXPECT_EQ(s.u * a * s.v, s.d);
  EXPECT_TRUE(is_unimodular(s.u));
  EXPECT_TRUE(is_unimodular(s.v));
}

TEST(Smith, Trivial) {
  EXPECT_TRUE(elementary_divisors(IntMatrix(0, 0)).empty());
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).d, IntMatrix::identity(3));
}

TEST(Smith, Cokernel) {
  EXPECT_EQ(cokernel(IntMatrix::diagonal(3, 3, {1, 2, 0})), FgAbGroup(1, {2}));
  EXPECT_EQ(cokernel(IntMatrix(2, 2)), FgAbGroup::free(2));
  EXPECT_TRUE(cokernel(IntMatrix::identity(4)).is_trivial());
}

TEST(Matrix, RankAndKernel) {
  EXPECT_EQ(kernel_rank(IntMatrix(3, 5)), 5u);
  EXPECT_EQ(kernel_rank(IntMatrix::identity(4)), 0u);
  EXPECT_EQ(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
}

TEST(Sparse, MatchesDense) {
  SparseIntMatrix s(3, 4);
  s.add(0, 0, 2);
  s.add(0, 1, 4);
  s.add(1, 0, 6);
  s.add(1, 1, 8);
  s.add(2, 3, 1);
  s.add(2, 3, -1);
  EXPECT_EQ(s.nonzeros(), 4u);
  EXPECT_EQ(sparse_elementary_divisors(s), elementary_divisors(s.to_dense()));
}

TEST(Spectral, KernelOfB3ForKThree) {
  const auto basis = spectral_basis(3);
  for (const auto& [degree, expected] : {std::pair{3, 2u}, std::pair{4, 3u}}) {
    const SparseIntMatrix d = d2_matrix(3, degree, basis);
    std::vector<std::size_t> b3;
    for (std::size_t c = 0; c < basis[degree].size(); ++c) {
      if (basis[degree][c].block == SpectralBlock::B3) b3.push_back(c);
    }
    IntMatrix restricted(d.rows(), b3.size());
    for (std::size_t j = 0; j < b3.size(); ++j) {
      for (std::size_t r = 0; r < d.rows(); ++r) restricted(r, j) = d.at(r, b3[j]);
    }
    EXPECT_EQ(kernel_rank(restricted), expected) << "degree " << degree;
  }
}

TEST(Spectral, SmallPages) {
  EXPECT_EQ(spectral_basis(2).size(), 7u);  // degrees 0..6
  std::size_t total = 0;
  for (const auto& d : spectral_basis(2)) total += d.size();
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(spectral_e3_poincare(2), (IntPolynomial{1, 0, 0, 2, 0, 0, 1}));
  EXPECT_EQ(spectral_e3_poincare(3).to_string(), "1+5t^3+5t^4+t^7");
  EXPECT_EQ(spectral_e3_poincare(4).to_string(), "1+9t^3+16t^4+9t^5+t^8");
  const SpectralReport r = spectral_e3_report(5, false);
  EXPECT_TRUE(r.d2_squared_zero);
  EXPECT_TRUE(r.torsion_free);
  EXPECT_EQ(r.b4_quotient, IntPolynomial::monomial(9));
  EXPECT_THROW(spectral_basis(1), DomainError);
}

TEST(Graded, ShiftAndSum) {
  const GradedGroup s3 = shift(reduced(GradedGroup::sphere(2)), 1);
  EXPECT_EQ(s3.at(3), FgAbGroup::free(1));
  EXPECT_EQ(s3.groups().size(), 1u);
  const GradedGroup a = GradedGroup::sphere(4);
  const GradedGroup b = GradedGroup::sphere(2);
  EXPECT_EQ(poincare_polynomial(graded_sum(a, b)), poincare_polynomial(a) + poincare_polynomial(b));
}

TEST(Polynomial, Basics) {
  const IntPolynomial p{1, 0, 0, 5, 5, 0, 0, 1};
  EXPECT_EQ(p.to_string(), "1+5t^3+5t^4+t^7");
  EXPECT_TRUE(p.is_palindromic());
  EXPECT_EQ(p.alternating_sum(), 0);
  EXPECT_EQ(IntPolynomial().to_string(), "0");
}

}  // namespace
}  // namespace mfcalc
