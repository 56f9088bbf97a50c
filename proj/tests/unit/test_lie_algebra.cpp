#include <gtest/gtest.h>

#include <random>

#include "chevalley/lie_algebra.hpp"

using namespace chevalley;

namespace {

LieAlgebra make(char const* name) {
  return LieAlgebra(std::make_shared<RootSystem const>(CartanType::parse(name)));
}

LieElement jacobi(LieAlgebra const& g, int a, int b, int c) {
  LieElement x = g.basis(a), y = g.basis(b), z = g.basis(c);
  return g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) +
         g.bracket(z, g.bracket(x, y));
}

}  // namespace

TEST(LieAlgebra, A1HasNoAddablePairs) {
  auto g = make("A1");
  EXPECT_TRUE(g.constants().empty());
  LieElement h = g.bracket(LieElement::x(1, 0), LieElement::x(1, 1));
  EXPECT_EQ(h, LieElement::h(1, 0));
}

TEST(LieAlgebra, A2Constants) {
  auto g = make("A2");
  int positive_pairs = 0;
  for (auto const& c : g.constants()) {
    EXPECT_EQ(std::abs(c.n), 1);
    if (c.alpha < 3 && c.beta < 3) ++positive_pairs;
  }
  EXPECT_EQ(positive_pairs, 2);
  EXPECT_EQ(g.constants().size(), 12u);
  // The unique extraspecial pair gets +1.
  EXPECT_EQ(g.structure_constant(0, 1), 1);
  EXPECT_EQ(g.bracket(LieElement::x(2, 0), LieElement::x(2, 3)), LieElement::h(2, 0));
  LieElement hh = g.bracket(LieElement::h(2, 0), LieElement::h(2, 1));
  EXPECT_TRUE(hh.is_zero());
}

TEST(LieAlgebra, StringLengthAndGrading) {
  for (auto name : {"A2", "A3", "B2", "C3", "D4", "G2", "F4"}) {
    auto g = make(name);
    RootSystem const& rs = g.roots();
    int max_abs = 0;
    for (int a = 0; a < rs.num_roots(); ++a) {
      for (int b = 0; b < rs.num_roots(); ++b) {
        if (a == b || a == rs.negative(b)) continue;
        int n = g.structure_constant(a, b);
        auto s = rs.sum(a, b);
        if (!s) {
          EXPECT_EQ(n, 0);
          continue;
        }
        EXPECT_EQ(std::abs(n), rs.string_down(a, b) + 1) << name;
        EXPECT_EQ(g.structure_constant(b, a), -n);
        max_abs = std::max(max_abs, std::abs(n));
        LieElement br = g.basis_bracket(a, b);
        EXPECT_EQ(br.root_part.size(), 1u);
        EXPECT_EQ(br.root_part.begin()->first, *s);
      }
    }
    if (std::string(name) == "G2") EXPECT_EQ(max_abs, 3);
  }
}

// With p counted upward from beta (beta + k alpha), |n| = p + 1 fails already
// in A2; the identity holds for the downward count used above.
TEST(LieAlgebra, UpwardStringDoesNotGiveConstant) {
  auto g = make("A2");
  RootSystem const& rs = g.roots();
  EXPECT_EQ(rs.p_chain(0, 1), 1);
  EXPECT_EQ(std::abs(g.structure_constant(0, 1)), 1);
}

TEST(LieAlgebra, JacobiExhaustive) {
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
    auto g = make(name);
    int dim = g.dimension();
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        for (int c = b + 1; c < dim; ++c) ASSERT_TRUE(jacobi(g, a, b, c).is_zero()) << name;
  }
}

TEST(LieAlgebra, JacobiSampledLargeRank) {
  for (auto name : {"F4", "E6"}) {
    auto g = make(name);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, g.dimension() - 1);
    for (int trial = 0; trial < 10000; ++trial)
      ASSERT_TRUE(jacobi(g, pick(rng), pick(rng), pick(rng)).is_zero()) << name;
  }
}

TEST(LieAlgebra, IntegralBrackets) {
  for (auto name : {"B2", "G2", "C3"}) {
    auto g = make(name);
    for (int a = 0; a < g.dimension(); ++a)
      for (int b = 0; b < g.dimension(); ++b) EXPECT_TRUE(g.basis_bracket(a, b).is_integral());
  }
}

TEST(LieAlgebra, ChevalleyInvolution) {
  for (auto name : {"A2", "B2", "G2", "D4"}) {
    auto g = make(name);
    int dim = g.dimension();
    for (int a = 0; a < dim; ++a) {
      LieElement x = g.basis(a);
      EXPECT_EQ(g.chevalley_involution(g.chevalley_involution(x)), x);
      for (int b = 0; b < dim; ++b) {
        LieElement y = g.basis(b);
        EXPECT_EQ(g.chevalley_involution(g.bracket(x, y)),
                  g.bracket(g.chevalley_involution(x), g.chevalley_involution(y)))
            << name;
      }
    }
  }
  auto g = make("A2");
  EXPECT_EQ(g.chevalley_involution(LieElement::h(2, 0)), Rational(-1) * LieElement::h(2, 0));
}

// The literal map x_alpha -> x_{-alpha}, h -> -h is not a homomorphism.
TEST(LieAlgebra, UnsignedInvolutionFails) {
  auto g = make("A2");
  auto literal = [&](LieElement const& e) {
    LieElement out = LieElement::zero(2);
    for (int i = 0; i < 2; ++i) out.h_part[i] = -e.h_part[i];
    for (auto const& [k, c] : e.root_part) out.root_part[g.roots().negative(k)] = c;
    return out;
  };
  LieElement x = g.basis(0), y = g.basis(1);
  EXPECT_FALSE(literal(g.bracket(x, y)) == g.bracket(literal(x), literal(y)));
}
