#include <gtest/gtest.h>

#include <random>

#include "chevalley/integrality.hpp"

using namespace chevalley;

namespace {

std::shared_ptr<WeightModule const> module(char const* name, std::vector<IntVec> weights) {
  auto g = std::make_shared<LieAlgebra const>(std::make_shared<RootSystem const>(CartanType::parse(name)));
  return std::make_shared<WeightModule const>(g, std::move(weights));
}

std::shared_ptr<WeightModule const> sc_default(char const* name) {
  auto g = std::make_shared<LieAlgebra const>(std::make_shared<RootSystem const>(CartanType::parse(name)));
  return std::make_shared<WeightModule const>(g, WeightModule::sc_default_weights(g->roots()));
}

RatMatrix dense(GroupElement const& g) { return g.matrix().to_dense(); }

Rational mixed(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), kind(0, 3);
  static int const dens[] = {1, 2, 3, 5};
  return Rational(num(rng), dens[kind(rng)]);
}

Rational nonzero(std::mt19937& rng) {
  Rational t;
  while (t.is_zero()) t = mixed(rng);
  return t;
}

// Oracle: g and g^-1 have integral dense matrices on the whole module.
bool dense_integral_both_ways(GroupElement const& g) {
  auto m = dense(g);
  auto inv = inverse(m);
  auto integral = [](RatMatrix const& x) {
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (!x(r, c).is_integer()) return false;
    return true;
  };
  return inv && integral(m) && integral(*inv);
}

Word simple_word(RootSystem const& rs, std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> kind(0, 3), simple(0, rs.rank() - 1);
  Word w;
  for (int k = 0; k < length; ++k) {
    int i = simple(rng);
    int a = rs.simple_root(i);
    switch (kind(rng)) {
      case 0: w.push_back(Letter::chi(a, mixed(rng))); break;
      case 1: w.push_back(Letter::chi(rs.negative(a), mixed(rng))); break;
      case 2: w.push_back(Letter::torus(i, nonzero(rng))); break;
      default: w.push_back(Letter::wtilde(a, nonzero(rng)));
    }
  }
  return w;
}

}  // namespace

TEST(IntegralityGolden, A1Stabilizer) {
  auto v = module("A1", {{1}});
  auto lat = standard_lattice(*v);
  int a = v->roots().simple_root(0);
  int na = v->roots().negative(a);
  auto gamma = chi(v, na, 1) * chi(v, a, 1);
  EXPECT_TRUE(stabilizes(gamma, lat).stabilizes);
  EXPECT_TRUE(stabilizes(gamma, lat, StabilizeMode::Exhaustive).stabilizes);
  EXPECT_TRUE(stabilizes(GroupElement(v, Word{}), lat).stabilizes);

  auto half = chi(v, a, Rational(1, 2));
  auto report = stabilizes(half, lat, StabilizeMode::Exhaustive);
  ASSERT_FALSE(report.stabilizes);
  ASSERT_TRUE(report.witness);
  EXPECT_FALSE(report.witness->inverse);
  EXPECT_EQ(report.witness->vector, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(report.witness->image, (std::vector<Rational>{Rational(1, 2), 1}));
  EXPECT_EQ(report.witness->mu, IntVec{-1});
  EXPECT_FALSE(stabilizes(half, lat).stabilizes);
}

TEST(IntegralityGolden, Sl2IwasawaExample) {
  auto m = mat2(Rational(1, 2), 0, Rational(3, 4), 2);
  auto split = sl2_iwasawa(m);
  EXPECT_EQ(split.gamma * split.b, m);
  EXPECT_EQ(split.gamma, mat2(2, 1, 3, 2));
  EXPECT_EQ(split.b, mat2(Rational(1, 4), -2, 0, 4));
  // The displayed split itself is a valid decomposition.
  EXPECT_EQ(mat2(2, 1, 3, 2) * mat2(Rational(1, 4), -2, 0, 4), m);

  auto w = mat2(0, -1, 1, 0);
  EXPECT_EQ(sl2_iwasawa(w).gamma, w);
  EXPECT_EQ(sl2_iwasawa(w).b, Mat2::identity(2));
  EXPECT_THROW(sl2_iwasawa(mat2(1, 1, 1, 2) * mat2(2, 0, 0, 1)), std::invalid_argument);
}

TEST(Integrality, Sl2IwasawaRandom) {
  std::mt19937 rng(41);
  for (int k = 0; k < 300; ++k) {
    Rational a = nonzero(rng), b = mixed(rng), c = mixed(rng);
    auto m = mat2(a, b, c, (1 + b * c) / a);
    auto split = sl2_iwasawa(m);
    EXPECT_EQ(split.gamma * split.b, m);
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) EXPECT_TRUE(split.gamma(r, col).is_integer());
    EXPECT_TRUE(split.b(1, 0).is_zero());
  }
}

TEST(IntegralityGolden, A2UnipotentCoords) {
  auto v = module("A2", {{1, 0}});
  auto const& rs = v->roots();
  int a1 = rs.simple_root(0), a2 = rs.simple_root(1), a12 = rs.root_index({1, 1});
  auto coords = unipotent_factorize(chi(v, a1, 3) * chi(v, a12, -2));
  EXPECT_EQ(coords.coord(a1), Rational(3));
  EXPECT_EQ(coords.coord(a2), Rational(0));
  EXPECT_EQ(coords.coord(a12), Rational(-2));

  auto wrong = chi(v, a12, 5) * chi(v, a1, 1);
  auto c2 = unipotent_factorize(wrong);
  EXPECT_EQ(dense(GroupElement(v, c2.word())), dense(wrong));

  auto id = unipotent_factorize(GroupElement(v, Word{}));
  for (auto const& t : id.t) EXPECT_TRUE(t.is_zero());
  EXPECT_THROW(unipotent_factorize(chi(v, rs.negative(a1), 1)), NotUnipotent);
  EXPECT_THROW(unipotent_factorize(torus(v, 0, 2)), NotUnipotent);
}

TEST(Integrality, FactorizationRoundTrip) {
  std::mt19937 rng(43);
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto v = sc_default(name);
    auto const& rs = v->roots();
    for (auto order : {height_order(rs), simple_first_order(rs, rs.rank() - 1)}) {
      for (int k = 0; k < 10; ++k) {
        std::vector<Rational> t(rs.num_positive());
        for (auto& x : t) x = mixed(rng);
        Word w;
        for (std::size_t j = 0; j < order.size(); ++j) w.push_back(Letter::chi(order[j], t[j]));
        auto coords = unipotent_factorize(GroupElement(v, w), order);
        EXPECT_EQ(coords.order, order);
        EXPECT_EQ(coords.t, t) << name;
      }
    }
  }
}

// Integral coordinates exactly when u and u^-1 have integral matrices.
TEST(Integrality, UnipotentIntegralityAgreesWithDenseOracle) {
  std::mt19937 rng(47);
  for (auto name : {"A2", "B2", "G2"}) {
    auto v = sc_default(name);
    auto const& rs = v->roots();
    auto lat = build_lattice(*v);
    std::uniform_int_distribution<int> root(0, rs.num_positive() - 1);
    for (int k = 0; k < 40; ++k) {
      Word w;
      for (int j = 0; j < 4; ++j) {
        Rational t = mixed(rng);
        if (k % 2 == 0) t = Rational(t.numerator());
        w.push_back(Letter::chi(root(rng), t));
      }
      GroupElement u(v, w);
      auto verdict = unipotent_integrality(u);
      EXPECT_TRUE(verdict.regular_summand);
      bool oracle = dense_integral_both_ways(u);
      EXPECT_EQ(verdict.integral, oracle) << name;
      EXPECT_EQ(stabilizes(u, lat).stabilizes, oracle);
      EXPECT_EQ(stabilizes(u, lat, StabilizeMode::Exhaustive).stabilizes, oracle);
    }
  }
}

TEST(Integrality, StabilizesAgreesWithDenseOracle) {
  std::mt19937 rng(53);
  for (auto name : {"A2", "B2"}) {
    auto v = sc_default(name);
    auto lat = standard_lattice(*v);
    for (int k = 0; k < 40; ++k) {
      GroupElement g(v, simple_word(v->roots(), rng, 4));
      bool oracle = dense_integral_both_ways(g);
      auto report = stabilizes(g, lat, StabilizeMode::Exhaustive);
      ASSERT_EQ(report.stabilizes, oracle);
      EXPECT_EQ(stabilizes(g, lat).stabilizes, oracle);
      if (!oracle) {
        ASSERT_TRUE(report.witness);
        EXPECT_TRUE(lattice_contains(*v, lat, report.witness->vector));
        EXPECT_FALSE(lattice_contains(*v, lat, report.witness->image));
        auto image = (report.witness->inverse ? g.inverse() : g).matrix().apply(report.witness->vector);
        EXPECT_EQ(image, report.witness->image);
      }
    }
  }
}

TEST(IntegralityGolden, ToralFactorization) {
  auto v = module("A1", {{1}});
  auto h = GroupElement::from_blocks(v, {SparseMatrix::diagonal({Rational(1, 2), 2})});
  EXPECT_EQ(toral_factorize(h), (std::vector<Rational>{Rational(1, 2)}));

  auto a2 = sc_default("A2");
  auto g = torus(a2, 0, Rational(2, 3)) * torus(a2, 1, 5);
  EXPECT_EQ(toral_factorize(g), (std::vector<Rational>{Rational(2, 3), 5}));
  EXPECT_EQ(toral_factorize(GroupElement(a2, Word{})), (std::vector<Rational>{1, 1}));
  EXPECT_THROW(toral_factorize(chi(a2, 0, 1)), std::domain_error);
}

TEST(Integrality, ToralRoundTrip) {
  std::mt19937 rng(59);
  for (auto name : {"A1", "A2", "B2", "G2", "A3", "C3"}) {
    auto v = sc_default(name);
    int l = v->roots().rank();
    for (int k = 0; k < 10; ++k) {
      std::vector<Rational> t(l);
      Word w;
      for (int i = 0; i < l; ++i) {
        t[i] = nonzero(rng);
        w.push_back(Letter::torus(i, t[i]));
      }
      EXPECT_EQ(toral_factorize(GroupElement(v, w)), t) << name;
    }
  }
  // Adjoint A1: h(t) and h(-t) agree, either answer must reproduce the matrix.
  auto adj = module("A1", {{2}});
  auto h = torus(adj, 0, -3);
  auto t = toral_factorize(h);
  EXPECT_EQ(dense(torus(adj, 0, t[0])), dense(h));
}

TEST(IntegralityGolden, IwasawaA1) {
  auto v = module("A1", {{1}});
  int na = v->roots().negative(v->roots().simple_root(0));
  Word w{Letter::chi(na, Rational(1, 2))};
  auto dec = iwasawa_decompose(v, w);
  EXPECT_TRUE(is_integral_word(dec.gamma));
  EXPECT_EQ(dense(GroupElement(v, dec.recomposed())), (RatMatrix{{1, 0}, {Rational(1, 2), 1}}));

  auto empty = iwasawa_decompose(v, {});
  EXPECT_TRUE(empty.gamma.empty());
  EXPECT_EQ(empty.h, (std::vector<Rational>{1}));

  auto upper = iwasawa_decompose(v, {Letter::chi(0, Rational(3, 2)), Letter::torus(0, 7)});
  EXPECT_TRUE(upper.gamma.empty());
}

TEST(Integrality, IwasawaRecomposes) {
  std::mt19937 rng(61);
  for (auto name : {"A2", "B2", "G2"}) {
    auto v = sc_default(name);
    auto lat = standard_lattice(*v);
    for (int k = 0; k < 25; ++k) {
      Word w = simple_word(v->roots(), rng, 1 + k % 12);
      auto dec = iwasawa_decompose(v, w);
      GroupElement g(v, w);
      EXPECT_TRUE(GroupElement(v, dec.recomposed()).equals(g)) << name << " " << k;
      EXPECT_EQ(dense(GroupElement(v, dec.recomposed())), dense(g));
      EXPECT_TRUE(is_integral_word(dec.gamma));
      EXPECT_TRUE(stabilizes(GroupElement(v, dec.gamma), lat, StabilizeMode::Exhaustive).stabilizes);
    }
  }
}

TEST(Integrality, IwasawaRejectsNonSimpleLetters) {
  auto v = sc_default("A2");
  int a12 = v->roots().root_index({1, 1});
  EXPECT_THROW(iwasawa_decompose(v, {Letter::chi(a12, 1)}), UnsupportedLetter);
}

TEST(IntegralityGolden, DecideA1) {
  auto v = module("A1", {{1}});
  auto lat = standard_lattice(*v);
  int a = v->roots().simple_root(0);
  int na = v->roots().negative(a);
  Rational half(1, 2);
  Word word{Letter::chi(a, half), Letter::torus(0, half), Letter::chi(na, half)};
  auto verdict = integrality_decide(v, lat, word);
  ASSERT_TRUE(verdict.in_gz);
  EXPECT_TRUE(is_integral_word(verdict.certificate));
  EXPECT_EQ(dense(GroupElement(v, verdict.certificate)), (RatMatrix{{1, 1}, {1, 2}}));

  auto no = integrality_decide(v, lat, {Letter::chi(a, half)});
  EXPECT_FALSE(no.in_gz);
  ASSERT_TRUE(no.witness);

  auto torus2 = integrality_decide(v, lat, {Letter::torus(0, 2)});
  EXPECT_FALSE(torus2.in_gz);
  ASSERT_TRUE(torus2.witness);
}

TEST(Integrality, DecideAgreesWithDenseOracle) {
  std::mt19937 rng(67);
  for (auto name : {"A2", "B2", "G2"}) {
    auto v = sc_default(name);
    auto lat = standard_lattice(*v);
    for (int k = 0; k < 20; ++k) {
      Word w = simple_word(v->roots(), rng, 1 + k % 6);
      GroupElement g(v, w);
      auto verdict = integrality_decide(v, lat, w);
      EXPECT_EQ(verdict.in_gz, dense_integral_both_ways(g)) << name << " " << k;
      if (verdict.in_gz) {
        EXPECT_TRUE(is_integral_word(verdict.certificate));
        EXPECT_EQ(dense(GroupElement(v, verdict.certificate)), dense(g));
      } else {
        ASSERT_TRUE(verdict.witness);
        EXPECT_FALSE(lattice_contains(*v, lat, verdict.witness->image));
      }
    }
  }
}

TEST(Integrality, DecideRefusesWithoutHypothesis) {
  auto adj = module("A2", {{1, 1}});
  EXPECT_THROW(integrality_decide(adj, standard_lattice(*adj), {}), HypothesisViolation);
  auto fund = module("A2", {{1, 0}, {0, 1}});
  auto verdict = integrality_decide(fund, standard_lattice(*fund), {});
  EXPECT_TRUE(verdict.in_gz);
  EXPECT_FALSE(verdict.warnings.empty());
}

TEST(Integrality, CommutatorConstants) {
  std::vector<std::pair<Rational, Rational>> samples{{1, 1}, {Rational(2, 3), -3}, {5, Rational(1, 7)}};
  auto a2 = sc_default("A2");
  auto c = commutator_constants(a2, 0, 1, samples);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].i, 1);
  EXPECT_EQ(c[0].j, 1);
  EXPECT_EQ(abs(c[0].c), 1);
  auto const& alg = a2->algebra();
  EXPECT_EQ(abs(c[0].c), abs(mpz_class(alg.structure_constant(0, 1))));

  auto b2 = sc_default("B2");
  auto cb = commutator_constants(b2, 0, 1, samples);
  EXPECT_EQ(cb.size(), 2u);
  for (auto const& x : cb) EXPECT_NE(x.c, 0);

  auto a3 = sc_default("A3");
  auto const& rs = a3->roots();
  auto orth = commutator_constants(a3, rs.simple_root(0), rs.simple_root(2), samples);
  EXPECT_TRUE(orth.empty());
}
