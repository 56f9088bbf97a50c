#include <gtest/gtest.h>

#include "chevalley/lattice.hpp"

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

// Every column of m, restricted to its summand, lies in the lattice.
bool maps_lattice_into_itself(WeightModule const& v, AdmissibleLattice const& lat, SparseMatrix const& m) {
  for (int s = 0; s < v.num_summands(); ++s) {
    int off = v.summand_offset(s);
    for (auto const& b : lattice_block_basis(v, lat, s)) {
      std::vector<Rational> full(v.dim());
      std::copy(b.begin(), b.end(), full.begin() + off);
      if (!lattice_contains(v, lat, m.apply(full))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(LatticeGolden, A1StandardModule) {
  auto v = module("A1", {{1}});
  auto lat = build_lattice(*v);
  EXPECT_TRUE(lat.standard);
  EXPECT_TRUE(lattice_contains(*v, lat, {1, 1}));
  EXPECT_TRUE(lattice_contains(*v, lat, {0, 0}));
  EXPECT_FALSE(lattice_contains(*v, lat, {Rational(1, 2), 0}));
}

// The Kostant monomials span exactly the module basis.
TEST(Lattice, KostantLatticeIsStandard) {
  for (auto name : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
    auto v = sc_default(name);
    auto lat = build_lattice(*v);
    EXPECT_TRUE(lat.standard) << name;
    EXPECT_TRUE(same_lattice(lat, standard_lattice(*v))) << name;
  }
  auto adj = module("G2", {{0, 1}});
  EXPECT_TRUE(build_lattice(*adj).standard);
}

TEST(Lattice, RanksAreMultiplicities) {
  for (auto name : {"A2", "B2", "G2"}) {
    auto v = sc_default(name);
    auto lat = build_lattice(*v);
    for (int s = 0; s < v->num_summands(); ++s) {
      auto const& spaces = v->block(s).spaces();
      ASSERT_EQ(lat.bases[s].size(), spaces.size());
      for (std::size_t k = 0; k < spaces.size(); ++k)
        EXPECT_EQ(static_cast<int>(lat.bases[s][k].rows()), spaces[k].mult);
      // The highest weight space is Z v_lambda.
      EXPECT_EQ(lat.bases[s][0], RatMatrix::identity(1));
    }
  }
}

TEST(Lattice, StableUnderDividedPowersAndBinomials) {
  for (auto name : {"A2", "B2", "G2"}) {
    auto v = sc_default(name);
    auto lat = build_lattice(*v);
    auto const& rs = v->roots();
    for (int r = 0; r < rs.num_roots(); ++r) {
      int top = 0;
      for (int s = 0; s < v->num_summands(); ++s) top = std::max(top, v->block(s).max_power(r));
      for (int m = 1; m <= top + 1; ++m)
        EXPECT_TRUE(maps_lattice_into_itself(*v, lat, v->divided_power(r, m))) << name << " " << r << " " << m;
    }
    for (int i = 0; i < rs.rank(); ++i)
      for (int m = 0; m <= 4; ++m) EXPECT_TRUE(maps_lattice_into_itself(*v, lat, v->binomial_h(i, m)));
  }
}

TEST(Lattice, LoweredHighestWeightVectorIsInside) {
  auto v = module("A2", {{1, 1}});
  auto lat = build_lattice(*v);
  std::vector<Rational> top(v->dim());
  top[v->highest_weight_vector(0)] = 1;
  auto lowered = v->f(0).apply(top);
  EXPECT_TRUE(lattice_contains(*v, lat, lowered));
  for (auto& x : lowered) x /= 2;
  EXPECT_FALSE(lattice_contains(*v, lat, lowered));
}

// A lattice that is not the standard one goes through the echelon path.
TEST(Lattice, NonStandardMembership) {
  auto v = module("A2", {{1, 1}});
  auto lat = standard_lattice(*v);
  int zero = v->block(0).space_index({0, 0});
  ASSERT_GE(zero, 0);
  lat.bases[0][zero] = RatMatrix{{2, 0}, {0, 1}};
  lat.standard = false;
  auto const& space = v->block(0).spaces()[zero];
  std::vector<Rational> x(v->dim());
  x[space.offset] = 2;
  x[space.offset + 1] = 5;
  EXPECT_TRUE(lattice_contains(*v, lat, x));
  x[space.offset] = 1;
  EXPECT_FALSE(lattice_contains(*v, lat, x));
}
