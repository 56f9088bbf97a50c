#include <gtest/gtest.h>

#include <random>

#include "chevalley/json_io.hpp"

using namespace chevalley;

namespace {

std::shared_ptr<WeightModule const> module(char const* name, std::vector<IntVec> weights) {
  auto g = std::make_shared<LieAlgebra const>(std::make_shared<RootSystem const>(CartanType::parse(name)));
  return std::make_shared<WeightModule const>(g, std::move(weights));
}

}  // namespace

TEST(JsonIo, Rationals) {
  EXPECT_EQ(to_json(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_json(Rational(4)), "4");
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
}

TEST(JsonIo, WordRoundTrip) {
  RootSystem rs(CartanType::parse("B2"));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> root(0, rs.num_roots() - 1), num(-9, 9), den(1, 7);
  for (int k = 0; k < 50; ++k) {
    Rational t(num(rng), den(rng));
    Rational u = t.is_zero() ? Rational(1) : t;
    Word w{Letter::chi(root(rng), t), Letter::torus(k % 2, u), Letter::wtilde(root(rng), u),
           Letter::coweight_torus({Rational(1, 2), 1}, u)};
    Json j = word_json(rs, w);
    EXPECT_EQ(word_from_json(rs, j), w);
    EXPECT_EQ(parse_word(rs, j.dump()), w);
  }
}

TEST(JsonIo, WordSchema) {
  RootSystem rs(CartanType::parse("A2"));
  auto w = parse_word(rs, R"([{"gen":"chi","root":[1,1],"t":"-2/3"},{"gen":"h","i":2,"t":"5"},{"gen":"w","root":[0,-1],"s":"1"}])");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Letter::chi(rs.root_index({1, 1}), Rational(-2, 3)));
  EXPECT_EQ(w[1], Letter::torus(1, 5));
  EXPECT_EQ(w[2], Letter::wtilde(rs.root_index({0, -1}), 1));
  EXPECT_TRUE(parse_word(rs, "[]").empty());
  for (auto bad : {R"({"gen":"chi"})", R"([{"gen":"chi","root":[1,2],"t":"1"}])", R"([{"gen":"chi","root":[1],"t":"1"}])",
                   R"([{"gen":"h","i":3,"t":"2"}])", R"([{"gen":"h","i":1,"t":"0"}])", R"([{"gen":"w","root":[1,0],"s":"0"}])",
                   R"([{"gen":"x","root":[1,0],"t":"1"}])", R"([{"gen":"chi","root":[1,0]}])", "[", R"([{"gen":"chi","root":[1,0],"t":"a"}])"})
    EXPECT_THROW(parse_word(rs, bad), ParseError) << bad;
}

TEST(JsonIo, Documents) {
  RootSystem rs(CartanType::parse("D4"));
  auto doc = root_system_json(rs);
  EXPECT_EQ(doc["type"], "D4");
  EXPECT_EQ(doc["positive_roots"].size(), 12u);
  EXPECT_EQ(doc["fundamental_group"], Json::parse("[2,2]"));

  auto v = module("A1", {{1}});
  auto lat = build_lattice(*v);
  auto summary = module_summary_json(*v, &lat);
  EXPECT_EQ(summary["dim"], 2);
  EXPECT_EQ(summary["weights"], Json::parse(R"([{"mu":[-1],"mult":1},{"mu":[1],"mult":1}])"));
  EXPECT_EQ(summary["lattice"][0]["basis"], Json::parse(R"([["1"]])"));

  auto verdict = integrality_decide(v, lat, {Letter::chi(0, Rational(1, 2))});
  auto vj = verdict_json(v->roots(), verdict);
  EXPECT_EQ(vj["verdict"], "not_integral");
  EXPECT_EQ(vj["witness"]["vector"], Json::parse(R"(["0","1"])"));
  EXPECT_EQ(vj["witness"]["image"], Json::parse(R"(["1/2","1"])"));
}
