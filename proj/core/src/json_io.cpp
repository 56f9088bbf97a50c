#include "chevalley/json_io.hpp"

namespace chevalley {
namespace {

IntVec int_vector(Json const& j, char const* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": array expected");
  IntVec out;
  for (auto const& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": integer entries expected");
    out.push_back(x.get<int>());
  }
  return out;
}

int root_from_json(RootSystem const& rs, Json const& j) {
  auto coords = int_vector(j, "root");
  if (static_cast<int>(coords.size()) != rs.rank()) throw ParseError("root: wrong number of coordinates");
  auto k = rs.find_root(coords);
  if (!k) throw ParseError("root: not a root of " + rs.type().name());
  return *k;
}

Json const& field(Json const& j, char const* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

Rational nonzero_param(Json const& j, char const* name) {
  Rational x = rational_from_json(field(j, name));
  if (x.is_zero()) throw ParseError(std::string("parameter \"") + name + "\" must be nonzero");
  return x;
}

}  // namespace

Json to_json(Rational const& x) { return x.to_string(); }

Rational rational_from_json(Json const& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("rational: \"p/q\" string expected");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (std::exception const& e) {
    throw ParseError(std::string("rational: ") + e.what());
  }
}

Json to_json(IntVec const& v) { return Json(v); }

Json to_json(std::vector<Rational> const& v) {
  Json out = Json::array();
  for (auto const& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(RatMatrix const& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json root_system_json(RootSystem const& rs) {
  Json roots = Json::array(), lengths = Json::array();
  for (int k = 0; k < rs.num_positive(); ++k) {
    roots.push_back(rs.root(k));
    lengths.push_back(rs.length(k));
  }
  Json group = Json::array();
  for (auto const& f : rs.fundamental_group()) group.push_back(f.get_si());
  return Json{{"type", rs.type().name()},
              {"cartan_matrix", rs.cartan()},
              {"positive_roots", roots},
              {"root_lengths", lengths},
              {"fundamental_group", group}};
}

Json structure_constants_json(LieAlgebra const& g) {
  auto const& rs = g.roots();
  Json out = Json::array();
  for (auto const& c : g.constants()) out.push_back({{"alpha", rs.root(c.alpha)}, {"beta", rs.root(c.beta)}, {"n", c.n}});
  return out;
}

Json module_summary_json(WeightModule const& module, AdmissibleLattice const* lattice) {
  Json weights = Json::array();
  for (auto const& [mu, mult] : module.weight_multiplicities()) weights.push_back({{"mu", mu}, {"mult", mult}});
  Json out{{"type", module.roots().type().name()},
           {"summands", module.highest_weights()},
           {"dim", module.dim()},
           {"weights", weights}};
  if (lattice) {
    Json lat = Json::array();
    for (int s = 0; s < module.num_summands(); ++s) {
      auto const& spaces = module.block(s).spaces();
      for (std::size_t k = 0; k < spaces.size(); ++k)
        lat.push_back({{"summand", s}, {"mu", spaces[k].mu}, {"basis", to_json(lattice->bases[s][k])}});
    }
    out["lattice"] = lat;
  }
  return out;
}

Json word_json(RootSystem const& rs, Word const& w) {
  Json out = Json::array();
  for (auto const& letter : w) {
    switch (letter.kind) {
      case Letter::Kind::Chi:
        out.push_back({{"gen", "chi"}, {"root", rs.root(letter.root)}, {"t", to_json(letter.param)}});
        break;
      case Letter::Kind::Torus:
        out.push_back({{"gen", "h"}, {"i", letter.index + 1}, {"t", to_json(letter.param)}});
        break;
      case Letter::Kind::Coweight:
        out.push_back({{"gen", "h"}, {"coweight", to_json(letter.coweight)}, {"t", to_json(letter.param)}});
        break;
      case Letter::Kind::WeylLift:
        out.push_back({{"gen", "w"}, {"root", rs.root(letter.root)}, {"s", to_json(letter.param)}});
        break;
    }
  }
  return out;
}

Word word_from_json(RootSystem const& rs, Json const& j) {
  if (!j.is_array()) throw ParseError("word: array of letters expected");
  Word w;
  for (auto const& x : j) {
    if (!x.is_object()) throw ParseError("word: letter must be an object");
    auto const& gen = field(x, "gen");
    if (!gen.is_string()) throw ParseError("word: \"gen\" must be a string");
    auto name = gen.get<std::string>();
    if (name == "chi") {
      w.push_back(Letter::chi(root_from_json(rs, field(x, "root")), rational_from_json(field(x, "t"))));
    } else if (name == "w") {
      w.push_back(Letter::wtilde(root_from_json(rs, field(x, "root")), nonzero_param(x, "s")));
    } else if (name == "h") {
      Rational t = nonzero_param(x, "t");
      if (x.contains("coweight")) {
        std::vector<Rational> cw;
        auto const& c = x["coweight"];
        if (!c.is_array() || static_cast<int>(c.size()) != rs.rank()) throw ParseError("coweight: wrong length");
        for (auto const& y : c) cw.push_back(rational_from_json(y));
        w.push_back(Letter::coweight_torus(std::move(cw), t));
      } else {
        auto const& i = field(x, "i");
        if (!i.is_number_integer() || i.get<int>() < 1 || i.get<int>() > rs.rank())
          throw ParseError("h: index out of range");
        w.push_back(Letter::torus(i.get<int>() - 1, t));
      }
    } else {
      throw ParseError("word: unknown generator \"" + name + "\"");
    }
  }
  return w;
}

Word parse_word(RootSystem const& rs, std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(e.what());
  }
  return word_from_json(rs, j);
}

Json witness_json(Witness const& w) {
  return Json{{"summand", w.summand},
              {"mu", w.mu},
              {"vector", to_json(w.vector)},
              {"image", to_json(w.image)},
              {"map", w.inverse ? "g^-1" : "g"}};
}

Json coords_json(RootSystem const& rs, UnipotentCoords const& u) {
  Json out = Json::array();
  for (std::size_t k = 0; k < u.order.size(); ++k)
    out.push_back({{"root", rs.root(u.order[k])}, {"t", to_json(u.t[k])}});
  return out;
}

Json torus_json(std::vector<Rational> const& h) {
  Json out = Json::array();
  for (std::size_t i = 0; i < h.size(); ++i) out.push_back({{"i", i + 1}, {"t", to_json(h[i])}});
  return out;
}

Json decomposition_json(RootSystem const& rs, IwasawaDecomposition const& d, bool exact) {
  return Json{{"gamma", word_json(rs, d.gamma)}, {"u", coords_json(rs, d.u)}, {"h", torus_json(d.h)}, {"exact", exact}};
}

Json verdict_json(RootSystem const& rs, IntegralityVerdict const& v) {
  Json out;
  if (v.in_gz) {
    out = Json{{"verdict", "in_GZ"}, {"certificate", word_json(rs, v.certificate)}};
  } else {
    out = Json{{"verdict", "not_integral"}};
    if (v.witness) out["witness"] = witness_json(*v.witness);
  }
  if (!v.warnings.empty()) out["warnings"] = v.warnings;
  return out;
}

}  // namespace chevalley
