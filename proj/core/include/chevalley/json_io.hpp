#pragma once

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chevalley/integrality.hpp"

namespace chevalley {

using Json = nlohmann::ordered_json;

// Malformed JSON input: bad shape, unknown generator, non-root, zero parameter.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals travel as "p/q" strings; integer JSON numbers are accepted on input.
Json to_json(Rational const& x);
Rational rational_from_json(Json const& j);

Json to_json(IntVec const& v);
Json to_json(std::vector<Rational> const& v);
Json to_json(RatMatrix const& m);

Json root_system_json(RootSystem const& rs);
Json structure_constants_json(LieAlgebra const& g);
// With `with_lattice` the per weight space lattice bases are included.
Json module_summary_json(WeightModule const& module, AdmissibleLattice const* lattice = nullptr);

// Word schema:
//   {"gen":"chi","root":[..],"t":"p/q"}   {"gen":"h","i":k,"t":"p/q"}  (k is 1-based)
//   {"gen":"h","coweight":[..],"t":"p/q"} {"gen":"w","root":[..],"s":"p/q"}
Json word_json(RootSystem const& rs, Word const& w);
Word word_from_json(RootSystem const& rs, Json const& j);
Word parse_word(RootSystem const& rs, std::string const& text);

Json witness_json(Witness const& w);
Json coords_json(RootSystem const& rs, UnipotentCoords const& u);
Json torus_json(std::vector<Rational> const& h);
Json decomposition_json(RootSystem const& rs, IwasawaDecomposition const& d, bool exact);
Json verdict_json(RootSystem const& rs, IntegralityVerdict const& v);

}  // namespace chevalley
