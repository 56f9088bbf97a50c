#pragma once

#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/weight_module.hpp"

namespace chevalley {

// A Z-form of a WeightModule split along weight spaces. bases[s][k] holds,
// as rows, a Z-basis of V_{mu,Z} for weight space k of summand s, written in
// the coordinates of that weight space.
struct AdmissibleLattice {
  std::vector<std::vector<RatMatrix>> bases;
  // Every basis is the identity: V_Z is the Z-span of the module basis.
  bool standard = false;
};

// The Z-span of the module basis (which the construction makes admissible).
AdmissibleLattice standard_lattice(WeightModule const& module);

// V_Z = U_Z v_lambda summand by summand, built from Kostant monomials
// prod x_{-beta}^(m_beta) v_lambda taken in height order, each weight space
// reduced to Hermite normal form.
AdmissibleLattice build_lattice(WeightModule const& module);

bool same_lattice(AdmissibleLattice const& a, AdmissibleLattice const& b);

// v in module coordinates.
bool lattice_contains(WeightModule const& module, AdmissibleLattice const& lattice,
                      std::vector<Rational> const& v);

// Restriction to summand s: v in block coordinates.
bool lattice_contains_block(WeightModule const& module, AdmissibleLattice const& lattice, int s,
                            std::vector<Rational> const& v);

// Lattice basis vectors of summand s, in block coordinates.
std::vector<std::vector<Rational>> lattice_block_basis(WeightModule const& module,
                                                       AdmissibleLattice const& lattice, int s);

}  // namespace chevalley
