#include "chevalley/lattice.hpp"

#include <map>
#include <stdexcept>

namespace chevalley {
namespace {

// Vectors supported on one weight space, grouped by space.
using SpaceVectors = std::vector<std::vector<std::vector<Rational>>>;

std::vector<RatMatrix> reduce(IrreducibleBlock const& block, SpaceVectors const& gens) {
  std::vector<RatMatrix> out(block.spaces().size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    int mult = block.spaces()[k].mult;
    if (gens[k].empty()) {
      out[k] = RatMatrix(0, mult);
      continue;
    }
    RatMatrix m(gens[k].size(), mult);
    for (std::size_t r = 0; r < gens[k].size(); ++r)
      for (int c = 0; c < mult; ++c) m(r, c) = gens[k][r][c];
    out[k] = hermite_normal_form(m);
  }
  return out;
}

std::vector<RatMatrix> kostant_block(RootSystem const& rs, IrreducibleBlock const& block) {
  std::size_t nspaces = block.spaces().size();
  SpaceVectors gens(nspaces);
  gens[0].push_back({Rational(1)});
  auto current = reduce(block, gens);
  // The leftmost factor of the monomial acts last, so sweep the roots from
  // the top of the height order down.
  for (int b = rs.num_positive() - 1; b >= 0; --b) {
    int neg = rs.negative(b);
    int top = block.max_power(neg);
    std::vector<SparseMatrix> columns;
    for (int m = 1; m <= top; ++m) columns.push_back(block.divided_power(neg, m).transpose());
    SpaceVectors next(nspaces);
    for (std::size_t k = 0; k < nspaces; ++k) {
      auto const& space = block.spaces()[k];
      for (std::size_t r = 0; r < current[k].rows(); ++r) {
        next[k].push_back(current[k].row(r));
        for (int m = 1; m <= top; ++m) {
          // x^(m) applied to sum_c row[c] e_{offset + c}.
          std::map<int, Rational> image;
          for (int c = 0; c < space.mult; ++c) {
            Rational const& coeff = current[k](r, c);
            if (coeff.is_zero()) continue;
            for (auto const& e : columns[m - 1].row(space.offset + c))
              Rational::fused_multiply_add(image[static_cast<int>(e.col)], e.value, coeff);
          }
          if (image.empty()) continue;
          int target = block.space_of_basis(image.begin()->first);
          auto const& tspace = block.spaces()[target];
          std::vector<Rational> v(tspace.mult);
          for (auto const& [idx, val] : image) v[idx - tspace.offset] = val;
          next[target].push_back(std::move(v));
        }
      }
    }
    current = reduce(block, next);
  }
  for (std::size_t k = 0; k < nspaces; ++k)
    if (static_cast<int>(current[k].rows()) != block.spaces()[k].mult)
      throw std::logic_error("Kostant monomials do not span a weight space");
  return current;
}

}  // namespace

AdmissibleLattice standard_lattice(WeightModule const& module) {
  AdmissibleLattice lat;
  lat.standard = true;
  for (int s = 0; s < module.num_summands(); ++s) {
    std::vector<RatMatrix> spaces;
    for (auto const& space : module.block(s).spaces()) spaces.push_back(RatMatrix::identity(space.mult));
    lat.bases.push_back(std::move(spaces));
  }
  return lat;
}

AdmissibleLattice build_lattice(WeightModule const& module) {
  AdmissibleLattice lat;
  for (int s = 0; s < module.num_summands(); ++s)
    lat.bases.push_back(kostant_block(module.roots(), module.block(s)));
  lat.standard = true;
  for (auto const& spaces : lat.bases)
    for (auto const& b : spaces)
      if (!(b == RatMatrix::identity(b.rows()))) lat.standard = false;
  return lat;
}

bool same_lattice(AdmissibleLattice const& a, AdmissibleLattice const& b) { return a.bases == b.bases; }

bool lattice_contains_block(WeightModule const& module, AdmissibleLattice const& lattice, int s,
                            std::vector<Rational> const& v) {
  auto const& block = module.block(s);
  if (static_cast<int>(v.size()) != block.dim()) throw std::invalid_argument("vector has the wrong size");
  if (lattice.standard) {
    for (auto const& x : v)
      if (!x.is_integer()) return false;
    return true;
  }
  auto const& spaces = block.spaces();
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    std::vector<Rational> part(v.begin() + spaces[k].offset, v.begin() + spaces[k].offset + spaces[k].mult);
    bool zero = true;
    for (auto const& x : part) zero = zero && x.is_zero();
    if (zero) continue;
    auto coords = coordinates_in_echelon_basis(lattice.bases[s][k], part);
    if (!coords) return false;
    for (auto const& c : *coords)
      if (!c.is_integer()) return false;
  }
  return true;
}

bool lattice_contains(WeightModule const& module, AdmissibleLattice const& lattice,
                      std::vector<Rational> const& v) {
  if (static_cast<int>(v.size()) != module.dim()) throw std::invalid_argument("vector has the wrong size");
  for (int s = 0; s < module.num_summands(); ++s) {
    int off = module.summand_offset(s);
    std::vector<Rational> part(v.begin() + off, v.begin() + off + module.block(s).dim());
    if (!lattice_contains_block(module, lattice, s, part)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> lattice_block_basis(WeightModule const& module,
                                                       AdmissibleLattice const& lattice, int s) {
  auto const& block = module.block(s);
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < block.spaces().size(); ++k) {
    auto const& space = block.spaces()[k];
    auto const& b = lattice.bases[s][k];
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::vector<Rational> v(block.dim());
      for (int c = 0; c < space.mult; ++c) v[space.offset + c] = b(r, c);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace chevalley
