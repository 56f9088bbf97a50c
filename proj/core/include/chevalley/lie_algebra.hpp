#pragma once

#include <map>
#include <memory>
#include <vector>

#include "chevalley/rational.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

// Element of g over Q in the Chevalley basis {x_alpha, h_i}. root_part is
// keyed by root index and never stores zero coefficients.
struct LieElement {
  std::vector<Rational> h_part;
  std::map<int, Rational> root_part;

  static LieElement zero(int rank);
  static LieElement x(int rank, int root);
  static LieElement h(int rank, int i);

  bool is_zero() const;
  bool is_integral() const;

  LieElement& operator+=(LieElement const& other);
  LieElement& operator*=(Rational const& c);
  friend LieElement operator+(LieElement a, LieElement const& b) { return a += b; }
  friend LieElement operator-(LieElement a, LieElement const& b) {
    LieElement nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend LieElement operator*(Rational const& c, LieElement a) { return a *= c; }
  friend bool operator==(LieElement const& a, LieElement const& b);
};

// Simple Lie algebra with a Chevalley basis. Signs follow the extraspecial
// pair convention: N(alpha, beta) = r + 1 > 0 on every extraspecial pair,
// where beta - r alpha is the bottom of the alpha-string through beta.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::shared_ptr<RootSystem const> rs);

  RootSystem const& roots() const { return *rs_; }
  std::shared_ptr<RootSystem const> root_system() const { return rs_; }
  int rank() const { return rs_->rank(); }
  int dimension() const { return rs_->num_roots() + rs_->rank(); }

  // N(alpha, beta) with [x_alpha, x_beta] = N x_{alpha+beta}; 0 when alpha+beta
  // is not a root.
  int structure_constant(int alpha, int beta) const { return table_[alpha][beta]; }
  // The extraspecial pair (alpha', beta') of a non-simple positive root.
  std::pair<int, int> extraspecial_pair(int xi) const { return extraspecial_[xi]; }

  LieElement bracket(LieElement const& a, LieElement const& b) const;
  LieElement basis_bracket(int a, int b) const;  // indices into basis()
  // Basis: index < num_roots is x_root, index num_roots + i is h_i.
  LieElement basis(int index) const;
  // h_i -> -h_i, x_alpha -> -x_{-alpha}.
  LieElement chevalley_involution(LieElement const& a) const;

  struct ConstantEntry {
    int alpha;
    int beta;
    int n;
  };
  // All nonzero N(alpha, beta), ordered by (alpha, beta).
  std::vector<ConstantEntry> constants() const;

 private:
  int compute(int a, int b) const;

  std::shared_ptr<RootSystem const> rs_;
  std::vector<std::vector<int>> table_;
  std::vector<std::pair<int, int>> extraspecial_;
};

}  // namespace chevalley
