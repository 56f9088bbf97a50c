#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/group.hpp"
#include "chevalley/lattice.hpp"

namespace chevalley {

// A lattice vector v with g v (or g^-1 v, when `inverse`) outside the lattice.
struct Witness {
  int summand = -1;
  IntVec mu;                     // weight of v
  std::vector<Rational> vector;  // v, module coordinates
  std::vector<Rational> image;   // g v or g^-1 v, module coordinates
  bool inverse = false;
};

struct StabilizerReport {
  bool stabilizes = false;
  std::optional<Witness> witness;
  // Decided letter by letter: every generator of the word and its inverse
  // preserve the lattice, hence so does their product.
  bool by_generators = false;
};

enum class StabilizeMode {
  Auto,        // try the generators of the word first
  Exhaustive,  // always examine the matrices of g and g^-1 on every summand
};

// g V_Z = V_Z. Summands are examined smallest first; the first escaping
// lattice basis vector is returned as witness.
StabilizerReport stabilizes(GroupElement const& g, AdmissibleLattice const& lattice,
                            StabilizeMode mode = StabilizeMode::Auto);

// Positive roots in an order: indices into the root system.
using RootOrder = std::vector<int>;
RootOrder height_order(RootSystem const& rs);
// alpha_i first, then the remaining positive roots in height order.
RootOrder simple_first_order(RootSystem const& rs, int i);

struct UnipotentCoords {
  RootOrder order;
  std::vector<Rational> t;  // t[k] belongs to order[k]

  Rational coord(int root) const;
  bool is_integral() const;
  Word word() const;  // prod chi_{order[k]}(t[k]), zero factors dropped
};

class NotUnipotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// u = prod_k chi_{order[k]}(t_k) for u in U(Q), computed on the working
// summand (faithful, so the coordinates are unique). Throws NotUnipotent
// when u is not upper unitriangular in the weight grading or the peeling
// leaves a nontrivial remainder.
UnipotentCoords unipotent_factorize(GroupElement const& u, RootOrder const& order = {});
// Same, for an explicit matrix on summand s.
UnipotentCoords unipotent_factorize_block(WeightModule const& module, int s, SparseMatrix const& u,
                                          RootOrder const& order);

// All factorization coordinates are integers. Its agreement with stabilizes()
// is the integrality theorem for U; `regular_summand` reports whether the
// module meets the theorem's hypothesis.
struct UnipotentIntegrality {
  bool integral = false;
  UnipotentCoords coords;
  bool regular_summand = false;
};
UnipotentIntegrality unipotent_integrality(GroupElement const& u);

// h = prod h_i(t_i) for an element acting by a scalar on every weight space.
// Throws std::domain_error when h is not of that form.
std::vector<Rational> toral_factorize(GroupElement const& h);

// M = gamma b with gamma in SL_2(Z) and b upper triangular. Integral M gives
// (M, I).
struct Sl2Iwasawa {
  Mat2 gamma;
  Mat2 b;
};
Sl2Iwasawa sl2_iwasawa(Mat2 const& m);

// g = gamma u h with gamma an integral word, u in U(Q) and h = prod h_i(t_i).
struct IwasawaDecomposition {
  Word gamma;
  UnipotentCoords u;        // height order
  std::vector<Rational> h;  // t_1 .. t_l

  Word b_word() const;     // u then h
  Word recomposed() const;  // gamma, u, h
};

class UnsupportedLetter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts chi_{+-alpha_i}, h_i and w_{alpha_i}; other letters throw
// UnsupportedLetter.
IwasawaDecomposition iwasawa_decompose(std::shared_ptr<WeightModule const> module, Word const& word);

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegralityVerdict {
  bool in_gz = false;
  Word certificate;                // integral word equal to g, when in_gz
  std::optional<Witness> witness;  // when not in_gz
  IwasawaDecomposition decomposition;
  std::vector<std::string> warnings;
};

// Decides g in G(Z) for g given by a word. Requires every fundamental weight
// to be a weight of the module (throws HypothesisViolation otherwise); warns
// when no summand has a regular highest weight.
IntegralityVerdict integrality_decide(std::shared_ptr<WeightModule const> module,
                                      AdmissibleLattice const& lattice, Word const& word);

// Constants of (chi_alpha(t), chi_beta(u)) = prod chi_{i alpha + j beta}(c_ij t^i u^j)
// for positive roots alpha != beta, product in height order.
struct CommutatorConstant {
  int i = 0;
  int j = 0;
  int root = -1;
  mpz_class c;
};
std::vector<CommutatorConstant> commutator_constants(std::shared_ptr<WeightModule const> module, int alpha,
                                                     int beta, std::vector<std::pair<Rational, Rational>> const& samples);

}  // namespace chevalley
