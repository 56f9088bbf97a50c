#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

using IntVec = std::vector<int>;

struct CartanType {
  char series = 'A';
  int rank = 1;

  // "A2", "g2", "D4", ... Throws std::invalid_argument on bad input.
  static CartanType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(CartanType const&, CartanType const&) = default;
};

// Cartan matrix with A(i, j) = <alpha_i, h_j> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j),
// Bourbaki numbering. For G2 this makes alpha_1 the short root; for B_n
// alpha_n is short, for C_n alpha_n is long, for F4 alpha_1, alpha_2 are long.
std::vector<IntVec> cartan_matrix(CartanType type);

// Weyl word w = s_{letters[0]} s_{letters[1]} ... acting on the left, so
// the last letter is applied first.
struct WeylWord {
  std::vector<int> letters;
};

struct ExpressedRoot {
  int simple;  // alpha = w . alpha_simple
  WeylWord word;
};

struct WeightLattice {
  // Rows: Z-basis of L_V in fundamental-weight coordinates (HNF).
  RatMatrix basis;
  // Rows: Z-basis of L_V^* in coroot coordinates (coefficients on h_1..h_l).
  RatMatrix dual_basis;
  // [P : L_V].
  mpz_class index_in_p;
};

// Root system of a simple Lie algebra. Roots are indexed 0..2N-1: indices
// below N are the positive roots in height order (ties broken by
// decreasing lexicographic order of the simple-root coordinates, so alpha_1
// precedes alpha_2), and index N + k is the negative of root k.
//
// Roots are stored in simple-root coordinates; weights in fundamental-weight
// coordinates (entry i is <mu, h_i>).
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::vector<IntVec> const& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }
  IntVec const& root(int k) const { return roots_[k]; }
  bool is_positive(int k) const { return k < num_positive_; }
  int negative(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }
  int simple_root(int i) const { return simple_index_[i]; }
  // Index of the simple root when k is simple, otherwise -1.
  int simple_of(int k) const;
  std::optional<int> find_root(IntVec const& coords) const;
  int root_index(IntVec const& coords) const;  // throws when not a root
  int highest_root() const { return num_positive_ - 1; }

  int height(int k) const;
  // Squared length relative to the short roots (short roots have length 1).
  int length(int k) const { return lengths_[k]; }
  // Squared length of an arbitrary element of the root lattice, same scale.
  Rational length_of(IntVec const& coords) const;
  // Symmetric bilinear form on the root lattice, same scale as length().
  Rational inner(IntVec const& x, IntVec const& y) const;

  // <beta, h_j> for beta in simple-root coordinates.
  int pairing(IntVec const& beta, int j) const;
  // Root (or any element of Q) converted to fundamental-weight coordinates.
  IntVec to_weight(IntVec const& beta) const;
  IntVec root_as_weight(int k) const { return to_weight(roots_[k]); }
  // h_alpha = sum_i c_i h_i.
  IntVec const& coroot(int k) const { return coroots_[k]; }
  // <mu, h_alpha> for a weight mu.
  int weight_pairing(IntVec const& mu, int k) const;

  IntVec reflect_root(IntVec const& beta, int k) const;
  IntVec reflect_weight(IntVec const& mu, int k) const;
  IntVec apply_word_to_root(WeylWord const& w, IntVec beta) const;
  IntVec apply_word_to_weight(WeylWord const& w, IntVec mu) const;

  // alpha = w . alpha_i with w a shortest (hence reduced) word.
  ExpressedRoot express_root(int k) const;

  // Largest p with beta + k alpha a root for 0 <= k <= p.
  int p_chain(int alpha, int beta) const;
  // Largest r with beta - k alpha a root for 0 <= k <= r.
  int string_down(int alpha, int beta) const;
  // Index of alpha + beta when it is a root.
  std::optional<int> sum(int alpha, int beta) const;

  // Fundamental-weight coordinates -> simple-root coordinates (rational).
  std::vector<Rational> weight_in_root_coords(IntVec const& mu) const;
  // lambda - mu in Q^+ expressed as sum n_i; throws std::invalid_argument otherwise.
  int depth(IntVec const& mu, IntVec const& lambda) const;
  IntVec rho() const { return IntVec(rank_, 1); }
  IntVec fundamental_weight(int i) const;
  // Dominant Weyl conjugate of a weight.
  IntVec dominant_conjugate(IntVec mu) const;
  Rational weight_inner(IntVec const& mu, IntVec const& nu) const;

  // Invariant factors of P/Q, trivial factors dropped.
  std::vector<mpz_class> fundamental_group() const;
  WeightLattice weight_lattice_of_module(std::vector<IntVec> const& highest_weights) const;

 private:
  CartanType type_;
  int rank_;
  std::vector<IntVec> cartan_;
  std::vector<int> simple_lengths_;
  std::vector<IntVec> roots_;
  std::vector<int> lengths_;
  std::vector<IntVec> coroots_;
  std::vector<int> simple_index_;
  std::map<IntVec, int> index_;
  int num_positive_ = 0;
  RatMatrix cartan_inverse_;
};

}  // namespace chevalley
