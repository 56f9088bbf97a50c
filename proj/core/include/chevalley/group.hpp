#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/sparse_matrix.hpp"
#include "chevalley/weight_module.hpp"

namespace chevalley {

// One generator of G(Q) acting on a WeightModule.
struct Letter {
  enum class Kind { Chi, Torus, Coweight, WeylLift };
  Kind kind = Kind::Chi;
  int root = -1;                    // Chi, WeylLift
  int index = -1;                   // Torus: simple index i of h_i(t)
  std::vector<Rational> coweight;   // Coweight: coordinates on h_1..h_l
  Rational param;                   // t for Chi/Torus/Coweight, s for WeylLift

  static Letter chi(int root, Rational t);
  static Letter torus(int i, Rational t);
  static Letter coweight_torus(std::vector<Rational> coweight, Rational t);
  static Letter wtilde(int root, Rational s);

  Letter inverse() const;
  // Integral generators of G(Z): Chi with t in Z, torus and Weyl lifts with
  // parameter +-1.
  bool is_integral() const;
  friend bool operator==(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

Word inverse_word(Word const& w);
bool is_integral_word(Word const& w);
// Merges neighbouring letters of one root subgroup or one h_i and drops
// trivial letters. The element is unchanged.
Word simplify_word(Word const& w);

// Matrix of one letter on summand s of the module.
SparseMatrix letter_block(WeightModule const& module, int s, Letter const& letter);
// Matrix of a word on summand s (product left to right).
SparseMatrix evaluate_block(WeightModule const& module, int s, Word const& word);

// Element of G(Q) realised on a module. Elements built from words evaluate
// their per-summand matrices lazily; elements built from matrices carry them
// explicitly. Copies share the cache.
class GroupElement {
 public:
  GroupElement(std::shared_ptr<WeightModule const> module, Word word);
  static GroupElement identity(std::shared_ptr<WeightModule const> module);
  // Matrix-only element, one block per summand. Throws when singular.
  static GroupElement from_blocks(std::shared_ptr<WeightModule const> module,
                                  std::vector<SparseMatrix> blocks);

  WeightModule const& module() const { return *module_; }
  std::shared_ptr<WeightModule const> module_ptr() const { return module_; }
  std::optional<Word> const& word() const { return word_; }

  SparseMatrix const& block(int s) const;
  SparseMatrix const& inverse_block(int s) const;
  // Full block-diagonal matrix; expensive on large modules.
  SparseMatrix matrix() const;

  GroupElement inverse() const;
  friend GroupElement operator*(GroupElement const& a, GroupElement const& b);

  // Exact equality. When both sides come from words it suffices to compare
  // the determining summands of the module (see WeightModule); otherwise every
  // block is compared.
  bool equals(GroupElement const& other) const;

 private:
  GroupElement(std::shared_ptr<WeightModule const> module, std::optional<Word> word,
               std::vector<std::optional<SparseMatrix>> blocks);

  struct Cache {
    std::mutex lock;
    std::vector<std::optional<SparseMatrix>> blocks;
    std::vector<std::optional<SparseMatrix>> inverse_blocks;
  };

  std::shared_ptr<WeightModule const> module_;
  std::optional<Word> word_;
  std::shared_ptr<Cache> cache_;
};

// Convenience constructors.
GroupElement chi(std::shared_ptr<WeightModule const> module, int root, Rational t);
GroupElement torus(std::shared_ptr<WeightModule const> module, int i, Rational t);
// h_varpi(t) for a coweight given in coroot coordinates; throws when some
// weight of the module pairs non-integrally with it.
GroupElement torus_coweight(std::shared_ptr<WeightModule const> module,
                            std::vector<Rational> coweight, Rational t);
GroupElement wtilde(std::shared_ptr<WeightModule const> module, int root, Rational s);

// 2x2 rational matrices for the rank-one computations.
using Mat2 = RatMatrix;
Mat2 mat2(Rational a, Rational b, Rational c, Rational d);

// Word in chi_{+-alpha_i} and h_i whose image under phi_i is M (det M = 1).
// Integral M gives an integral word (Euclid on the first column).
Word sl2_word(int rank_one_index, RootSystem const& rs, Mat2 const& m);
GroupElement sl2_embed(std::shared_ptr<WeightModule const> module, int i, Mat2 const& m);

}  // namespace chevalley
