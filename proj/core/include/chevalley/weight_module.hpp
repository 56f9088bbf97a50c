#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "chevalley/lie_algebra.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/sparse_matrix.hpp"

namespace chevalley {

// Weight multiplicities of V^lambda by Freudenthal's formula.
std::map<IntVec, int> weights_and_mults(RootSystem const& rs, IntVec const& lambda);
// Weyl dimension formula.
mpz_class weyl_dimension(RootSystem const& rs, IntVec const& lambda);

struct WeightSpace {
  IntVec mu;
  int depth = 0;
  int offset = 0;  // first basis index, relative to the summand
  int mult = 0;
};

struct BasisLabel {
  int summand;
  IntVec mu;
  int index;  // position inside the weight space
};

// One irreducible summand V^lambda. The basis of every weight space is a
// Z-basis of V_Z = U_Z v_lambda, so the matrices of e_i and f_i are integral.
// Basis order: weight spaces by depth, highest weight first.
class IrreducibleBlock {
 public:
  IrreducibleBlock(LieAlgebra const& g, IntVec lambda);

  IntVec const& highest_weight() const { return lambda_; }
  int dim() const { return dim_; }
  std::vector<WeightSpace> const& spaces() const { return spaces_; }
  // Index into spaces() or -1.
  int space_index(IntVec const& mu) const;
  int space_of_basis(int k) const { return basis_space_[k]; }

  SparseMatrix const& e(int i) const { return action_[roots_->simple_root(i)]; }
  SparseMatrix const& f(int i) const { return action_[roots_->negative(roots_->simple_root(i))]; }
  SparseMatrix const& root_action(int root) const { return action_.at(root); }
  // x_root^m / m!; the zero matrix beyond the nilpotency degree.
  SparseMatrix const& divided_power(int root, int m) const;
  // Largest m with x_root^(m) nonzero.
  int max_power(int root) const;

 private:
  void ensure_powers(int root) const;

  std::shared_ptr<RootSystem const> roots_;
  IntVec lambda_;
  int dim_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<IntVec, int> space_lookup_;
  std::vector<int> basis_space_;
  std::vector<SparseMatrix> action_;

  struct PowerCache {
    std::mutex lock;
    std::vector<std::vector<SparseMatrix>> powers;
  };
  std::unique_ptr<PowerCache> cache_;
  SparseMatrix zero_;
};

// Finite direct sum of highest-weight modules, with exact block-diagonal
// action matrices. Summand s occupies basis indices
// [summand_offset(s), summand_offset(s) + block(s).dim()).
class WeightModule {
 public:
  WeightModule(std::shared_ptr<LieAlgebra const> g, std::vector<IntVec> highest_weights);

  // V^rho + V^omega_1 + ... + V^omega_l.
  static std::vector<IntVec> sc_default_weights(RootSystem const& rs);
  // The adjoint module V^theta.
  static std::vector<IntVec> adjoint_weights(RootSystem const& rs);

  LieAlgebra const& algebra() const { return *g_; }
  std::shared_ptr<LieAlgebra const> algebra_ptr() const { return g_; }
  RootSystem const& roots() const { return g_->roots(); }
  int rank() const { return g_->rank(); }

  int dim() const { return dim_; }
  int num_summands() const { return static_cast<int>(blocks_.size()); }
  IrreducibleBlock const& block(int s) const { return *blocks_[s]; }
  int summand_offset(int s) const { return offsets_[s]; }
  std::vector<IntVec> highest_weights() const;

  BasisLabel label(int k) const;
  IntVec const& weight_of(int k) const;
  int highest_weight_vector(int s) const { return offsets_[s]; }
  // Distinct weights with total multiplicity over all summands.
  std::map<IntVec, int> weight_multiplicities() const;

  // Full-module matrices (block diagonal), built on demand.
  SparseMatrix root_action(int root) const;
  SparseMatrix divided_power(int root, int m) const;
  SparseMatrix e(int i) const { return root_action(roots().simple_root(i)); }
  SparseMatrix f(int i) const { return root_action(roots().negative(roots().simple_root(i))); }
  // Diagonal matrix of binomial(<mu, h_i>, m).
  SparseMatrix binomial_h(int i, int m) const;
  // Diagonal matrix of <mu, h_i>.
  SparseMatrix h(int i) const { return binomial_h(i, 1); }

  // Every omega_i occurs as a weight; `missing` lists the absent indices.
  struct HypothesisReport {
    bool holds = false;
    std::vector<int> missing;
  };
  HypothesisReport check_fundamental_weights_hypothesis() const;
  bool has_regular_summand() const;
  // Summands whose action determines the action on every other summand: each
  // remaining highest weight is a sum of theirs, so that summand sits inside
  // a tensor product of determining ones. Two products of generators that
  // agree on these summands agree on the whole module.
  std::vector<int> const& determining_summands() const { return determining_; }
  // Smallest summand on which every root vector acts nontrivially, or -1.
  int working_summand() const { return working_; }
  bool is_faithful() const;

 private:
  std::shared_ptr<LieAlgebra const> g_;
  std::vector<std::unique_ptr<IrreducibleBlock>> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
  int working_ = -1;
  std::vector<int> determining_;
};

}  // namespace chevalley
