#include "chevalley/weight_module.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace chevalley {
namespace {

bool is_dominant(IntVec const& mu) {
  return std::all_of(mu.begin(), mu.end(), [](int c) { return c >= 0; });
}

IntVec add_scaled(IntVec v, IntVec const& w, int k) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * w[i];
  return v;
}

// lambda - mu in Q^+ ?
bool below(RootSystem const& rs, IntVec const& mu, IntVec const& lambda) {
  IntVec diff = add_scaled(lambda, mu, -1);
  for (auto const& c : rs.weight_in_root_coords(diff))
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

std::vector<Rational> dense_column(RatMatrix const& m, int c) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

std::vector<Rational> multiply(RatMatrix const& m, std::vector<Rational> const& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!v[c].is_zero() && !m(r, c).is_zero()) Rational::fused_multiply_add(out[r], m(r, c), v[c]);
  return out;
}

// target = sum of nonnegative multiples of gens[k], k >= from?
bool in_monoid(IntVec const& target, std::vector<IntVec> const& gens, std::size_t from) {
  if (std::all_of(target.begin(), target.end(), [](int c) { return c == 0; })) return true;
  for (std::size_t k = from; k < gens.size(); ++k) {
    IntVec rest = add_scaled(target, gens[k], -1);
    if (std::all_of(rest.begin(), rest.end(), [](int c) { return c >= 0; }) &&
        in_monoid(rest, gens, k))
      return true;
  }
  return false;
}

}  // namespace

std::map<IntVec, int> weights_and_mults(RootSystem const& rs, IntVec const& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank() || !is_dominant(lambda))
    throw std::invalid_argument("weights_and_mults: weight is not dominant");
  IntVec lam_rho = add_scaled(lambda, rs.rho(), 1);
  Rational const top = rs.weight_inner(lam_rho, lam_rho);
  std::map<IntVec, int> mult{{lambda, 1}};
  std::vector<IntVec> level{lambda};
  while (!level.empty()) {
    std::set<IntVec> candidates;
    for (auto const& mu : level)
      for (int i = 0; i < rs.rank(); ++i)
        candidates.insert(add_scaled(mu, rs.root_as_weight(rs.simple_root(i)), -1));
    std::vector<IntVec> next;
    for (auto const& mu : candidates) {
      if (!below(rs, rs.dominant_conjugate(mu), lambda)) continue;
      Rational numerator;
      for (int a = 0; a < rs.num_positive(); ++a) {
        IntVec alpha = rs.root_as_weight(a);
        IntVec shifted = mu;
        while (true) {
          shifted = add_scaled(shifted, alpha, 1);
          auto it = mult.find(shifted);
          if (it == mult.end()) break;
          numerator += Rational(it->second) * rs.weight_inner(shifted, alpha);
        }
      }
      IntVec mu_rho = add_scaled(mu, rs.rho(), 1);
      Rational m = Rational(2) * numerator / (top - rs.weight_inner(mu_rho, mu_rho));
      if (!m.is_integer() || m.sign() <= 0) throw std::logic_error("Freudenthal: bad multiplicity");
      mult[mu] = static_cast<int>(*m.to_int64());
      next.push_back(mu);
    }
    level = std::move(next);
  }
  return mult;
}

mpz_class weyl_dimension(RootSystem const& rs, IntVec const& lambda) {
  IntVec lam_rho = add_scaled(lambda, rs.rho(), 1);
  Rational dim(1);
  for (int a = 0; a < rs.num_positive(); ++a)
    dim *= Rational(rs.weight_pairing(lam_rho, a), rs.weight_pairing(rs.rho(), a));
  return dim.numerator();
}

IrreducibleBlock::IrreducibleBlock(LieAlgebra const& g, IntVec lambda)
    : roots_(g.root_system()), lambda_(std::move(lambda)), cache_(std::make_unique<PowerCache>()) {
  RootSystem const& rs = *roots_;
  int const l = rs.rank();
  if (static_cast<int>(lambda_.size()) != l || !is_dominant(lambda_))
    throw std::invalid_argument("highest weight must be dominant with " + std::to_string(l) +
                                " coordinates");

  // Working data per weight space: e_j as a matrix V_mu -> V_{mu+alpha_j}
  // and f_i as a matrix V_mu -> V_{mu-alpha_i}, in the lattice bases.
  struct Space {
    IntVec mu;
    int depth;
    int mult;
    std::map<int, RatMatrix> e;
    std::map<int, RatMatrix> f;
  };
  std::vector<Space> spaces;
  std::map<IntVec, int> lookup;
  std::vector<IntVec> alpha(l);
  for (int i = 0; i < l; ++i) alpha[i] = rs.root_as_weight(rs.simple_root(i));

  auto find = [&](IntVec const& mu) -> Space* {
    auto it = lookup.find(mu);
    return it == lookup.end() ? nullptr : &spaces[it->second];
  };

  // f_i^(n) applied to v in V_x; nullopt when the result is forced to vanish.
  auto apply_f_power = [&](int i, int n, IntVec x,
                           std::vector<Rational> v) -> std::optional<std::vector<Rational>> {
    for (int k = 0; k < n; ++k) {
      Space* s = find(x);
      if (s == nullptr) return std::nullopt;
      auto it = s->f.find(i);
      if (it == s->f.end()) return std::nullopt;
      v = multiply(it->second, v);
      x = add_scaled(x, alpha[i], -1);
    }
    Rational fact(1);
    for (int k = 2; k <= n; ++k) fact *= Rational(k);
    if (n > 1) {
      Rational inv = fact.inverse();
      for (auto& c : v) c *= inv;
    }
    return v;
  };

  spaces.push_back({lambda_, 0, 1, {}, {}});
  lookup[lambda_] = 0;
  std::vector<IntVec> level{lambda_};
  int depth = 0;
  while (!level.empty()) {
    ++depth;
    std::set<IntVec, std::greater<>> candidates;
    for (auto const& nu : level)
      for (int i = 0; i < l; ++i) candidates.insert(add_scaled(nu, alpha[i], -1));
    std::vector<IntVec> next;
    for (auto const& mu : candidates) {
      // Coordinates of the image E(v) = (e_1 v, ..., e_l v).
      std::vector<int> seg_offset(l, -1);
      int total = 0;
      for (int j = 0; j < l; ++j) {
        if (Space* up = find(add_scaled(mu, alpha[j], 1))) {
          seg_offset[j] = total;
          total += up->mult;
        }
      }
      if (total == 0) continue;

      std::vector<std::vector<Rational>> rows;
      // Generators f_i w, w running over the basis of V_{mu+alpha_i}; kept to
      // read off the matrix of f_i afterwards.
      std::map<int, std::pair<std::size_t, int>> first_rows;
      for (int i = 0; i < l; ++i) {
        for (int n = 1;; ++n) {
          IntVec nu = add_scaled(mu, alpha[i], n);
          Space* src = find(nu);
          if (src == nullptr) break;
          int const hnu = nu[i];
          if (n == 1) first_rows[i] = {rows.size(), src->mult};
          for (int k = 0; k < src->mult; ++k) {
            std::vector<Rational> row(total);
            for (int j = 0; j < l; ++j) {
              if (seg_offset[j] < 0) continue;
              std::vector<Rational> seg(find(add_scaled(mu, alpha[j], 1))->mult);
              // e_j f_i^(n) w = f_i^(n) e_j w (+ f_i^(n-1) (h_i - n + 1) w when j = i).
              if (auto it = src->e.find(j); it != src->e.end()) {
                auto v = apply_f_power(i, n, add_scaled(nu, alpha[j], 1), dense_column(it->second, k));
                if (v) seg = std::move(*v);
              }
              if (j == i && hnu - n + 1 != 0) {
                std::vector<Rational> w(src->mult);
                w[k] = Rational(hnu - n + 1);
                auto v = apply_f_power(i, n - 1, nu, w);
                if (v)
                  for (std::size_t c = 0; c < seg.size(); ++c) seg[c] += (*v)[c];
              }
              for (std::size_t c = 0; c < seg.size(); ++c) row[seg_offset[j] + c] = seg[c];
            }
            rows.push_back(std::move(row));
          }
        }
      }
      RatMatrix gens(rows.size(), total);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < total; ++c) gens(r, c) = rows[r][c];
      RatMatrix basis = hermite_normal_form(gens);
      int const mult = static_cast<int>(basis.rows());
      if (mult == 0) continue;
      for (std::size_t r = 0; r < basis.rows(); ++r)
        for (int c = 0; c < total; ++c)
          if (!basis(r, c).is_integer()) throw std::logic_error("lattice basis image not integral");

      Space space{mu, depth, mult, {}, {}};
      for (int j = 0; j < l; ++j) {
        if (seg_offset[j] < 0) continue;
        int rows_j = find(add_scaled(mu, alpha[j], 1))->mult;
        RatMatrix ej(rows_j, mult);
        for (int k = 0; k < mult; ++k)
          for (int c = 0; c < rows_j; ++c) ej(c, k) = basis(k, seg_offset[j] + c);
        space.e[j] = std::move(ej);
      }
      spaces.push_back(std::move(space));
      lookup[mu] = static_cast<int>(spaces.size()) - 1;
      next.push_back(mu);

      for (auto const& [i, info] : first_rows) {
        auto [start, count] = info;
        RatMatrix fi(mult, count);
        for (int k = 0; k < count; ++k) {
          auto coords = coordinates_in_echelon_basis(basis, rows[start + k]);
          if (!coords) throw std::logic_error("f_i image outside the weight space");
          for (int r = 0; r < mult; ++r) {
            if (!(*coords)[r].is_integer()) throw std::logic_error("f_i not integral on lattice");
            fi(r, k) = (*coords)[r];
          }
        }
        find(add_scaled(mu, alpha[i], 1))->f[i] = std::move(fi);
      }
    }
    level = std::move(next);
  }

  // Lay out the basis.
  spaces_.reserve(spaces.size());
  for (auto const& s : spaces) {
    space_lookup_[s.mu] = static_cast<int>(spaces_.size());
    spaces_.push_back({s.mu, s.depth, dim_, s.mult});
    for (int k = 0; k < s.mult; ++k) basis_space_.push_back(static_cast<int>(spaces_.size()) - 1);
    dim_ += s.mult;
  }

  action_.assign(rs.num_roots(), SparseMatrix(dim_, dim_));
  for (int i = 0; i < l; ++i) {
    SparseMatrix e(dim_, dim_);
    SparseMatrix f(dim_, dim_);
    for (auto const& s : spaces) {
      int col0 = spaces_[space_lookup_.at(s.mu)].offset;
      if (auto it = s.e.find(i); it != s.e.end()) {
        int row0 = spaces_[space_lookup_.at(add_scaled(s.mu, alpha[i], 1))].offset;
        for (std::size_t r = 0; r < it->second.rows(); ++r)
          for (std::size_t c = 0; c < it->second.cols(); ++c)
            if (!it->second(r, c).is_zero()) e.set(row0 + r, col0 + c, it->second(r, c));
      }
      if (auto it = s.f.find(i); it != s.f.end()) {
        int row0 = spaces_[space_lookup_.at(add_scaled(s.mu, alpha[i], -1))].offset;
        for (std::size_t r = 0; r < it->second.rows(); ++r)
          for (std::size_t c = 0; c < it->second.cols(); ++c)
            if (!it->second(r, c).is_zero()) f.set(row0 + r, col0 + c, it->second(r, c));
      }
    }
    action_[rs.simple_root(i)] = std::move(e);
    action_[rs.negative(rs.simple_root(i))] = std::move(f);
  }
  // x_xi = [x_alpha', x_beta'] / N(alpha', beta') along extraspecial pairs, and
  // likewise for the negative roots.
  for (int xi = 0; xi < rs.num_positive(); ++xi) {
    if (rs.simple_of(xi) >= 0) continue;
    auto [a, b] = g.extraspecial_pair(xi);
    SparseMatrix pos = commutator(action_[a], action_[b]);
    pos *= Rational(1, g.structure_constant(a, b));
    action_[xi] = std::move(pos);
    int na = rs.negative(a), nb = rs.negative(b);
    SparseMatrix neg = commutator(action_[na], action_[nb]);
    neg *= Rational(1, g.structure_constant(na, nb));
    action_[rs.negative(xi)] = std::move(neg);
  }
  zero_ = SparseMatrix(dim_, dim_);
  cache_->powers.resize(rs.num_roots());
}

int IrreducibleBlock::space_index(IntVec const& mu) const {
  auto it = space_lookup_.find(mu);
  return it == space_lookup_.end() ? -1 : it->second;
}

void IrreducibleBlock::ensure_powers(int root) const {
  auto& slot = cache_->powers.at(root);
  if (!slot.empty()) return;
  std::vector<SparseMatrix> powers;
  powers.push_back(SparseMatrix::identity(dim_));
  SparseMatrix const& x = action_[root];
  for (int m = 1;; ++m) {
    SparseMatrix next = powers.back() * x;
    next *= Rational(1, m);
    if (next.is_zero()) break;
    powers.push_back(std::move(next));
  }
  slot = std::move(powers);
}

SparseMatrix const& IrreducibleBlock::divided_power(int root, int m) const {
  if (m < 0) throw std::invalid_argument("divided_power: negative exponent");
  std::lock_guard<std::mutex> guard(cache_->lock);
  ensure_powers(root);
  auto const& slot = cache_->powers[root];
  if (m >= static_cast<int>(slot.size())) return zero_;
  return slot[m];
}

int IrreducibleBlock::max_power(int root) const {
  std::lock_guard<std::mutex> guard(cache_->lock);
  ensure_powers(root);
  return static_cast<int>(cache_->powers[root].size()) - 1;
}

WeightModule::WeightModule(std::shared_ptr<LieAlgebra const> g, std::vector<IntVec> highest_weights)
    : g_(std::move(g)) {
  if (highest_weights.empty()) throw std::invalid_argument("module needs at least one summand");
  bool nonzero = false;
  for (auto const& lam : highest_weights) {
    if (static_cast<int>(lam.size()) != rank() || !is_dominant(lam))
      throw std::invalid_argument("highest weights must be dominant with " +
                                  std::to_string(rank()) + " coordinates");
    if (std::any_of(lam.begin(), lam.end(), [](int c) { return c != 0; })) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("module is trivial (all highest weights zero)");
  for (auto& lam : highest_weights) {
    offsets_.push_back(dim_);
    blocks_.push_back(std::make_unique<IrreducibleBlock>(*g_, lam));
    dim_ += blocks_.back()->dim();
  }
  int best_dim = 0;
  for (int s = 0; s < num_summands(); ++s) {
    bool faithful = true;
    for (int r = 0; r < roots().num_roots() && faithful; ++r)
      if (blocks_[s]->root_action(r).is_zero()) faithful = false;
    if (faithful && (working_ < 0 || blocks_[s]->dim() < best_dim)) {
      working_ = s;
      best_dim = blocks_[s]->dim();
    }
  }
  std::vector<int> order(num_summands());
  for (int s = 0; s < num_summands(); ++s) order[s] = s;
  auto height = [](IntVec const& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return height(blocks_[a]->highest_weight()) < height(blocks_[b]->highest_weight());
  });
  std::vector<IntVec> kept;
  for (int s : order) {
    auto const& lam = blocks_[s]->highest_weight();
    if (in_monoid(lam, kept, 0)) continue;
    kept.push_back(lam);
    determining_.push_back(s);
  }
  std::sort(determining_.begin(), determining_.end());
}

std::vector<IntVec> WeightModule::sc_default_weights(RootSystem const& rs) {
  std::vector<IntVec> out{rs.rho()};
  for (int i = 0; i < rs.rank(); ++i) out.push_back(rs.fundamental_weight(i));
  return out;
}

std::vector<IntVec> WeightModule::adjoint_weights(RootSystem const& rs) {
  return {rs.root_as_weight(rs.highest_root())};
}

std::vector<IntVec> WeightModule::highest_weights() const {
  std::vector<IntVec> out;
  for (auto const& b : blocks_) out.push_back(b->highest_weight());
  return out;
}

BasisLabel WeightModule::label(int k) const {
  int s = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), k) - offsets_.begin()) - 1;
  auto const& block = *blocks_.at(s);
  int local = k - offsets_[s];
  auto const& space = block.spaces()[block.space_of_basis(local)];
  return {s, space.mu, local - space.offset};
}

IntVec const& WeightModule::weight_of(int k) const {
  int s = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), k) - offsets_.begin()) - 1;
  auto const& block = *blocks_.at(s);
  return block.spaces()[block.space_of_basis(k - offsets_[s])].mu;
}

std::map<IntVec, int> WeightModule::weight_multiplicities() const {
  std::map<IntVec, int> out;
  for (auto const& b : blocks_)
    for (auto const& s : b->spaces()) out[s.mu] += s.mult;
  return out;
}

SparseMatrix WeightModule::root_action(int root) const {
  std::vector<SparseMatrix> parts;
  for (auto const& b : blocks_) parts.push_back(b->root_action(root));
  return SparseMatrix::direct_sum(parts);
}

SparseMatrix WeightModule::divided_power(int root, int m) const {
  std::vector<SparseMatrix> parts;
  for (auto const& b : blocks_) parts.push_back(b->divided_power(root, m));
  return SparseMatrix::direct_sum(parts);
}

SparseMatrix WeightModule::binomial_h(int i, int m) const {
  if (m < 0) throw std::invalid_argument("binomial_h: negative m");
  std::vector<Rational> diag(dim_);
  for (int k = 0; k < dim_; ++k) diag[k] = binomial(weight_of(k)[i], m);
  return SparseMatrix::diagonal(diag);
}

WeightModule::HypothesisReport WeightModule::check_fundamental_weights_hypothesis() const {
  HypothesisReport report;
  auto weights = weight_multiplicities();
  for (int i = 0; i < rank(); ++i)
    if (!weights.count(roots().fundamental_weight(i))) report.missing.push_back(i);
  report.holds = report.missing.empty();
  return report;
}

bool WeightModule::has_regular_summand() const {
  for (auto const& b : blocks_) {
    auto const& lam = b->highest_weight();
    if (std::all_of(lam.begin(), lam.end(), [](int c) { return c > 0; })) return true;
  }
  return false;
}

bool WeightModule::is_faithful() const {
  for (int r = 0; r < roots().num_roots(); ++r) {
    bool acts = false;
    for (auto const& b : blocks_)
      if (!b->root_action(r).is_zero()) acts = true;
    if (!acts) return false;
  }
  return true;
}

}  // namespace chevalley
