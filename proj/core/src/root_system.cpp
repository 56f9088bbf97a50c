#include "chevalley/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace chevalley {
namespace {

void link(std::vector<IntVec>& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

int height_of(IntVec const& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  CartanType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string digits(text.substr(1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 3) {
    throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  }
  t.rank = std::stoi(digits);
  bool ok = false;
  switch (t.series) {
    case 'A': ok = t.rank >= 1; break;
    case 'B':
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 3; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("invalid Cartan type '" + std::string(text) + "'");
  return t;
}

std::string CartanType::name() const { return std::string(1, series) + std::to_string(rank); }

std::vector<IntVec> cartan_matrix(CartanType type) {
  int const n = type.rank;
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unknown series");
  }
  return a;
}

RootSystem::RootSystem(CartanType type)
    : type_(type), rank_(type.rank), cartan_(cartan_matrix(type)) {
  CartanType::parse(type.name());  // validates the rank
  int const n = rank_;

  // Symmetrizer: (alpha_i, alpha_j) = A_ij d_j / 2, so A_ij d_j = A_ji d_i.
  std::vector<Rational> d(n);
  std::vector<bool> seen(n, false);
  d[0] = Rational(1);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (seen[j] || cartan_[i][j] == 0) continue;
      d[j] = d[i] * Rational(cartan_[j][i], cartan_[i][j]);
      seen[j] = true;
      queue.push_back(j);
    }
  }
  Rational smallest = *std::min_element(d.begin(), d.end());
  simple_lengths_.resize(n);
  for (int i = 0; i < n; ++i) simple_lengths_[i] = static_cast<int>(*(d[i] / smallest).to_int64());

  // Positive roots, level by level.
  std::vector<IntVec> positive;
  std::map<IntVec, int> known;
  std::vector<IntVec> level;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    level.push_back(e);
  }
  while (!level.empty()) {
    for (auto const& r : level) {
      known.emplace(r, 0);
      positive.push_back(r);
    }
    std::vector<IntVec> next;
    for (auto const& beta : level) {
      for (int i = 0; i < n; ++i) {
        if (height_of(beta) == 1 && beta[i] == 1) continue;
        int q = 0;
        IntVec probe = beta;
        while (true) {
          probe[i] -= 1;
          if (!known.count(probe)) break;
          ++q;
        }
        if (q - pairing(beta, i) > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (!known.count(up) && std::find(next.begin(), next.end(), up) == next.end())
            next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(positive.begin(), positive.end(), [](IntVec const& x, IntVec const& y) {
    int hx = height_of(x);
    int hy = height_of(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  num_positive_ = static_cast<int>(positive.size());
  roots_ = positive;
  for (auto const& r : positive) {
    IntVec neg = r;
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  for (int k = 0; k < num_roots(); ++k) index_[roots_[k]] = k;

  simple_index_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    simple_index_[i] = index_.at(e);
  }

  lengths_.resize(num_roots());
  coroots_.resize(num_roots());
  for (int k = 0; k < num_roots(); ++k) {
    Rational len = length_of(roots_[k]);
    lengths_[k] = static_cast<int>(*len.to_int64());
    IntVec c(n);
    for (int i = 0; i < n; ++i) {
      Rational ci = Rational(roots_[k][i] * simple_lengths_[i], lengths_[k]);
      if (!ci.is_integer()) throw std::logic_error("non-integral coroot coordinate");
      c[i] = static_cast<int>(*ci.to_int64());
    }
    coroots_[k] = c;
  }

  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rational(cartan_[i][j]);
  cartan_inverse_ = *inverse(a);
}

int RootSystem::simple_of(int k) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_index_[i] == k) return i;
  return -1;
}

std::optional<int> RootSystem::find_root(IntVec const& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::root_index(IntVec const& coords) const {
  auto k = find_root(coords);
  if (!k) throw std::invalid_argument("not a root");
  return *k;
}

int RootSystem::height(int k) const { return height_of(roots_[k]); }

Rational RootSystem::inner(IntVec const& x, IntVec const& y) const {
  Rational total;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      total += Rational(x[i] * y[j] * cartan_[i][j] * simple_lengths_[j]);
    }
  }
  return total / Rational(2);
}

Rational RootSystem::length_of(IntVec const& coords) const { return inner(coords, coords); }

int RootSystem::pairing(IntVec const& beta, int j) const {
  int total = 0;
  for (int i = 0; i < rank_; ++i) total += beta[i] * cartan_[i][j];
  return total;
}

IntVec RootSystem::to_weight(IntVec const& beta) const {
  IntVec mu(rank_);
  for (int j = 0; j < rank_; ++j) mu[j] = pairing(beta, j);
  return mu;
}

int RootSystem::weight_pairing(IntVec const& mu, int k) const {
  int total = 0;
  for (int i = 0; i < rank_; ++i) total += coroots_[k][i] * mu[i];
  return total;
}

IntVec RootSystem::reflect_root(IntVec const& beta, int k) const {
  int n = weight_pairing(to_weight(beta), k);
  IntVec out = beta;
  for (int i = 0; i < rank_; ++i) out[i] -= n * roots_[k][i];
  return out;
}

IntVec RootSystem::reflect_weight(IntVec const& mu, int k) const {
  int n = weight_pairing(mu, k);
  IntVec alpha = root_as_weight(k);
  IntVec out = mu;
  for (int i = 0; i < rank_; ++i) out[i] -= n * alpha[i];
  return out;
}

IntVec RootSystem::apply_word_to_root(WeylWord const& w, IntVec beta) const {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    beta = reflect_root(beta, simple_index_.at(*it));
  return beta;
}

IntVec RootSystem::apply_word_to_weight(WeylWord const& w, IntVec mu) const {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    mu = reflect_weight(mu, simple_index_.at(*it));
  return mu;
}

ExpressedRoot RootSystem::express_root(int k) const {
  if (!is_positive(k)) throw std::invalid_argument("express_root: root must be positive");
  ExpressedRoot best{-1, {}};
  std::size_t best_len = 0;
  for (int source = 0; source < rank_; ++source) {
    // Breadth-first search over the orbit of alpha_source.
    std::vector<int> parent(num_roots(), -2);
    std::vector<int> via(num_roots(), -1);
    int start = simple_index_[source];
    parent[start] = -1;
    std::deque<int> queue{start};
    while (!queue.empty() && parent[k] == -2) {
      int cur = queue.front();
      queue.pop_front();
      for (int i = 0; i < rank_; ++i) {
        int nxt = index_.at(reflect_root(roots_[cur], simple_index_[i]));
        if (parent[nxt] != -2) continue;
        parent[nxt] = cur;
        via[nxt] = i;
        queue.push_back(nxt);
      }
    }
    if (parent[k] == -2) continue;
    std::vector<int> letters;
    for (int cur = k; cur != start; cur = parent[cur]) letters.push_back(via[cur]);
    // letters[0] is the last reflection applied, i.e. the leftmost letter.
    if (best.simple < 0 || letters.size() <= best_len) {
      best = {source, {letters}};
      best_len = letters.size();
    }
  }
  return best;
}

std::optional<int> RootSystem::sum(int alpha, int beta) const {
  IntVec s = roots_[alpha];
  for (int i = 0; i < rank_; ++i) s[i] += roots_[beta][i];
  return find_root(s);
}

int RootSystem::p_chain(int alpha, int beta) const {
  if (alpha == beta || alpha == negative(beta))
    throw std::invalid_argument("p_chain: beta = +-alpha");
  int p = 0;
  IntVec cur = roots_[beta];
  while (true) {
    for (int i = 0; i < rank_; ++i) cur[i] += roots_[alpha][i];
    if (!find_root(cur)) return p;
    ++p;
  }
}

int RootSystem::string_down(int alpha, int beta) const {
  if (alpha == beta || alpha == negative(beta))
    throw std::invalid_argument("string_down: beta = +-alpha");
  int r = 0;
  IntVec cur = roots_[beta];
  while (true) {
    for (int i = 0; i < rank_; ++i) cur[i] -= roots_[alpha][i];
    if (!find_root(cur)) return r;
    ++r;
  }
}

std::vector<Rational> RootSystem::weight_in_root_coords(IntVec const& mu) const {
  std::vector<Rational> x(rank_);
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      if (mu[i] != 0) x[j] += Rational(mu[i]) * cartan_inverse_(i, j);
  return x;
}

int RootSystem::depth(IntVec const& mu, IntVec const& lambda) const {
  IntVec diff(rank_);
  for (int i = 0; i < rank_; ++i) diff[i] = lambda[i] - mu[i];
  auto coords = weight_in_root_coords(diff);
  int total = 0;
  for (auto const& c : coords) {
    if (!c.is_integer() || c.sign() < 0)
      throw std::invalid_argument("depth: lambda - mu is not in Q+");
    total += static_cast<int>(*c.to_int64());
  }
  return total;
}

IntVec RootSystem::fundamental_weight(int i) const {
  IntVec w(rank_, 0);
  w[i] = 1;
  return w;
}

IntVec RootSystem::dominant_conjugate(IntVec mu) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      if (mu[i] < 0) {
        mu = reflect_weight(mu, simple_index_[i]);
        changed = true;
      }
    }
  }
  return mu;
}

Rational RootSystem::weight_inner(IntVec const& mu, IntVec const& nu) const {
  // mu = sum_j x_j alpha_j and (alpha_j, nu) = <nu, h_j> (alpha_j, alpha_j) / 2.
  auto x = weight_in_root_coords(mu);
  Rational total;
  for (int j = 0; j < rank_; ++j)
    if (nu[j] != 0) total += x[j] * Rational(nu[j] * simple_lengths_[j], 2);
  return total;
}

std::vector<mpz_class> RootSystem::fundamental_group() const {
  IntMatrix a(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) a(i, j) = cartan_[i][j];
  std::vector<mpz_class> out;
  for (auto const& f : smith_invariant_factors(a))
    if (f != 1) out.push_back(f);
  return out;
}

WeightLattice RootSystem::weight_lattice_of_module(std::vector<IntVec> const& highest_weights) const {
  if (highest_weights.empty()) throw std::invalid_argument("weight lattice: empty weight list");
  RatMatrix gens(rank_ + highest_weights.size(), rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gens(i, j) = Rational(cartan_[i][j]);
  for (std::size_t k = 0; k < highest_weights.size(); ++k) {
    auto const& lam = highest_weights[k];
    if (static_cast<int>(lam.size()) != rank_) throw std::invalid_argument("weight has wrong rank");
    for (int j = 0; j < rank_; ++j) {
      if (lam[j] < 0) throw std::invalid_argument("weight lattice: weight not dominant");
      gens(rank_ + k, j) = Rational(lam[j]);
    }
  }
  WeightLattice out;
  out.basis = hermite_normal_form(gens);
  Rational det = determinant(out.basis);
  out.index_in_p = det.abs().numerator();
  out.dual_basis = inverse(out.basis)->transpose();
  return out;
}

}  // namespace chevalley
