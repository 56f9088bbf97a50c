#include "chevalley/integrality.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chevalley {
namespace {

std::vector<Rational> embed(WeightModule const& module, int s, std::vector<Rational> const& local) {
  std::vector<Rational> out(module.dim());
  std::copy(local.begin(), local.end(), out.begin() + module.summand_offset(s));
  return out;
}

// A lattice basis vector of summand s whose image under m escapes, if any.
std::optional<Witness> escaping_vector(WeightModule const& module, AdmissibleLattice const& lattice, int s,
                                       SparseMatrix const& m, bool inverse) {
  auto const& block = module.block(s);
  if (lattice.standard) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto const& e : m.row(r)) {
        if (e.value.is_integer()) continue;
        std::vector<Rational> v(block.dim());
        v[e.col] = 1;
        Witness w;
        w.summand = s;
        w.mu = block.spaces()[block.space_of_basis(static_cast<int>(e.col))].mu;
        w.vector = embed(module, s, v);
        w.image = embed(module, s, m.column(e.col));
        w.inverse = inverse;
        return w;
      }
    return std::nullopt;
  }
  for (auto const& v : lattice_block_basis(module, lattice, s)) {
    auto image = m.apply(v);
    if (lattice_contains_block(module, lattice, s, image)) continue;
    int k = 0;
    while (v[k].is_zero()) ++k;
    Witness w;
    w.summand = s;
    w.mu = block.spaces()[block.space_of_basis(k)].mu;
    w.vector = embed(module, s, v);
    w.image = embed(module, s, image);
    w.inverse = inverse;
    return w;
  }
  return std::nullopt;
}

std::vector<int> summands_by_size(WeightModule const& module) {
  std::vector<int> order(module.num_summands());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return module.block(a).dim() < module.block(b).dim(); });
  return order;
}

bool generators_preserve(WeightModule const& module, AdmissibleLattice const& lattice, Word const& word) {
  Word seen;
  for (auto const& letter : word) {
    if (std::find(seen.begin(), seen.end(), letter) != seen.end()) continue;
    seen.push_back(letter);
    for (int s : summands_by_size(module)) {
      if (escaping_vector(module, lattice, s, letter_block(module, s, letter), false)) return false;
      if (escaping_vector(module, lattice, s, letter_block(module, s, letter.inverse()), true)) return false;
    }
  }
  return true;
}

// Multiplier of x_root under conjugation by prod h_j(t_j).
Rational torus_character(RootSystem const& rs, std::vector<Rational> const& t, int root) {
  Rational out(1);
  auto w = rs.root_as_weight(root);
  for (int j = 0; j < rs.rank(); ++j)
    if (w[j] != 0) out *= t[j].pow(w[j]);
  return out;
}

SparseMatrix chi_on(WeightModule const& module, int s, int root, Rational t) {
  return letter_block(module, s, Letter::chi(root, std::move(t)));
}

void check_order(RootSystem const& rs, RootOrder const& order) {
  std::vector<bool> hit(rs.num_positive(), false);
  if (static_cast<int>(order.size()) != rs.num_positive()) throw std::invalid_argument("root order has the wrong length");
  for (int r : order) {
    if (r < 0 || r >= rs.num_positive() || hit[r]) throw std::invalid_argument("root order is not a permutation of the positive roots");
    hit[r] = true;
  }
}

mpz_class exact_root(mpz_class const& x, unsigned long n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) == 0) throw std::domain_error("toral_factorize: not a torus element");
  return r;
}

}  // namespace

StabilizerReport stabilizes(GroupElement const& g, AdmissibleLattice const& lattice, StabilizeMode mode) {
  auto const& module = g.module();
  StabilizerReport report;
  if (mode == StabilizeMode::Auto && g.word() && generators_preserve(module, lattice, *g.word())) {
    report.stabilizes = true;
    report.by_generators = true;
    return report;
  }
  for (int s : summands_by_size(module)) {
    if (auto w = escaping_vector(module, lattice, s, g.block(s), false)) {
      report.witness = std::move(w);
      return report;
    }
    if (auto w = escaping_vector(module, lattice, s, g.inverse_block(s), true)) {
      report.witness = std::move(w);
      return report;
    }
  }
  report.stabilizes = true;
  return report;
}

RootOrder height_order(RootSystem const& rs) {
  RootOrder order(rs.num_positive());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

RootOrder simple_first_order(RootSystem const& rs, int i) {
  int first = rs.simple_root(i);
  RootOrder order{first};
  for (int r = 0; r < rs.num_positive(); ++r)
    if (r != first) order.push_back(r);
  return order;
}

Rational UnipotentCoords::coord(int root) const {
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] == root) return t[k];
  throw std::invalid_argument("root not in the factorization order");
}

bool UnipotentCoords::is_integral() const {
  return std::all_of(t.begin(), t.end(), [](Rational const& x) { return x.is_integer(); });
}

Word UnipotentCoords::word() const {
  Word w;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (!t[k].is_zero()) w.push_back(Letter::chi(order[k], t[k]));
  return w;
}

UnipotentCoords unipotent_factorize_block(WeightModule const& module, int s, SparseMatrix const& u,
                                          RootOrder const& order_in) {
  auto const& rs = module.roots();
  auto const& block = module.block(s);
  RootOrder order = order_in.empty() ? height_order(rs) : order_in;
  check_order(rs, order);
  // Upper unitriangular with respect to the weight grading.
  std::map<std::pair<int, int>, bool> raises;
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (auto const& e : u.row(r)) {
      if (e.col == r) {
        if (!e.value.is_one()) throw NotUnipotent("diagonal entry different from 1");
        continue;
      }
      int sr = block.space_of_basis(static_cast<int>(r));
      int sc = block.space_of_basis(static_cast<int>(e.col));
      auto [it, fresh] = raises.try_emplace({sr, sc}, false);
      if (fresh) {
        IntVec diff = block.spaces()[sr].mu;
        auto const& from = block.spaces()[sc].mu;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= from[i];
        auto coords = rs.weight_in_root_coords(diff);
        bool positive = std::any_of(coords.begin(), coords.end(), [](Rational const& c) { return !c.is_zero(); });
        for (auto const& c : coords) positive = positive && c.is_integer() && c.sign() >= 0;
        it->second = positive;
      }
      if (!it->second) throw NotUnipotent("entry does not raise the weight by a positive root combination");
    }
  for (std::size_t r = 0; r < u.rows(); ++r)
    if (u.at(r, r) != Rational(1)) throw NotUnipotent("diagonal entry different from 1");

  UnipotentCoords out;
  out.order = order;
  SparseMatrix cur = u;
  for (int root : order) {
    auto const& x = block.root_action(root);
    std::size_t pr = 0;
    while (pr < x.rows() && x.row(pr).empty()) ++pr;
    if (pr == x.rows()) throw std::invalid_argument("summand is not faithful");
    auto const& pivot = x.row(pr).front();
    Rational t = cur.at(pr, pivot.col) / pivot.value;
    if (!t.is_zero()) cur = chi_on(module, s, root, -t) * cur;
    out.t.push_back(std::move(t));
  }
  if (!cur.is_identity()) throw NotUnipotent("element is not a product of positive root elements");
  return out;
}

UnipotentCoords unipotent_factorize(GroupElement const& u, RootOrder const& order) {
  auto const& module = u.module();
  int s = module.working_summand();
  if (s < 0) throw std::invalid_argument("module has no faithful summand");
  auto coords = unipotent_factorize_block(module, s, u.block(s), order);
  // The working summand may miss part of the centre; compare on the rest.
  if (!GroupElement(u.module_ptr(), coords.word()).equals(u))
    throw NotUnipotent("element differs from its factorization by a central element");
  return coords;
}

UnipotentIntegrality unipotent_integrality(GroupElement const& u) {
  UnipotentIntegrality out;
  out.coords = unipotent_factorize(u);
  out.integral = out.coords.is_integral();
  out.regular_summand = u.module().has_regular_summand();
  return out;
}

std::vector<Rational> toral_factorize(GroupElement const& h) {
  auto const& module = h.module();
  auto const& rs = module.roots();
  int l = rs.rank();
  std::map<IntVec, Rational> scalar;
  for (int s = 0; s < module.num_summands(); ++s) {
    auto const& block = module.block(s);
    auto const& m = h.block(s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto const& row = m.row(r);
      if (row.size() != 1 || row[0].col != r) throw std::domain_error("toral_factorize: element is not diagonal");
      auto const& mu = block.spaces()[block.space_of_basis(static_cast<int>(r))].mu;
      auto [it, fresh] = scalar.try_emplace(mu, row[0].value);
      if (!fresh && it->second != row[0].value)
        throw std::domain_error("toral_factorize: element is not a scalar on a weight space");
    }
  }
  // l independent weights, the fundamental ones when available.
  std::vector<IntVec> chosen;
  auto try_add = [&](IntVec const& mu) {
    if (static_cast<int>(chosen.size()) == l) return;
    RatMatrix m(chosen.size() + 1, l);
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (int c = 0; c < l; ++c) m(r, c) = chosen[r][c];
    for (int c = 0; c < l; ++c) m(chosen.size(), c) = mu[c];
    if (rank(m) == chosen.size() + 1) chosen.push_back(mu);
  };
  for (int i = 0; i < l; ++i)
    if (scalar.count(rs.fundamental_weight(i))) try_add(rs.fundamental_weight(i));
  for (auto const& [mu, value] : scalar) try_add(mu);
  if (static_cast<int>(chosen.size()) != l) throw std::domain_error("toral_factorize: weights do not span");

  RatMatrix x(l, l);
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) x(r, c) = chosen[r][c];
  Rational det = determinant(x);
  auto inv = inverse(x);
  long d = det.to_int64().value();
  unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
  // t_i^|D| = prod_k s_k^(sign(D) adj_ik) with adj = D x^-1.
  std::vector<Rational> magnitude(l);
  std::vector<bool> sign_free(l, false);
  std::vector<int> forced_sign(l, 1);
  for (int i = 0; i < l; ++i) {
    Rational power(1);
    for (int k = 0; k < l; ++k) {
      Rational adj = det * (*inv)(i, k);
      long e = adj.to_int64().value();
      if (d < 0) e = -e;
      power *= scalar.at(chosen[k]).pow(e);
    }
    if (n % 2 == 0 && power.sign() < 0) throw std::domain_error("toral_factorize: not a torus element");
    Rational a = power.abs();
    magnitude[i] = Rational(exact_root(a.numerator(), n), exact_root(a.denominator(), n));
    if (n % 2 == 0) {
      sign_free[i] = true;
    } else {
      forced_sign[i] = power.sign();
    }
  }
  std::vector<int> free_index;
  for (int i = 0; i < l; ++i)
    if (sign_free[i]) free_index.push_back(i);
  for (unsigned long mask = 0; mask < (1ul << free_index.size()); ++mask) {
    std::vector<Rational> t(l);
    for (int i = 0; i < l; ++i) t[i] = forced_sign[i] < 0 ? -magnitude[i] : magnitude[i];
    for (std::size_t b = 0; b < free_index.size(); ++b)
      if (mask & (1ul << b)) t[free_index[b]] = -t[free_index[b]];
    bool ok = true;
    for (auto const& [mu, value] : scalar) {
      Rational prod(1);
      for (int i = 0; i < l && ok; ++i)
        if (mu[i] != 0) prod *= t[i].pow(mu[i]);
      if (prod != value) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  throw std::domain_error("toral_factorize: not a torus element");
}

Sl2Iwasawa sl2_iwasawa(Mat2 const& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("sl2_iwasawa: 2x2 matrix expected");
  if (!(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_one())
    throw std::invalid_argument("sl2_iwasawa: determinant must be 1");
  bool integral = true;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) integral = integral && m(r, c).is_integer();
  if (integral) return {m, Mat2::identity(2)};
  // First column of gamma: the primitive integer vector along (p, r).
  Rational const& p = m(0, 0);
  Rational const& r = m(1, 0);
  mpz_class den = lcm(p.denominator(), r.denominator());
  mpz_class pn = p.numerator() * (den / p.denominator());
  mpz_class rn = r.numerator() * (den / r.denominator());
  mpz_class g = gcd(pn, rn);
  mpz_class a = pn / g, c = rn / g;
  // a d - b c = 1, with d reduced into [0, |c|) when c != 0.
  auto eg = extended_gcd(a, c);
  mpz_class d = eg.x, b = -eg.y;
  if (c != 0) {
    mpz_class ac = abs(c);
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), d.get_mpz_t(), ac.get_mpz_t());
    if (c < 0) k = -k;
    d -= k * c;
    b -= k * a;
  } else {
    d = a;
    b = 0;
  }
  Mat2 gamma = mat2(Rational(a), Rational(b), Rational(c), Rational(d));
  Mat2 gamma_inv = mat2(Rational(d), Rational(mpz_class(-b)), Rational(mpz_class(-c)), Rational(a));
  return {gamma, gamma_inv * m};
}

Word IwasawaDecomposition::b_word() const {
  Word w = u.word();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_one()) w.push_back(Letter::torus(static_cast<int>(i), h[i]));
  return w;
}

Word IwasawaDecomposition::recomposed() const {
  Word w = gamma;
  auto b = b_word();
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

IwasawaDecomposition iwasawa_decompose(std::shared_ptr<WeightModule const> module_ptr, Word const& word) {
  auto const& module = *module_ptr;
  auto const& rs = module.roots();
  int s = module.working_summand();
  if (s < 0) throw std::invalid_argument("module has no faithful summand");
  int l = rs.rank();

  // Expand Weyl lifts into root elements first.
  Word letters;
  for (auto const& letter : word) {
    if (letter.kind == Letter::Kind::WeylLift) {
      int neg = rs.negative(letter.root);
      letters.push_back(Letter::chi(letter.root, letter.param));
      letters.push_back(Letter::chi(neg, -letter.param.inverse()));
      letters.push_back(Letter::chi(letter.root, letter.param));
    } else {
      letters.push_back(letter);
    }
  }

  IwasawaDecomposition out;
  out.h.assign(l, Rational(1));
  SparseMatrix u = SparseMatrix::identity(module.block(s).dim());
  for (auto const& letter : letters) {
    switch (letter.kind) {
      case Letter::Kind::Torus:
        out.h.at(letter.index) *= letter.param;
        break;
      case Letter::Kind::Chi: {
        int i = rs.simple_of(rs.is_positive(letter.root) ? letter.root : rs.negative(letter.root));
        if (i < 0) throw UnsupportedLetter("only simple roots and their negatives are supported");
        Rational t = letter.param * torus_character(rs, out.h, letter.root);
        if (t.is_zero()) break;
        if (rs.is_positive(letter.root)) {
          u = u * chi_on(module, s, letter.root, t);
          break;
        }
        // u h chi_{-a}(t0) = u chi_{-a}(t) h = chi_a(a) chi_{-a}(t) [chi_{-a}(-t) u' chi_{-a}(t)] h.
        int up = rs.simple_root(i);
        auto split = unipotent_factorize_block(module, s, u, simple_first_order(rs, i));
        Rational a = split.t[0];
        SparseMatrix rest = chi_on(module, s, up, -a) * u;
        auto rank_one = sl2_iwasawa(mat2(1 + a * t, a, t, 1));
        Rational p = rank_one.b(0, 0);
        Rational y = rank_one.b(0, 1) * p;
        SparseMatrix moved = chi_on(module, s, letter.root, -t) * rest * chi_on(module, s, letter.root, t);
        auto moved_coords = unipotent_factorize_block(module, s, moved, simple_first_order(rs, i));
        if (!moved_coords.t[0].is_zero()) throw std::logic_error("conjugated factor meets the alpha_i root group");
        // Pass h_i(p) to the right of the remaining unipotent part.
        SparseMatrix next = chi_on(module, s, up, y);
        for (std::size_t k = 1; k < moved_coords.order.size(); ++k) {
          int root = moved_coords.order[k];
          Rational c = moved_coords.t[k];
          if (c.is_zero()) continue;
          c *= p.pow(rs.root_as_weight(root)[i]);
          next = next * chi_on(module, s, root, c);
        }
        u = std::move(next);
        out.h[i] *= p;
        auto w = sl2_word(i, rs, rank_one.gamma);
        out.gamma.insert(out.gamma.end(), w.begin(), w.end());
        break;
      }
      default:
        throw UnsupportedLetter("only chi_{+-alpha_i}, h_i and w_{alpha_i} letters are supported");
    }
  }
  out.gamma = simplify_word(out.gamma);
  out.u = unipotent_factorize_block(module, s, u, height_order(rs));
  return out;
}

IntegralityVerdict integrality_decide(std::shared_ptr<WeightModule const> module, AdmissibleLattice const& lattice,
                                      Word const& word) {
  auto hyp = module->check_fundamental_weights_hypothesis();
  if (!hyp.holds) {
    std::string missing;
    for (int i : hyp.missing) missing += (missing.empty() ? "" : ",") + std::to_string(i + 1);
    throw HypothesisViolation("module misses fundamental weights omega_{" + missing + "}");
  }
  IntegralityVerdict verdict;
  if (!module->has_regular_summand())
    verdict.warnings.push_back("no summand has a regular highest weight; the unipotent integrality theorem is not guaranteed");
  verdict.decomposition = iwasawa_decompose(module, word);
  auto const& dec = verdict.decomposition;
  bool units = std::all_of(dec.h.begin(), dec.h.end(), [](Rational const& t) { return t.abs().is_one(); });
  GroupElement g(module, word);
  if (units && dec.u.is_integral()) {
    verdict.in_gz = true;
    verdict.certificate = dec.gamma;
    auto uw = dec.u.word();
    verdict.certificate.insert(verdict.certificate.end(), uw.begin(), uw.end());
    for (std::size_t i = 0; i < dec.h.size(); ++i)
      if (!dec.h[i].is_one()) verdict.certificate.push_back(Letter::torus(static_cast<int>(i), dec.h[i]));
    verdict.certificate = simplify_word(verdict.certificate);
    if (!GroupElement(module, verdict.certificate).equals(g))
      throw std::logic_error("certificate does not evaluate to the input");
    return verdict;
  }
  auto report = stabilizes(g, lattice);
  if (report.stabilizes) throw std::logic_error("element stabilizes the lattice but its decomposition is not integral");
  verdict.witness = report.witness;
  return verdict;
}

std::vector<CommutatorConstant> commutator_constants(std::shared_ptr<WeightModule const> module, int alpha, int beta,
                                                     std::vector<std::pair<Rational, Rational>> const& samples) {
  auto const& rs = module->roots();
  if (!rs.is_positive(alpha) || !rs.is_positive(beta) || alpha == beta)
    throw std::invalid_argument("commutator_constants: two distinct positive roots expected");
  if (samples.empty()) throw std::invalid_argument("commutator_constants: no samples");
  std::vector<CommutatorConstant> out;
  auto const& a = rs.root(alpha);
  auto const& b = rs.root(beta);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      IntVec v(rs.rank());
      for (int k = 0; k < rs.rank(); ++k) v[k] = i * a[k] + j * b[k];
      if (auto r = rs.find_root(v)) out.push_back({i, j, *r, 0});
    }
  std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) { return x.root < y.root; });
  bool first = true;
  for (auto const& [t, u] : samples) {
    if (t.is_zero() || u.is_zero()) throw std::invalid_argument("commutator_constants: samples must be nonzero");
    GroupElement g(module, {Letter::chi(alpha, t), Letter::chi(beta, u), Letter::chi(alpha, -t), Letter::chi(beta, -u)});
    auto coords = unipotent_factorize(g);
    for (int r = 0; r < rs.num_positive(); ++r) {
      auto it = std::find_if(out.begin(), out.end(), [&](auto const& c) { return c.root == r; });
      Rational value = coords.coord(r);
      if (it == out.end()) {
        if (!value.is_zero()) throw std::logic_error("commutator has a component outside the i alpha + j beta roots");
        continue;
      }
      Rational c = value / (t.pow(it->i) * u.pow(it->j));
      if (!c.is_integer()) throw std::logic_error("commutator constant is not an integer");
      if (first) {
        it->c = c.numerator();
      } else if (it->c != c.numerator()) {
        throw std::logic_error("commutator constants depend on the sample");
      }
    }
    first = false;
  }
  return out;
}

}  // namespace chevalley
