#include "suites.hpp"

#include <random>
#include <sstream>

namespace chevalley::cli {
namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string anchor, std::string check, bool passed, std::string detail = {}) {
    out_.push_back({suite_, std::move(anchor), std::move(check), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

std::string count(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

Rational sample(std::mt19937_64& rng, bool integral = false) {
  std::uniform_int_distribution<int> num(-6, 6), kind(0, 3);
  static int const dens[] = {1, 2, 3, 5};
  return Rational(num(rng), integral ? 1 : dens[kind(rng)]);
}

Rational sample_nonzero(std::mt19937_64& rng, bool integral = false) {
  Rational t;
  while (t.is_zero()) t = sample(rng, integral);
  return t;
}

Word random_simple_word(RootSystem const& rs, std::mt19937_64& rng, int length, bool integral) {
  std::uniform_int_distribution<int> kind(0, 3), simple(0, rs.rank() - 1), sign(0, 1);
  Word w;
  for (int k = 0; k < length; ++k) {
    int i = simple(rng);
    int a = rs.simple_root(i);
    switch (kind(rng)) {
      case 0:
        w.push_back(Letter::chi(a, sample(rng, integral)));
        break;
      case 1:
        w.push_back(Letter::chi(rs.negative(a), sample(rng, integral)));
        break;
      case 2:
        w.push_back(Letter::torus(i, integral ? Rational(sign(rng) ? 1 : -1) : sample_nonzero(rng)));
        break;
      default:
        w.push_back(Letter::wtilde(a, integral ? Rational(sign(rng) ? 1 : -1) : sample_nonzero(rng)));
    }
  }
  return w;
}

// Matrix of an element of g on one summand.
SparseMatrix represent(IrreducibleBlock const& block, RootSystem const& rs, LieElement const& x) {
  std::vector<Rational> diag(block.dim());
  for (int i = 0; i < rs.rank(); ++i) {
    if (x.h_part[i].is_zero()) continue;
    for (auto const& space : block.spaces())
      for (int k = 0; k < space.mult; ++k) diag[space.offset + k] += x.h_part[i] * space.mu[i];
  }
  SparseMatrix out = SparseMatrix::diagonal(diag);
  for (auto const& [root, c] : x.root_part) out = out.add_scaled(block.root_action(root), c);
  return out;
}

bool block_preserves_lattice(WeightModule const& v, AdmissibleLattice const& lat, int s, SparseMatrix const& m) {
  if (lat.standard) return m.is_integral();
  for (auto const& b : lattice_block_basis(v, lat, s))
    if (!lattice_contains_block(v, lat, s, m.apply(b))) return false;
  return true;
}

}  // namespace

std::vector<IntVec> parse_module_spec(RootSystem const& rs, std::string const& spec) {
  if (spec == "sc-default") return WeightModule::sc_default_weights(rs);
  if (spec == "adjoint") return WeightModule::adjoint_weights(rs);
  std::vector<IntVec> out;
  std::stringstream summands(spec);
  std::string part;
  while (std::getline(summands, part, ';')) {
    IntVec lambda;
    std::stringstream coords(part);
    std::string x;
    while (std::getline(coords, x, ',')) {
      std::size_t used = 0;
      int value = std::stoi(x, &used);
      if (used != x.size()) throw std::invalid_argument("module: bad coordinate \"" + x + "\"");
      lambda.push_back(value);
    }
    if (static_cast<int>(lambda.size()) != rs.rank())
      throw std::invalid_argument("module: highest weight needs " + std::to_string(rs.rank()) + " coordinates");
    out.push_back(std::move(lambda));
  }
  if (out.empty()) throw std::invalid_argument("module: empty summand list");
  return out;
}

std::vector<CheckResult> algebra_suite(SuiteConfig const& cfg) {
  Recorder rec("algebra");
  auto const& g = cfg.module->algebra();
  auto const& rs = g.roots();
  int dim = g.dimension();

  bool integral = true, string_length = true, antisym = true;
  for (int a = 0; a < rs.num_roots(); ++a)
    for (int b = 0; b < rs.num_roots(); ++b) {
      if (a == b || a == rs.negative(b)) continue;
      int n = g.structure_constant(a, b);
      antisym = antisym && g.structure_constant(b, a) == -n;
      if (rs.sum(a, b)) string_length = string_length && std::abs(n) == rs.string_down(a, b) + 1;
      else string_length = string_length && n == 0;
    }
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) integral = integral && g.basis_bracket(a, b).is_integral();
  rec.add("Chevalley basis", "brackets of basis elements are integral", integral);
  rec.add("Chevalley basis", "|n_ab| = r + 1 with beta - r alpha the bottom of the string", string_length);
  rec.add("Chevalley basis", "n_ba = -n_ab", antisym);

  auto jacobi = [&](int a, int b, int c) {
    LieElement x = g.basis(a), y = g.basis(b), z = g.basis(c);
    return (g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y))).is_zero();
  };
  bool jac = true;
  std::string how;
  if (rs.rank() <= 4) {
    for (int a = 0; a < dim && jac; ++a)
      for (int b = a + 1; b < dim && jac; ++b)
        for (int c = b + 1; c < dim && jac; ++c) jac = jacobi(a, b, c);
    how = "exhaustive";
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int k = 0; k < 10000 && jac; ++k) jac = jacobi(pick(rng), pick(rng), pick(rng));
    how = "10000 sampled triples";
  }
  rec.add("Chevalley basis", "Jacobi identity on basis triples", jac, how);

  bool involution = true, automorphism = true;
  for (int a = 0; a < dim; ++a) {
    LieElement x = g.basis(a);
    involution = involution && g.chevalley_involution(g.chevalley_involution(x)) == x;
    for (int b = 0; b < dim; ++b) {
      LieElement y = g.basis(b);
      automorphism = automorphism && g.chevalley_involution(g.bracket(x, y)) ==
                                         g.bracket(g.chevalley_involution(x), g.chevalley_involution(y));
    }
  }
  rec.add("Chevalley involution", "theta^2 = id", involution);
  rec.add("Chevalley involution", "theta[x,y] = [theta x, theta y]", automorphism);
  return rec.take();
}

std::vector<CheckResult> module_suite(SuiteConfig const& cfg) {
  Recorder rec("module");
  auto const& v = *cfg.module;
  auto const& rs = v.roots();
  auto const& g = v.algebra();

  bool dims = true, top = true;
  for (int s = 0; s < v.num_summands(); ++s) {
    auto const& b = v.block(s);
    dims = dims && mpz_class(b.dim()) == weyl_dimension(rs, b.highest_weight());
    top = top && b.spaces()[0].mult == 1 && b.spaces()[0].mu == b.highest_weight();
  }
  rec.add("Weyl dimension formula", "summand dimensions", dims, "dim " + std::to_string(v.dim()));
  rec.add("highest weight space", "one-dimensional and of weight lambda", top);

  // Bracket relations on every pair of generators and on sampled root pairs.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> root(0, rs.num_roots() - 1);
  bool hom = true;
  for (int s = 0; s < v.num_summands() && hom; ++s) {
    auto const& b = v.block(s);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) pairs.emplace_back(rs.simple_root(i), rs.negative(rs.simple_root(j)));
    for (int k = 0; k < 20; ++k) pairs.emplace_back(root(rng), root(rng));
    for (auto [a, c] : pairs) {
      if (a == c) continue;
      auto lhs = commutator(b.root_action(a), b.root_action(c));
      auto rhs = represent(b, rs, g.bracket(LieElement::x(rs.rank(), a), LieElement::x(rs.rank(), c)));
      if (!(lhs == rhs)) {
        hom = false;
        break;
      }
    }
  }
  rec.add("representation", "[rho x, rho y] = rho [x, y]", hom);

  auto lat = build_lattice(v);
  bool ranks = true;
  for (int s = 0; s < v.num_summands(); ++s) {
    auto const& spaces = v.block(s).spaces();
    for (std::size_t k = 0; k < spaces.size(); ++k)
      ranks = ranks && static_cast<int>(lat.bases[s][k].rows()) == spaces[k].mult;
    ranks = ranks && lat.bases[s][0] == RatMatrix::identity(1);
  }
  rec.add("V_Z splits along weight spaces", "rank of V_mu,Z equals mult(mu); V_lambda,Z = Z v_lambda", ranks);
  rec.add("admissible lattice", "U_Z v_lambda is the span of the module basis", lat.standard);

  bool divided = true, binomial = true;
  for (int s = 0; s < v.num_summands(); ++s) {
    auto const& b = v.block(s);
    for (int r = 0; r < rs.num_roots() && divided; ++r)
      for (int m = 1; m <= b.max_power(r) && divided; ++m) divided = block_preserves_lattice(v, lat, s, b.divided_power(r, m));
    for (int i = 0; i < rs.rank() && binomial; ++i)
      for (int m = 0; m <= 3 && binomial; ++m) {
        std::vector<Rational> diag(b.dim());
        for (auto const& space : b.spaces()) {
          int x = space.mu[i];
          // binomial(x, m) for any integer x.
          Rational value(1);
          for (int j = 0; j < m; ++j) value = value * Rational(x - j) / Rational(j + 1);
          for (int k = 0; k < space.mult; ++k) diag[space.offset + k] = value;
        }
        binomial = block_preserves_lattice(v, lat, s, SparseMatrix::diagonal(diag));
      }
  }
  rec.add("Kostant Z-form", "divided powers x_alpha^(m) stabilize V_Z", divided);
  rec.add("Kostant Z-form", "binomials (h_i choose m) stabilize V_Z", binomial);

  // x_a^(n) x_-a^(n) v = v on V_mu when mu + a is not a weight and n = <mu, h_a> > 0.
  auto weights = v.weight_multiplicities();
  bool extremal = true;
  int cases = 0;
  for (int s = 0; s < v.num_summands() && extremal; ++s) {
    auto const& b = v.block(s);
    for (int a = 0; a < rs.num_roots() && extremal; ++a) {
      auto shift = rs.root_as_weight(a);
      for (auto const& space : b.spaces()) {
        int n = rs.weight_pairing(space.mu, a);
        if (n <= 0) continue;
        IntVec up = space.mu;
        for (int i = 0; i < rs.rank(); ++i) up[i] += shift[i];
        if (weights.count(up)) continue;
        auto const& down = b.divided_power(rs.negative(a), n);
        auto const& back = b.divided_power(a, n);
        for (int k = 0; k < space.mult; ++k) {
          std::vector<Rational> e(b.dim());
          e[space.offset + k] = 1;
          if (back.apply(down.apply(e)) != e) extremal = false;
          ++cases;
        }
      }
    }
  }
  rec.add("extremal weight strings", "x_a^(n) x_-a^(n) v = v", extremal, std::to_string(cases) + " vectors");

  auto hyp = v.check_fundamental_weights_hypothesis();
  std::string missing;
  for (int i : hyp.missing) missing += (missing.empty() ? "omega_" : ", omega_") + std::to_string(i + 1);
  rec.add("fundamental weights hypothesis", "every omega_i is a weight (informational)", true,
          hyp.holds ? "holds" : "fails: missing " + missing);
  return rec.take();
}

std::vector<CheckResult> group_suite(SuiteConfig const& cfg) {
  Recorder rec("group");
  auto v = cfg.module;
  auto const& rs = v->roots();
  std::mt19937_64 rng(cfg.seed);
  auto lat = standard_lattice(*v);

  if (rs.type().series == 'A' && rs.rank() == 1) {
    auto std2 = std::make_shared<WeightModule const>(v->algebra_ptr(), std::vector<IntVec>{{1}});
    auto dense = [](GroupElement const& x) { return x.matrix().to_dense(); };
    Rational s(3, 7), half(1, 2);
    int a = rs.simple_root(0), na = rs.negative(a);
    bool ok = dense(chi(std2, a, s)) == mat2(1, s, 0, 1) && dense(chi(std2, na, s)) == mat2(1, 0, s, 1) &&
              dense(torus(std2, 0, half)) == mat2(half, 0, 0, 2) && dense(wtilde(std2, a, 1)) == mat2(0, 1, -1, 0);
    rec.add("standard representation of SL_2", "chi, h and w matrices", ok);
    auto gamma = chi(std2, a, half) * torus(std2, 0, half) * chi(std2, na, half);
    bool two_words = dense(gamma) == mat2(1, 1, 1, 2) && dense(chi(std2, na, 1) * chi(std2, a, 1)) == mat2(1, 1, 1, 2);
    rec.add("standard representation of SL_2", "chi(1/2) h(1/2) chi_-(1/2) = chi_-(1) chi(1) = [[1,1],[1,2]]", two_words);
    rec.add("standard representation of SL_2", "[[1,1],[1,2]] stabilizes Z + Z",
            stabilizes(gamma, standard_lattice(*std2), StabilizeMode::Exhaustive).stabilizes);
  }

  bool one_param = true;
  for (int r = 0; r < rs.num_roots() && one_param; ++r) {
    Rational s = sample(rng), t = sample(rng);
    one_param = (chi(v, r, s) * chi(v, r, t)).equals(chi(v, r, s + t));
  }
  rec.add("root subgroups", "chi_a(s) chi_a(t) = chi_a(s + t)", one_param);

  bool torus_ok = true;
  for (int i = 0; i < rs.rank() && torus_ok; ++i)
    for (int j = 0; j < rs.rank() && torus_ok; ++j) {
      Rational s = sample_nonzero(rng), t = sample_nonzero(rng);
      torus_ok = (torus(v, i, s) * torus(v, j, t)).equals(torus(v, j, t) * torus(v, i, s)) &&
                 (torus(v, i, s) * torus(v, i, t)).equals(torus(v, i, s * t));
    }
  rec.add("torus", "H(Q) is abelian and h_i is multiplicative", torus_ok);

  bool lifts = true;
  for (int r = 0; r < rs.num_positive() && lifts; ++r) {
    Rational u = sample_nonzero(rng);
    Word product;
    auto c = rs.coroot(r);
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] != 0) product.push_back(Letter::torus(i, u.pow(c[i])));
    lifts = (wtilde(v, r, u) * wtilde(v, r, 1).inverse()).equals(GroupElement(v, product));
  }
  rec.add("Weyl lifts", "w_a(u) w_a(1)^-1 = h_a(u) = prod h_i(u^c_i)", lifts);

  int good = 0, total = 20;
  for (int k = 0; k < total; ++k) {
    GroupElement x(v, random_simple_word(rs, rng, 6, true));
    good += stabilizes(x, lat).stabilizes;
  }
  rec.add("G(Z) stabilizes V_Z", "integral words stabilize the lattice", good == total, count(good, total));

  if (rs.rank() == 2) {
    std::vector<std::pair<Rational, Rational>> first{{1, 1}, {Rational(2, 3), -3}}, second{{-2, Rational(5, 7)}, {Rational(1, 4), 6}};
    bool stable = true;
    std::string detail;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (a == b || !rs.sum(a, b)) continue;
        auto c1 = commutator_constants(v, a, b, first);
        auto c2 = commutator_constants(v, a, b, second);
        for (std::size_t k = 0; k < c1.size(); ++k) stable = stable && c1[k].c == c2[k].c;
      }
    rec.add("commutator formula", "integer constants, independent of the samples", stable);
  }
  return rec.take();
}

std::vector<CheckResult> integrality_suite(SuiteConfig const& cfg) {
  Recorder rec("integrality");
  auto v = cfg.module;
  auto const& rs = v->roots();
  std::mt19937_64 rng(cfg.seed);
  auto lat = build_lattice(*v);
  bool hypothesis = v->check_fundamental_weights_hypothesis().holds;

  int agree = 0, total = 200;
  for (int k = 0; k < total; ++k) {
    Word w;
    for (int r = 0; r < rs.num_positive(); ++r) w.push_back(Letter::chi(r, sample(rng, k % 2 == 0)));
    GroupElement u(v, w);
    agree += unipotent_integrality(u).integral == stabilizes(u, lat).stabilizes;
  }
  rec.add("integrality of U", "u V_Z = V_Z iff the factorization coordinates are integers", agree == total,
          count(agree, total) + (v->has_regular_summand() ? "" : " (no regular summand: not guaranteed)"));

  int round = 0;
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> t(rs.num_positive());
    Word w;
    for (int r = 0; r < rs.num_positive(); ++r) {
      t[r] = sample(rng);
      w.push_back(Letter::chi(r, t[r]));
    }
    round += unipotent_factorize(GroupElement(v, w)).t == t;
  }
  rec.add("unique factorization in U", "factorize after evaluate is the identity", round == 100, count(round, 100));

  int toral = 0;
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> t(rs.rank());
    Word w;
    for (int i = 0; i < rs.rank(); ++i) {
      t[i] = sample_nonzero(rng);
      w.push_back(Letter::torus(i, t[i]));
    }
    auto back = toral_factorize(GroupElement(v, w));
    Word again;
    for (int i = 0; i < rs.rank(); ++i) again.push_back(Letter::torus(i, back[i]));
    toral += GroupElement(v, again).equals(GroupElement(v, w));
  }
  rec.add("torus factorization", "prod h_i(t_i) recovered", toral == 50, count(toral, 50));

  int iwasawa = 0;
  std::uniform_int_distribution<int> length(1, 12);
  for (int k = 0; k < 100; ++k) {
    Word w = random_simple_word(rs, rng, length(rng), false);
    auto d = iwasawa_decompose(v, w);
    iwasawa += GroupElement(v, d.recomposed()).equals(GroupElement(v, w)) && is_integral_word(d.gamma) &&
               stabilizes(GroupElement(v, d.gamma), lat).stabilizes;
  }
  rec.add("G(Q) = G(Z) B(Q)", "gamma u h recomposes and gamma stabilizes V_Z", iwasawa == 100, count(iwasawa, 100));

  if (!hypothesis) {
    rec.add("Gamma(Z) = G(Z)", "decider", true, "skipped: module misses fundamental weights");
    return rec.take();
  }
  int certified = 0;
  for (int k = 0; k < 50; ++k) {
    Word w = random_simple_word(rs, rng, length(rng), true);
    auto verdict = integrality_decide(v, lat, w);
    certified += verdict.in_gz && is_integral_word(verdict.certificate) &&
                 GroupElement(v, verdict.certificate).equals(GroupElement(v, w)) &&
                 stabilizes(GroupElement(v, verdict.certificate), lat).stabilizes;
  }
  rec.add("Gamma(Z) = G(Z)", "integral words get verified certificates", certified == 50, count(certified, 50));
  int refuted = 0, tried = 0;
  while (tried < 50) {
    Word w = random_simple_word(rs, rng, length(rng), false);
    if (is_integral_word(w)) continue;
    GroupElement g(v, w);
    if (stabilizes(g, lat).stabilizes) continue;
    ++tried;
    auto verdict = integrality_decide(v, lat, w);
    if (verdict.in_gz || !verdict.witness) continue;
    auto const& wit = *verdict.witness;
    auto image = (wit.inverse ? g.inverse() : g).block(wit.summand).apply(
        std::vector<Rational>(wit.vector.begin() + v->summand_offset(wit.summand),
                              wit.vector.begin() + v->summand_offset(wit.summand) + v->block(wit.summand).dim()));
    refuted += lattice_contains(*v, lat, wit.vector) && !lattice_contains(*v, lat, wit.image) &&
               std::equal(image.begin(), image.end(), wit.image.begin() + v->summand_offset(wit.summand));
  }
  rec.add("Gamma(Z) = G(Z)", "non-integral elements get verified witnesses", refuted == 50, count(refuted, 50));
  return rec.take();
}

}  // namespace chevalley::cli
