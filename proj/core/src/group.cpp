#include "chevalley/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {
namespace {

SparseMatrix chi_block(IrreducibleBlock const& block, int root, Rational const& t) {
  SparseMatrix out = SparseMatrix::identity(block.dim());
  if (t.is_zero()) return out;
  Rational power = t;
  int top = block.max_power(root);
  for (int m = 1; m <= top; ++m) {
    out = out.add_scaled(block.divided_power(root, m), power);
    power *= t;
  }
  return out;
}

std::vector<Rational> torus_diagonal(IrreducibleBlock const& block, std::vector<Rational> const& coweight,
                                     Rational const& t) {
  std::vector<Rational> diag(block.dim());
  for (auto const& space : block.spaces()) {
    Rational exponent;
    for (std::size_t i = 0; i < coweight.size(); ++i)
      if (space.mu[i] != 0) Rational::fused_multiply_add(exponent, coweight[i], Rational(space.mu[i]));
    auto e = exponent.to_int64();
    if (!exponent.is_integer() || !e)
      throw std::invalid_argument("coweight pairs non-integrally with a weight of the module");
    Rational value = t.pow(*e);
    for (int k = 0; k < space.mult; ++k) diag[space.offset + k] = value;
  }
  return diag;
}

std::vector<Rational> letter_diagonal(WeightModule const& module, int s, Letter const& letter) {
  if (letter.kind == Letter::Kind::Torus) {
    std::vector<Rational> cw(module.rank());
    cw.at(letter.index) = 1;
    return torus_diagonal(module.block(s), cw, letter.param);
  }
  return torus_diagonal(module.block(s), letter.coweight, letter.param);
}

bool is_diagonal(Letter const& l) {
  return l.kind == Letter::Kind::Torus || l.kind == Letter::Kind::Coweight;
}

}  // namespace

Letter Letter::chi(int root, Rational t) {
  Letter l;
  l.kind = Kind::Chi;
  l.root = root;
  l.param = std::move(t);
  return l;
}

Letter Letter::torus(int i, Rational t) {
  if (t.is_zero()) throw std::invalid_argument("h_i(t) needs t != 0");
  Letter l;
  l.kind = Kind::Torus;
  l.index = i;
  l.param = std::move(t);
  return l;
}

Letter Letter::coweight_torus(std::vector<Rational> coweight, Rational t) {
  if (t.is_zero()) throw std::invalid_argument("h_varpi(t) needs t != 0");
  Letter l;
  l.kind = Kind::Coweight;
  l.coweight = std::move(coweight);
  l.param = std::move(t);
  return l;
}

Letter Letter::wtilde(int root, Rational s) {
  if (s.is_zero()) throw std::invalid_argument("w_alpha(s) needs s != 0");
  Letter l;
  l.kind = Kind::WeylLift;
  l.root = root;
  l.param = std::move(s);
  return l;
}

Letter Letter::inverse() const {
  Letter l = *this;
  switch (kind) {
    case Kind::Chi:
    case Kind::WeylLift:
      l.param = -param;
      break;
    case Kind::Torus:
    case Kind::Coweight:
      l.param = param.inverse();
      break;
  }
  return l;
}

bool Letter::is_integral() const {
  switch (kind) {
    case Kind::Chi:
      return param.is_integer();
    case Kind::Torus:
    case Kind::WeylLift:
      return param.abs().is_one();
    case Kind::Coweight:
      return param.abs().is_one() && std::all_of(coweight.begin(), coweight.end(),
                                                 [](Rational const& c) { return c.is_integer(); });
  }
  return false;
}

Word inverse_word(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool is_integral_word(Word const& w) {
  return std::all_of(w.begin(), w.end(), [](Letter const& l) { return l.is_integral(); });
}

Word simplify_word(Word const& w) {
  Word out;
  for (auto const& letter : w) {
    if (!out.empty() && out.back().kind == letter.kind) {
      auto& last = out.back();
      if (letter.kind == Letter::Kind::Chi && last.root == letter.root) {
        last.param += letter.param;
        if (last.param.is_zero()) out.pop_back();
        continue;
      }
      if (letter.kind == Letter::Kind::Torus && last.index == letter.index) {
        last.param *= letter.param;
        if (last.param.is_one()) out.pop_back();
        continue;
      }
    }
    bool trivial = (letter.kind == Letter::Kind::Chi && letter.param.is_zero()) ||
                   ((letter.kind == Letter::Kind::Torus || letter.kind == Letter::Kind::Coweight) && letter.param.is_one());
    if (!trivial) out.push_back(letter);
  }
  return out;
}

SparseMatrix letter_block(WeightModule const& module, int s, Letter const& letter) {
  auto const& block = module.block(s);
  auto const& rs = module.roots();
  switch (letter.kind) {
    case Letter::Kind::Chi:
      return chi_block(block, letter.root, letter.param);
    case Letter::Kind::Torus:
    case Letter::Kind::Coweight:
      return SparseMatrix::diagonal(letter_diagonal(module, s, letter));
    case Letter::Kind::WeylLift: {
      auto up = chi_block(block, letter.root, letter.param);
      return up * chi_block(block, rs.negative(letter.root), -letter.param.inverse()) * up;
    }
  }
  throw std::logic_error("unknown letter");
}

SparseMatrix evaluate_block(WeightModule const& module, int s, Word const& word) {
  SparseMatrix out = SparseMatrix::identity(module.block(s).dim());
  for (auto const& letter : word) {
    if (is_diagonal(letter)) {
      out.scale_columns(letter_diagonal(module, s, letter));
    } else {
      out = out * letter_block(module, s, letter);
    }
  }
  return out;
}

GroupElement::GroupElement(std::shared_ptr<WeightModule const> module, Word word)
    : GroupElement(module, std::optional<Word>(std::move(word)),
                   std::vector<std::optional<SparseMatrix>>(module->num_summands())) {
  auto const& rs = module_->roots();
  for (auto const& l : *word_) {
    if ((l.kind == Letter::Kind::Chi || l.kind == Letter::Kind::WeylLift) &&
        (l.root < 0 || l.root >= rs.num_roots()))
      throw std::invalid_argument("letter refers to an unknown root");
    if (l.kind == Letter::Kind::Torus && (l.index < 0 || l.index >= rs.rank()))
      throw std::invalid_argument("torus letter index out of range");
    if (l.kind == Letter::Kind::Coweight) {
      if (static_cast<int>(l.coweight.size()) != rs.rank())
        throw std::invalid_argument("coweight has the wrong number of coordinates");
      for (int s = 0; s < module_->num_summands(); ++s) letter_diagonal(*module_, s, l);
    }
  }
}

GroupElement::GroupElement(std::shared_ptr<WeightModule const> module, std::optional<Word> word,
                           std::vector<std::optional<SparseMatrix>> blocks)
    : module_(std::move(module)), word_(std::move(word)), cache_(std::make_shared<Cache>()) {
  cache_->blocks = std::move(blocks);
  cache_->inverse_blocks.resize(module_->num_summands());
}

GroupElement GroupElement::identity(std::shared_ptr<WeightModule const> module) {
  return GroupElement(std::move(module), Word{});
}

GroupElement GroupElement::from_blocks(std::shared_ptr<WeightModule const> module,
                                       std::vector<SparseMatrix> blocks) {
  if (static_cast<int>(blocks.size()) != module->num_summands())
    throw std::invalid_argument("from_blocks: one block per summand expected");
  std::vector<std::optional<SparseMatrix>> stored;
  for (int s = 0; s < module->num_summands(); ++s) {
    auto n = static_cast<std::size_t>(module->block(s).dim());
    if (blocks[s].rows() != n || blocks[s].cols() != n)
      throw std::invalid_argument("from_blocks: block has the wrong size");
    stored.emplace_back(std::move(blocks[s]));
  }
  GroupElement g(module, std::nullopt, std::move(stored));
  for (int s = 0; s < module->num_summands(); ++s) g.inverse_block(s);
  return g;
}

SparseMatrix const& GroupElement::block(int s) const {
  std::lock_guard guard(cache_->lock);
  auto& slot = cache_->blocks.at(s);
  if (!slot) slot = evaluate_block(*module_, s, *word_);
  return *slot;
}

SparseMatrix const& GroupElement::inverse_block(int s) const {
  std::unique_lock guard(cache_->lock);
  auto& slot = cache_->inverse_blocks.at(s);
  if (slot) return *slot;
  if (word_) {
    slot = evaluate_block(*module_, s, inverse_word(*word_));
    return *slot;
  }
  auto inv = chevalley::inverse(cache_->blocks.at(s)->to_dense());
  if (!inv) throw std::invalid_argument("group element matrix is singular");
  slot = SparseMatrix::from_dense(*inv);
  return *slot;
}

SparseMatrix GroupElement::matrix() const {
  std::vector<SparseMatrix> parts;
  for (int s = 0; s < module_->num_summands(); ++s) parts.push_back(block(s));
  return SparseMatrix::direct_sum(parts);
}

GroupElement GroupElement::inverse() const {
  int n = module_->num_summands();
  if (word_) {
    GroupElement g(module_, inverse_word(*word_));
    std::scoped_lock guard(cache_->lock, g.cache_->lock);
    g.cache_->blocks = cache_->inverse_blocks;
    g.cache_->inverse_blocks = cache_->blocks;
    return g;
  }
  std::vector<std::optional<SparseMatrix>> blocks;
  for (int s = 0; s < n; ++s) blocks.emplace_back(inverse_block(s));
  GroupElement g(module_, std::nullopt, std::move(blocks));
  for (int s = 0; s < n; ++s) g.cache_->inverse_blocks[s] = block(s);
  return g;
}

GroupElement operator*(GroupElement const& a, GroupElement const& b) {
  if (a.module_ != b.module_) throw std::invalid_argument("group elements live on different modules");
  int n = a.module_->num_summands();
  if (a.word_ && b.word_) {
    Word w = *a.word_;
    w.insert(w.end(), b.word_->begin(), b.word_->end());
    GroupElement g(a.module_, std::move(w));
    std::scoped_lock guard(a.cache_->lock, b.cache_->lock);
    for (int s = 0; s < n; ++s)
      if (a.cache_->blocks[s] && b.cache_->blocks[s])
        g.cache_->blocks[s] = *a.cache_->blocks[s] * *b.cache_->blocks[s];
    return g;
  }
  std::vector<std::optional<SparseMatrix>> blocks;
  for (int s = 0; s < n; ++s) blocks.emplace_back(a.block(s) * b.block(s));
  return GroupElement(a.module_, std::nullopt, std::move(blocks));
}

bool GroupElement::equals(GroupElement const& other) const {
  if (module_ != other.module_) throw std::invalid_argument("group elements live on different modules");
  if (word_ && other.word_) {
    for (int s : module_->determining_summands())
      if (!(block(s) == other.block(s))) return false;
    return true;
  }
  for (int s = 0; s < module_->num_summands(); ++s)
    if (!(block(s) == other.block(s))) return false;
  return true;
}

GroupElement chi(std::shared_ptr<WeightModule const> module, int root, Rational t) {
  return GroupElement(std::move(module), Word{Letter::chi(root, std::move(t))});
}

GroupElement torus(std::shared_ptr<WeightModule const> module, int i, Rational t) {
  return GroupElement(std::move(module), Word{Letter::torus(i, std::move(t))});
}

GroupElement torus_coweight(std::shared_ptr<WeightModule const> module, std::vector<Rational> coweight,
                            Rational t) {
  return GroupElement(std::move(module), Word{Letter::coweight_torus(std::move(coweight), std::move(t))});
}

GroupElement wtilde(std::shared_ptr<WeightModule const> module, int root, Rational s) {
  return GroupElement(std::move(module), Word{Letter::wtilde(root, std::move(s))});
}

Mat2 mat2(Rational a, Rational b, Rational c, Rational d) {
  return Mat2{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}};
}

Word sl2_word(int i, RootSystem const& rs, Mat2 const& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("sl2_word: 2x2 matrix expected");
  Rational a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (!(a * d - b * c).is_one()) throw std::invalid_argument("sl2_word: determinant must be 1");
  int up = rs.simple_root(i);
  int down = rs.negative(up);
  Word out;
  auto push_chi = [&](int root, Rational t) {
    if (!t.is_zero()) out.push_back(Letter::chi(root, std::move(t)));
  };
  bool integral = a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer();
  if (integral) {
    // Row reduce the first column with elementary matrices E_k; then
    // M = E_1^-1 ... E_k^-1 [[a, b], [0, a]].
    while (!c.is_zero()) {
      if (a.is_zero()) {
        a += c;
        b += d;
        push_chi(up, -1);
      } else if (a.abs() > c.abs()) {
        Rational q(mpz_class(a.numerator() / c.numerator()));
        a -= q * c;
        b -= q * d;
        push_chi(up, q);
      } else {
        Rational q(mpz_class(c.numerator() / a.numerator()));
        c -= q * a;
        d -= q * b;
        push_chi(down, q);
      }
    }
    push_chi(up, a * b);
    if (!a.is_one()) out.push_back(Letter::torus(i, a));
    return out;
  }
  if (c.is_zero()) {
    // [[a, b], [0, 1/a]] = chi(ab) h(a)
    push_chi(up, a * b);
    if (!a.is_one()) out.push_back(Letter::torus(i, a));
    return out;
  }
  push_chi(up, (a - 1) / c);
  push_chi(down, c);
  push_chi(up, (d - 1) / c);
  return out;
}

GroupElement sl2_embed(std::shared_ptr<WeightModule const> module, int i, Mat2 const& m) {
  Word w = sl2_word(i, module->roots(), m);
  return GroupElement(std::move(module), std::move(w));
}

}  // namespace chevalley
