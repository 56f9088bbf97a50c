#include "chevalley/lie_algebra.hpp"

#include <climits>
#include <stdexcept>

namespace chevalley {
namespace {

constexpr int kUnknown = INT_MIN;

int to_int(Rational const& value) {
  if (!value.is_integer()) throw std::logic_error("structure constant is not an integer");
  return static_cast<int>(*value.to_int64());
}

IntVec difference(IntVec a, IntVec const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

LieElement LieElement::zero(int rank) {
  LieElement e;
  e.h_part.assign(rank, Rational(0));
  return e;
}

LieElement LieElement::x(int rank, int root) {
  LieElement e = zero(rank);
  e.root_part[root] = Rational(1);
  return e;
}

LieElement LieElement::h(int rank, int i) {
  LieElement e = zero(rank);
  e.h_part[i] = Rational(1);
  return e;
}

bool LieElement::is_zero() const {
  if (!root_part.empty()) return false;
  for (auto const& c : h_part)
    if (!c.is_zero()) return false;
  return true;
}

bool LieElement::is_integral() const {
  for (auto const& c : h_part)
    if (!c.is_integer()) return false;
  for (auto const& [k, c] : root_part)
    if (!c.is_integer()) return false;
  return true;
}

LieElement& LieElement::operator+=(LieElement const& other) {
  for (std::size_t i = 0; i < h_part.size(); ++i) h_part[i] += other.h_part[i];
  for (auto const& [k, c] : other.root_part) {
    Rational& slot = root_part[k];
    slot += c;
    if (slot.is_zero()) root_part.erase(k);
  }
  return *this;
}

LieElement& LieElement::operator*=(Rational const& c) {
  if (c.is_zero()) {
    root_part.clear();
    for (auto& x : h_part) x = Rational(0);
    return *this;
  }
  for (auto& x : h_part) x *= c;
  for (auto& [k, v] : root_part) v *= c;
  return *this;
}

bool operator==(LieElement const& a, LieElement const& b) {
  return a.h_part == b.h_part && a.root_part == b.root_part;
}

LieAlgebra::LieAlgebra(std::shared_ptr<RootSystem const> rs) : rs_(std::move(rs)) {
  RootSystem const& r = *rs_;
  int const total = r.num_roots();
  int const npos = r.num_positive();
  table_.assign(total, std::vector<int>(total, kUnknown));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      if (!r.sum(a, b)) table_[a][b] = 0;
  extraspecial_.assign(npos, {-1, -1});

  auto set_pair = [&](int a, int b, int n) {
    table_[a][b] = n;
    table_[b][a] = -n;
  };

  for (int xi = 0; xi < npos; ++xi) {
    if (r.simple_of(xi) >= 0) continue;
    // Extraspecial pair: alpha' minimal with xi - alpha' positive.
    int ap = -1;
    int bp = -1;
    for (int a = 0; a < npos && ap < 0; ++a) {
      auto rest = r.find_root(difference(r.root(xi), r.root(a)));
      if (rest && r.is_positive(*rest)) {
        ap = a;
        bp = *rest;
      }
    }
    extraspecial_[xi] = {ap, bp};
    int const nxb = r.string_down(ap, bp) + 1;
    set_pair(ap, bp, nxb);

    Rational const len_xi(r.length(xi));
    for (int a = 0; a < npos; ++a) {
      auto rest = r.find_root(difference(r.root(xi), r.root(a)));
      if (!rest || !r.is_positive(*rest) || a >= *rest || a == ap) continue;
      int b = *rest;
      // Four-root relation for alpha + beta - alpha' - beta' = 0.
      Rational bracket_sum;
      int neg_ap = r.negative(ap);
      int neg_bp = r.negative(bp);
      if (auto d = r.find_root(difference(r.root(b), r.root(ap)))) {
        bracket_sum += Rational(compute(b, neg_ap) * compute(a, neg_bp), r.length(*d));
      }
      if (auto d = r.find_root(difference(r.root(a), r.root(ap)))) {
        bracket_sum += Rational(compute(neg_ap, a) * compute(b, neg_bp), r.length(*d));
      }
      set_pair(a, b, to_int(len_xi / Rational(nxb) * bracket_sum));
    }
  }

  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      if (table_[a][b] == kUnknown) table_[a][b] = compute(a, b);
}

int LieAlgebra::compute(int a, int b) const {
  if (table_[a][b] != kUnknown) return table_[a][b];
  RootSystem const& r = *rs_;
  bool pa = r.is_positive(a);
  bool pb = r.is_positive(b);
  if (pa && pb) throw std::logic_error("positive structure constant requested before it is known");
  if (!pa && !pb) return -compute(r.negative(a), r.negative(b));
  if (!pa) return -compute(b, a);
  // a positive, b = -beta negative.
  int beta = r.negative(b);
  IntVec delta = difference(r.root(a), r.root(beta));
  int d = r.root_index(delta);
  if (r.is_positive(d)) {
    // alpha = beta + delta.
    return to_int(Rational(-compute(beta, d) * r.length(d), r.length(a)));
  }
  // beta = alpha + delta'.
  int dp = r.negative(d);
  return to_int(Rational(compute(dp, a) * r.length(dp), r.length(beta)));
}

LieElement LieAlgebra::basis(int index) const {
  if (index < rs_->num_roots()) return LieElement::x(rank(), index);
  return LieElement::h(rank(), index - rs_->num_roots());
}

LieElement LieAlgebra::basis_bracket(int a, int b) const {
  return bracket(basis(a), basis(b));
}

LieElement LieAlgebra::bracket(LieElement const& a, LieElement const& b) const {
  RootSystem const& r = *rs_;
  int const n = rank();
  LieElement out = LieElement::zero(n);
  auto add_root = [&](int k, Rational const& c) {
    if (c.is_zero()) return;
    Rational& slot = out.root_part[k];
    slot += c;
    if (slot.is_zero()) out.root_part.erase(k);
  };
  // [h, x_beta] = beta(h) x_beta.
  auto h_on_root = [&](std::vector<Rational> const& h, int beta) {
    Rational value;
    for (int i = 0; i < n; ++i)
      if (!h[i].is_zero()) value += h[i] * Rational(r.pairing(r.root(beta), i));
    return value;
  };
  for (auto const& [beta, cb] : b.root_part) add_root(beta, h_on_root(a.h_part, beta) * cb);
  for (auto const& [alpha, ca] : a.root_part) add_root(alpha, -(h_on_root(b.h_part, alpha) * ca));
  for (auto const& [alpha, ca] : a.root_part) {
    for (auto const& [beta, cb] : b.root_part) {
      if (beta == r.negative(alpha)) {
        IntVec const& c = r.coroot(alpha);
        Rational coeff = ca * cb;
        for (int i = 0; i < n; ++i) out.h_part[i] += coeff * Rational(c[i]);
        continue;
      }
      int nab = table_[alpha][beta];
      if (nab == 0) continue;
      add_root(*r.sum(alpha, beta), ca * cb * Rational(nab));
    }
  }
  return out;
}

LieElement LieAlgebra::chevalley_involution(LieElement const& a) const {
  LieElement out = LieElement::zero(rank());
  for (int i = 0; i < rank(); ++i) out.h_part[i] = -a.h_part[i];
  for (auto const& [k, c] : a.root_part) out.root_part[rs_->negative(k)] = -c;
  return out;
}

std::vector<LieAlgebra::ConstantEntry> LieAlgebra::constants() const {
  std::vector<ConstantEntry> out;
  for (int a = 0; a < rs_->num_roots(); ++a)
    for (int b = 0; b < rs_->num_roots(); ++b)
      if (table_[a][b] != 0) out.push_back({a, b, table_[a][b]});
  return out;
}

}  // namespace chevalley
