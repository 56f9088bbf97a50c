#include "chevalley/rational.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace chevalley {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kInt64Max = static_cast<i128>(INT64_MAX);
constexpr i128 kInt64Min = static_cast<i128>(INT64_MIN);

bool fits_int64(i128 value) { return value >= kInt64Min && value <= kInt64Max; }

u128 abs128(i128 value) { return value < 0 ? static_cast<u128>(-value) : static_cast<u128>(value); }

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t value) {
  return value < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(value)
                   : static_cast<std::uint64_t>(value);
}

mpz_class mpz_from_i128(i128 value) {
  bool negative = value < 0;
  u128 magnitude = abs128(value);
  mpz_class hi(static_cast<unsigned long>(magnitude >> 64));
  mpz_class lo(static_cast<unsigned long>(magnitude & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class result = (hi << 64) + lo;
  return negative ? mpz_class(-result) : result;
}

mpz_class mpz_from_i64(std::int64_t value) { return mpz_class(static_cast<long>(value)); }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (numerator == INT64_MIN || denominator == INT64_MIN) {
    assign_big(mpq_class(mpz_from_i64(numerator), mpz_from_i64(denominator)));
    return;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  auto g = static_cast<std::int64_t>(std::gcd(uabs64(numerator), uabs64(denominator)));
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational::Rational(mpz_class const& value) { assign_big(mpq_class(value)); }

Rational::Rational(mpq_class const& value) { assign_big(mpq_class(value)); }

Rational::Rational(mpz_class const& numerator, mpz_class const& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  assign_big(mpq_class(numerator, denominator));
}

Rational::Rational(Rational const& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(Rational const& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_big(mpq_class&& value) {
  value.canonicalize();
  if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Rational::normalize_big() {
  if (big_ && mpz_fits_slong_p(big_->get_num_mpz_t()) &&
      mpz_fits_slong_p(big_->get_den_mpz_t())) {
    num_ = big_->get_num().get_si();
    den_ = big_->get_den().get_si();
    big_.reset();
  }
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num_text, true) || !valid_integer(den_text, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_string(num_text);
  if (!num_string.empty() && num_string[0] == '+') num_string.erase(0, 1);
  mpz_class numerator(num_string, 10);
  mpz_class denominator(std::string(den_text), 10);
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(numerator, denominator);
}

std::string Rational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_from_i64(num_); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_from_i64(den_); }

std::optional<std::int64_t> Rational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) {
    Rational result;
    result.assign_big(mpq_class(1) / *big_);
    return result;
  }
  return Rational(den_, num_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_class n = numerator();
  mpz_class d = denominator();
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Rational Rational::operator-() const {
  if (big_ || num_ == INT64_MIN) {
    Rational result;
    result.assign_big(-to_mpq());
    return result;
  }
  Rational result;
  result.num_ = -num_;
  result.den_ = den_;
  return result;
}

Rational& Rational::operator+=(Rational const& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, rhs.num_, &sum)) {
        num_ = sum;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    auto g = static_cast<i128>(gcd128(abs128(n), static_cast<u128>(d)));
    n /= g;
    d /= g;
    if (fits_int64(n) && fits_int64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(Rational const& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(Rational const& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t product;
      if (!__builtin_mul_overflow(num_, rhs.num_, &product)) {
        num_ = product;
        return *this;
      }
    }
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    auto g1 = static_cast<std::int64_t>(std::gcd(uabs64(num_), uabs64(rhs.den_)));
    auto g2 = static_cast<std::int64_t>(std::gcd(uabs64(rhs.num_), uabs64(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits_int64(n) && fits_int64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(Rational const& rhs) { return *this *= rhs.inverse(); }

void Rational::fused_multiply_add(Rational& acc, Rational const& a, Rational const& b) {
  if (!acc.big_ && !a.big_ && !b.big_ && acc.den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    std::int64_t product;
    std::int64_t sum;
    if (!__builtin_mul_overflow(a.num_, b.num_, &product) &&
        !__builtin_add_overflow(acc.num_, product, &sum)) {
      acc.num_ = sum;
      return;
    }
  }
  acc += a * b;
}

bool operator==(Rational const& lhs, Rational const& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;  // canonical form: a big value never equals a small one
}

std::strong_ordering operator<=>(Rational const& lhs, Rational const& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(to_string());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, Rational const& value) {
  return os << value.to_string();
}

Rational binomial(std::int64_t n, std::int64_t m) {
  if (m < 0) throw std::domain_error("binomial: negative m");
  Rational result(1);
  for (std::int64_t k = 0; k < m; ++k) {
    result *= Rational(n - k);
    result /= Rational(k + 1);
  }
  return result;
}

}  // namespace chevalley
