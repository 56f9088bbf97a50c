#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chevalley {

// Exact rational number. Values whose numerator and denominator fit in
// int64 are stored inline; anything larger spills to a GMP rational. The
// representation is always canonical: denominator > 0, lowest terms, and a
// value that fits inline is never stored in the big form.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int value) noexcept : num_(value) {}                // NOLINT
  Rational(long value) noexcept : num_(value) {}               // NOLINT
  Rational(long long value) noexcept : num_(value) {}          // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpz_class const& value);
  explicit Rational(mpq_class const& value);
  Rational(mpz_class const& numerator, mpz_class const& denominator);

  Rational(Rational const& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(Rational const& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  // "p/q" in lowest terms, "p" when q == 1.
  std::string to_string() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::optional<std::int64_t> to_int64() const;

  Rational inverse() const;
  Rational pow(long exponent) const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  // Largest integer <= value.
  mpz_class floor() const;

  Rational operator-() const;
  Rational& operator+=(Rational const& rhs);
  Rational& operator-=(Rational const& rhs);
  Rational& operator*=(Rational const& rhs);
  Rational& operator/=(Rational const& rhs);

  friend Rational operator+(Rational lhs, Rational const& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, Rational const& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, Rational const& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, Rational const& rhs) { return lhs /= rhs; }

  friend bool operator==(Rational const& lhs, Rational const& rhs);
  friend std::strong_ordering operator<=>(Rational const& lhs, Rational const& rhs);

  // acc += a * b without materialising the temporary when everything is small.
  static void fused_multiply_add(Rational& acc, Rational const& a, Rational const& b);

  std::size_t hash() const;

 private:
  void assign_big(mpq_class&& value);
  void normalize_big();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, Rational const& value);

// Generalised binomial coefficient n(n-1)...(n-m+1)/m! for integer n, m >= 0.
Rational binomial(std::int64_t n, std::int64_t m);

}  // namespace chevalley

template <>
struct std::hash<chevalley::Rational> {
  std::size_t operator()(chevalley::Rational const& value) const { return value.hash(); }
};
