#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace divlie {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in int64 are stored
/// inline; anything larger spills to a heap-allocated mpq_class. The two
/// representations are interchangeable: every result is demoted back to the
/// inline form when it fits, so equality can compare representations directly.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : num_(v) {}
  Rational(long v) noexcept { set_integer(static_cast<std::int64_t>(v)); }
  Rational(long long v) noexcept { set_integer(static_cast<std::int64_t>(v)); }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpz_class& z);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "a" or "a/b" with optional sign; the result is reduced.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  void set_integer(std::int64_t v) noexcept;
  void assign(const mpq_class& q);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace divlie
