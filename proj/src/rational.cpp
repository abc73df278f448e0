#include "divlie/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "divlie/error.hpp"

namespace divlie {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;

bool fits(__int128 v) { return v > kMin && v <= kMax; }

u128 uabs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      auto x = static_cast<std::uint64_t>(a);
      auto y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  u128 mag = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpz_class& z) { assign(mpq_class(z)); }

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(c);
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
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

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw ParseError("rational literal with zero denominator");
  q.canonicalize();
  Rational out;
  out.assign(q);
  return out;
}

void Rational::set_integer(std::int64_t v) noexcept {
  if (v == kMin) {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(to_mpz(v));
    return;
  }
  num_ = v;
  den_ = 1;
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = q;
  } else {
    big_ = std::make_unique<mpq_class>(q);
  }
}

void Rational::assign_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q{to_mpz(num), to_mpz(den)};
  assign(q);
}

bool Rational::is_integer() const noexcept {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign_wide(n, d);
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_sub_overflow(num_, rhs.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign_wide(n, d);
    return *this;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0) return *this;
    if (rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, rhs.num_, &r) && r != kMin) {
        num_ = r;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * rhs.num_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    assign_wide(n, d);
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (!big_ && !rhs.big_) {
    __int128 n = static_cast<__int128>(num_) * rhs.den_;
    __int128 d = static_cast<__int128>(den_) * rhs.num_;
    assign_wide(n, d);
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in representation only when values differ
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace divlie
