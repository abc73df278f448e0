#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "divlie/error.hpp"
#include "divlie/rational.hpp"

namespace divlie {

/// Element a + b i of the Gaussian extension of an exact field T.
///
/// Every product checks the imaginary parts first, so purely real data (the
/// common case for structure constants) costs one multiplication in T.
template <typename T>
class Gaussian {
 public:
  using value_type = T;

  Gaussian() = default;
  Gaussian(int re) : re_(re) {}
  Gaussian(long re) : re_(re) {}
  Gaussian(long long re) : re_(re) {}
  Gaussian(T re) : re_(std::move(re)) {}
  Gaussian(T re, T im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(T(0), T(1)); }

  const T& real() const noexcept { return re_; }
  const T& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  T norm() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      if (!im_.is_zero()) im_ *= o.re_;
      return *this;
    }
    if (im_.is_zero()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
      return *this;
    }
    T re = re_ * o.re_ - im_ * o.im_;
    T im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      if (!im_.is_zero()) im_ /= o.re_;
      return *this;
    }
    T n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "re", "re+imi", "imi" with rational parts, e.g. "1/2-3i".
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string im;
    if (im_ == T(1)) {
      im = "i";
    } else if (im_ == T(-1)) {
      im = "-i";
    } else {
      im = im_.str() + "i";
    }
    if (re_.is_zero()) return im;
    if (im.front() != '-') im = "+" + im;
    return re_.str() + im;
  }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.str(); }

 private:
  T re_{};
  T im_{};
};

/// The coefficient field of the library: exact Gaussian rationals.
using Scalar = Gaussian<Rational>;

/// Parses "3", "-1/3", "i", "2-i", "1/2+3/4i".
Scalar parse_scalar(std::string_view text);

}  // namespace divlie

namespace Eigen {

template <>
struct NumTraits<divlie::Rational> : GenericNumTraits<divlie::Rational> {
  using Real = divlie::Rational;
  using NonInteger = divlie::Rational;
  using Literal = divlie::Rational;
  using Nested = divlie::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<divlie::Scalar> : GenericNumTraits<divlie::Scalar> {
  using Real = divlie::Scalar;
  using NonInteger = divlie::Scalar;
  using Literal = divlie::Scalar;
  using Nested = divlie::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
