#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace toricdiag {

namespace detail {

inline long long narrow_i128(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("exact arithmetic overflow past 64 bits");
  }
  return static_cast<long long>(v);
}

inline __int128 gcd_i128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Exact rational on 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates run through 128 bits; a result that does not fit 64 bits throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    *this = make(n, d);
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_,
                static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd_i128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow_i128(n);
    r.den_ = d == 0 ? 1 : detail::narrow_i128(d);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

// Element of Q(i), kept exact.
struct GaussianRational {
  Rational re;
  Rational im;

  constexpr GaussianRational() = default;
  constexpr GaussianRational(Rational r) : re(r) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  // i^k for k mod 4.
  static GaussianRational unit_phase(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {Rational(1), Rational(0)};
      case 1: return {Rational(0), Rational(1)};
      case 2: return {Rational(-1), Rational(0)};
      default: return {Rational(0), Rational(-1)};
    }
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conjugated() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational divided_by(const Rational& r) const { return {re / r, im / r}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    return re.str() + (im.is_negative() ? "" : "+") + im.str() + "i";
  }
};

// Dyadic rational num / 2^exp in reduced form (odd numerator or exp == 0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(long long numerator, unsigned log2_denominator)
      : num_(numerator), exp_(log2_denominator) {
    reduce();
  }
  static Dyadic from_integer(long long n) { return Dyadic(n, 0); }

  long long numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_nonnegative() const { return num_ >= 0; }
  bool is_integer() const { return exp_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    __int128 n = (static_cast<__int128>(a.num_) << (e - a.exp_)) +
                 (static_cast<__int128>(b.num_) << (e - b.exp_));
    return Dyadic(detail::narrow_i128(n), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  Dyadic operator-() const {
    Dyadic d;
    d.num_ = -num_;
    d.exp_ = exp_;
    return d;
  }
  Dyadic scaled(long long k) const {
    return Dyadic(detail::narrow_i128(static_cast<__int128>(num_) * k), exp_);
  }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (static_cast<__int128>(a.num_) << (e - a.exp_)) <=>
           (static_cast<__int128>(b.num_) << (e - b.exp_));
  }

  Rational to_rational() const { return Rational(num_, 1LL << exp_); }

  std::string str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(1LL << exp_);
  }

 private:
  void reduce() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && num_ % 2 == 0) {
      num_ /= 2;
      --exp_;
    }
  }

  long long num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace toricdiag
