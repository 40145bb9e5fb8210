#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace manna {

// Exact rational over 64-bit integers. Always kept in lowest terms with a
// positive denominator; zero is 0/1. Arithmetic whose reduced result falls
// outside the 64-bit range throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(long long value) noexcept : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { *this = reduce(num, den); }

  long long numerator() const noexcept { return num_; }
  long long denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integral() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;  // num_ > LLONG_MIN is guaranteed by reduce()
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduce(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                  i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  // Accepts an optionally signed integer "p" or a fraction "p/q" with q > 0.
  static Rational parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'"); };
    std::string_view head = text;
    std::string_view tail;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      head = text.substr(0, slash);
      tail = text.substr(slash + 1);
      if (tail.empty()) bad();
    }
    long long num = 0;
    long long den = 1;
    if (!head.empty() && head.front() == '+') head.remove_prefix(1);
    auto [hp, he] = std::from_chars(head.data(), head.data() + head.size(), num);
    if (he != std::errc{} || hp != head.data() + head.size() || head.empty()) bad();
    if (!tail.empty()) {
      auto [tp, te] = std::from_chars(tail.data(), tail.data() + tail.size(), den);
      if (te != std::errc{} || tp != tail.data() + tail.size() || den <= 0) bad();
    }
    return Rational(num, den);
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) noexcept {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) {
      throw std::overflow_error("rational: value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace manna
