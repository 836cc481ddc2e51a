#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ou {

/// Exact fraction over 64-bit integers. Always stored in lowest terms with a
/// positive denominator, so structural equality is value equality.
///
/// Arithmetic is carried out in 128 bits and throws std::overflow_error if the
/// reduced result does not fit back into 64 bits.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of integer keys

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = reduce(num, den);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduce(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return reduce(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return reduce(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }
  Rational operator-() const { return reduce(-wide(num_), den_); }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  /// Accepts `p` or `p/q` with an optional leading sign on `p`.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  using wide_t = __int128;

  static constexpr wide_t wide(std::int64_t v) { return static_cast<wide_t>(v); }

  static wide_t gcd(wide_t a, wide_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational reduce(wide_t num, wide_t den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    wide_t g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_t lo = INT64_MIN;
    constexpr wide_t hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    wide_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
      v = v * 10 + (s[i] - '0');
      if (v > wide(INT64_MAX)) throw std::invalid_argument("number out of range '" + std::string(s) + "'");
    }
    return static_cast<std::int64_t>(neg ? -v : v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ou
