#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ricci {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates and narrowed back to
/// 64 bits; a result that does not fit throws std::overflow_error rather
/// than wrapping. Every curvature, bound and transport cost in this library
/// is a Rational, so equality comparisons between computation routes are
/// exact.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q" in lowest terms; zero is "0/1".
  std::string to_string() const;

  /// Parses "p/q", "p", or a finite decimal such as "-0.375".
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (r)_+ = max(r, 0).
inline Rational positive_part(const Rational& r) { return r < Rational(0) ? Rational(0) : r; }

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace ricci
