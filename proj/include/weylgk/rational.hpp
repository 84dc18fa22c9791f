#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylgk {

using Integer = std::int64_t;
namespace detail {
__extension__ typedef __int128 WideInteger;
}
/// Exact rational with 64-bit numerator and denominator, always in lowest
/// terms with a positive denominator. Arithmetic goes through 128-bit
/// intermediates; a result that does not fit throws Error(OutOfRange).
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(Integer n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(InvalidArgument) if den == 0.
  Rational(Integer num, Integer den);

  constexpr Integer numerator() const noexcept { return num_; }
  constexpr Integer denominator() const noexcept { return den_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return detail::WideInteger(a.num_) * b.den_ <=> detail::WideInteger(b.num_) * a.den_;
  }

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q" or a finite decimal such as "-4.1" into an exact rational.
/// Decimals are read base 10 directly, never through floating point.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "3.1,2.3,-4,1/2".
RationalVector parse_rational_list(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(std::span<const Rational> v);

bool is_integer(const Rational& r);
/// True iff 2r is an integer.
bool is_half_integral(const Rational& r);
/// Fractional part in [0, 1).
Rational frac(const Rational& r);
Integer floor_of(const Rational& r);

}  // namespace weylgk
