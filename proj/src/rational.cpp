#include "weylgk/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "weylgk/error.hpp"

namespace weylgk {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::NotInGroup: return "not_in_group";
    case ErrorCode::DuplicateLabel: return "duplicate_label";
    case ErrorCode::MalformedTableau: return "malformed_tableau";
    case ErrorCode::SymbolSplit: return "symbol_split";
    case ErrorCode::NotHcWeight: return "not_hc_weight";
    case ErrorCode::GuardViolation: return "guard_violation";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument, "unparseable rational '" + std::string(text) + "'");
}

Integer parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad(whole);
  Integer v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) bad(whole);
  return v;
}

using Wide = detail::WideInteger;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void normalize(Wide& num, Wide& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Integer narrow(Wide v) {
  if (v > std::numeric_limits<Integer>::max() || v < -std::numeric_limits<Integer>::max())
    throw Error(ErrorCode::OutOfRange, "rational arithmetic overflow");
  return static_cast<Integer>(v);
}

}  // namespace

Rational::Rational(Integer num, Integer den) {
  Wide n = num, d = den;
  normalize(n, d);
  num_ = narrow(n);
  den_ = narrow(d);
}

namespace {

Rational make(Wide num, Wide den) {
  normalize(num, den);
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational& Rational::operator+=(const Rational& o) {
  return *this = make(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = make(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = make(Wide(num_) * o.num_, Wide(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return *this = make(Wide(num_) * o.den_, Wide(den_) * o.num_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) bad(whole);

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_digits(text.substr(0, slash), whole);
    const Integer den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) bad(whole);
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad(whole);
    if (frac_part.size() > 17) bad(whole);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const Integer ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    const Integer fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    value = Rational(ip) + Rational(fp, scale);
  } else {
    value = Rational(parse_digits(text, whole));
  }
  return negative ? -value : value;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

bool is_half_integral(const Rational& r) {
  return r.denominator() == 1 || r.denominator() == 2;
}

Integer floor_of(const Rational& r) {
  const Integer q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

}  // namespace weylgk
