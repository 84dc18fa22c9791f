#include "weylgk/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include "weylgk/error.hpp"

namespace weylgk {

Integer WeylType::positive_root_count() const noexcept {
  const Integer m = n;
  switch (family) {
    case Family::A: return m * (m - 1) / 2;
    case Family::B:
    case Family::C: return m * m;
    case Family::D: return m * m - m;
  }
  return 0;
}

char family_letter(Family f) noexcept {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Weyl type '" + std::string(text) + "'");
}

std::string to_string(const WeylType& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank());
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<char> seen(window_.size() + 1, 0);
  for (int v : window_) {
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (v == 0 || a > window_.size() || seen[a])
      throw Error(ErrorCode::InvalidArgument,
                  "window entries must have distinct absolute values 1..n");
    seen[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::sign_generator(int n) {
  auto w = identity(n).window_;
  w[0] = -1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw Error(ErrorCode::OutOfRange, "s_i needs 1 <= i < n");
  auto w = identity(n).window_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::d_generator(int n) {
  const auto t = sign_generator(n);
  return compose(compose(t, simple_transposition(n, 1)), t);
}

SignedPermutation SignedPermutation::negation(int n) {
  auto w = identity(n).window_;
  for (int& v : w) v = -v;
  return SignedPermutation(std::move(w));
}

int SignedPermutation::negative_count() const noexcept {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
  os << '(';
  for (std::size_t i = 0; i < w.window().size(); ++i) os << (i ? "," : "") << w.window()[i];
  return os << ')';
}

SignedPermutation parse_window(std::string_view text) {
  std::vector<int> w;
  for (const Rational& r : parse_rational_list(text)) {
    if (!is_integer(r)) throw Error(ErrorCode::InvalidArgument, "window entries must be integers");
    w.push_back(static_cast<int>(r.numerator()));
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::RankMismatch, "compose: rank mismatch");
  std::vector<int> w(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) {
    const int v = w(i);
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation left_multiply_t(const SignedPermutation& w) {
  auto win = w.window();
  for (int& v : win)
    if (std::abs(v) == 1) v = -v;
  return SignedPermutation(std::move(win));
}

SignedPermutation right_multiply_t(const SignedPermutation& w) {
  auto win = w.window();
  if (!win.empty()) win[0] = -win[0];
  return SignedPermutation(std::move(win));
}

bool in_group(const SignedPermutation& w, const WeylType& type) noexcept {
  if (w.size() != type.n) return false;
  switch (type.family) {
    case Family::A: return w.is_unsigned();
    case Family::B:
    case Family::C: return true;
    case Family::D: return w.is_even();
  }
  return false;
}

Integer length(const SignedPermutation& w, const WeylType& type) {
  if (!in_group(w, type))
    throw Error(ErrorCode::NotInGroup, "length: element not in the group " + to_string(type));
  const auto& x = w.window();
  Integer inv = 0, neg_sum_pairs = 0, neg = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) ++neg;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] > x[j]) ++inv;
      if (x[i] + x[j] < 0) ++neg_sum_pairs;
    }
  }
  switch (type.family) {
    case Family::A: return inv;
    case Family::B:
    case Family::C: return inv + neg_sum_pairs + neg;
    case Family::D: return inv + neg_sum_pairs;
  }
  return 0;
}

std::vector<SignedPermutation> coxeter_generators(const WeylType& type) {
  std::vector<SignedPermutation> gens;
  if (type.family == Family::B || type.family == Family::C)
    gens.push_back(SignedPermutation::sign_generator(type.n));
  if (type.family == Family::D && type.n >= 2) gens.push_back(SignedPermutation::d_generator(type.n));
  for (int i = 1; i < type.n; ++i) gens.push_back(SignedPermutation::simple_transposition(type.n, i));
  return gens;
}

namespace {

void enumerate_from(const WeylType& type, std::vector<int>& prefix, std::vector<char>& used,
                    const std::function<void(const SignedPermutation&)>& visit) {
  const int n = type.n;
  if (static_cast<int>(prefix.size()) == n) {
    SignedPermutation w(prefix);
    if (in_group(w, type)) visit(w);
    return;
  }
  const bool signed_letters = type.family != Family::A;
  for (int v = signed_letters ? -n : 1; v <= n; ++v) {
    if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
    used[static_cast<std::size_t>(std::abs(v))] = 1;
    prefix.push_back(v);
    enumerate_from(type, prefix, used, visit);
    prefix.pop_back();
    used[static_cast<std::size_t>(std::abs(v))] = 0;
  }
}

}  // namespace

void for_each_element(const WeylType& type,
                      const std::function<void(const SignedPermutation&)>& visit) {
  const int cap =
      type.family == Family::A ? kMaxUnsignedEnumerationRank : kMaxSignedEnumerationRank;
  if (type.n < 1 || type.n > cap)
    throw Error(ErrorCode::GuardViolation, "enumerate: n outside [1, " + std::to_string(cap) + "]");
  std::vector<int> prefix;
  std::vector<char> used(static_cast<std::size_t>(type.n) + 1, 0);
  enumerate_from(type, prefix, used, visit);
}

std::vector<SignedPermutation> enumerate(const WeylType& type) {
  std::vector<SignedPermutation> out;
  for_each_element(type, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

Sequence mirror_left(const Sequence& x) {
  Sequence out;
  out.reserve(2 * x.size());
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

Sequence mirror_right(const Sequence& x) {
  Sequence out(x);
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  return out;
}

Sequence to_sequence(const SignedPermutation& w) {
  Sequence out;
  out.reserve(w.window().size());
  for (int v : w.window()) out.emplace_back(v);
  return out;
}

RationalVector act_on_weight(const SignedPermutation& w, const RationalVector& weight) {
  const auto n = static_cast<std::size_t>(w.size());
  if (weight.size() != n) throw Error(ErrorCode::RankMismatch, "act_on_weight: dimension mismatch");
  RationalVector out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const int v = w(static_cast<int>(k));
    const auto target = n - static_cast<std::size_t>(std::abs(v));  // index of e_{n+1-|w(k)|}
    const Rational coeff = weight[n - k];                            // coefficient of e_{n+1-k}
    out[target] = v > 0 ? coeff : -coeff;
  }
  return out;
}

}  // namespace weylgk
