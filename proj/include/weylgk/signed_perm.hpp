#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weylgk/rational.hpp"
#include "weylgk/tableau.hpp"

namespace weylgk {

enum class Family { A, B, C, D };

/// A classical Weyl group. `n` is the window length of its elements: the
/// group A(n-1) acts on n letters, B(n), C(n), D(n) on n signed letters.
struct WeylType {
  Family family;
  int n;

  int rank() const noexcept { return family == Family::A ? n - 1 : n; }
  /// |Phi+| of the root system.
  Integer positive_root_count() const noexcept;

  friend bool operator==(const WeylType&, const WeylType&) = default;
};

char family_letter(Family f) noexcept;
/// Accepts "A", "B", "C", "D" (case-insensitive).
Family parse_family(std::string_view text);
std::string to_string(const WeylType& t);

/// Element of the hyperoctahedral group W_n, given by its window
/// (w(1), ..., w(n)); w(-i) = -w(i).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws Error(InvalidArgument) unless {|w(i)|} = {1..n}.
  explicit SignedPermutation(std::vector<int> window);
  SignedPermutation(std::initializer_list<int> window)
      : SignedPermutation(std::vector<int>(window)) {}

  static SignedPermutation identity(int n);
  /// t = (-1, 2, ..., n).
  static SignedPermutation sign_generator(int n);
  /// s_i swaps the values i and i+1, 1 <= i < n.
  static SignedPermutation simple_transposition(int n, int i);
  /// u = t s_1 t, the extra generator of W'_n.
  static SignedPermutation d_generator(int n);
  /// The element -id.
  static SignedPermutation negation(int n);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }
  /// w(i) for i in [-n, n] \ {0}.
  int operator()(int i) const noexcept {
    return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
                 : -window_[static_cast<std::size_t>(-i - 1)];
  }

  int negative_count() const noexcept;
  bool is_even() const noexcept { return negative_count() % 2 == 0; }
  bool is_unsigned() const noexcept { return negative_count() == 0; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

/// Parses "3,4,-1,5,2".
SignedPermutation parse_window(std::string_view text);

/// (u o v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);
SignedPermutation left_multiply_t(const SignedPermutation& w);
SignedPermutation right_multiply_t(const SignedPermutation& w);

bool in_group(const SignedPermutation& w, const WeylType& type) noexcept;
/// Coxeter length in the group of the given type, by inversion counts.
Integer length(const SignedPermutation& w, const WeylType& type);

/// Coxeter generators in the order used by parabolic sweeps:
/// A: s_1..s_{n-1}; B/C: t, s_1..s_{n-1}; D: u, s_1..s_{n-1}.
std::vector<SignedPermutation> coxeter_generators(const WeylType& type);

/// Guard on exhaustive enumeration (B/C/D: n <= 6, A: n <= 8).
inline constexpr int kMaxSignedEnumerationRank = 6;
inline constexpr int kMaxUnsignedEnumerationRank = 8;

/// Visits every element of the group exactly once, in lexicographic window order.
void for_each_element(const WeylType& type,
                      const std::function<void(const SignedPermutation&)>& visit);
std::vector<SignedPermutation> enumerate(const WeylType& type);

Sequence mirror_left(const Sequence& x);
Sequence mirror_right(const Sequence& x);
Sequence to_sequence(const SignedPermutation& w);

/// Linear action on h*, w(e_{n+1-k}) = sgn(w(k)) e_{n+1-|w(k)|}.
RationalVector act_on_weight(const SignedPermutation& w, const RationalVector& weight);

}  // namespace weylgk
