#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylgk/partition.hpp"
#include "weylgk/rational.hpp"

namespace weylgk {

using Sequence = std::vector<Rational>;

/// Row-insertion tableau. Rows weakly increase, columns strictly increase.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws Error(MalformedTableau) unless the tableau conditions hold.
  explicit YoungTableau(std::vector<std::vector<Rational>> rows);

  const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }
  Partition shape() const;

  /// Row insertion: v bumps the leftmost entry strictly greater than v.
  void insert(const Rational& v);

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// One row per line, entries space separated.
std::string render(const YoungTableau& t);

YoungTableau rs_insert(const Sequence& x);
Partition rs_shape(const Sequence& x);

// Lusztig-style statistics of the shape p(x).
Integer f_a(const Sequence& x);
Integer f_b(const Sequence& x);
Integer f_d(const Sequence& x);

/// Longest sequence lengths default cap for the exhaustive Greene oracle.
inline constexpr std::size_t kGreeneMaxLength = 12;

/// Exhaustive Greene statistics: the largest size of a subsequence that is a
/// union of k weakly increasing (greene_c) or strictly decreasing (greene_d)
/// subsequences. Independent of insertion; used to check rs_shape.
Integer greene_c(const Sequence& x, std::size_t k, std::size_t max_length = kGreeneMaxLength);
Integer greene_d(const Sequence& x, std::size_t k, std::size_t max_length = kGreeneMaxLength);

/// True iff y_i < y_j whenever x_i <= x_j and y_i > y_j whenever x_i > x_j
/// for all i < j.
bool order_equivalent(const Sequence& x, const Sequence& y);

Sequence reverse_negate(const Sequence& x);

}  // namespace weylgk
