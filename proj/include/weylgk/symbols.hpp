#pragma once

#include <iosfwd>
#include <vector>

#include "weylgk/partition.hpp"

namespace weylgk {

/// Lusztig symbol of type B: two strictly increasing rows of nonnegative
/// integers with m+1 and m entries. Compared through the shift equivalence
/// (0, top+1; 0, bottom+1) ~ (top; bottom).
class BSymbol {
 public:
  BSymbol() : top_{0} {}
  /// Throws Error(InvalidArgument) on bad row lengths or non-increasing rows.
  BSymbol(std::vector<Integer> top, std::vector<Integer> bottom);

  const std::vector<Integer>& top() const noexcept { return top_; }
  const std::vector<Integer>& bottom() const noexcept { return bottom_; }
  /// Number of bottom entries.
  std::size_t m() const noexcept { return bottom_.size(); }

  /// Representative with no common leading zero.
  BSymbol reduced() const;
  /// Applies the shift k times.
  BSymbol shifted(int k) const;

  friend bool operator==(const BSymbol& a, const BSymbol& b);

 private:
  std::vector<Integer> top_;
  std::vector<Integer> bottom_;
};

/// Lusztig symbol of type D: an unordered pair of strictly increasing rows of
/// equal length, modulo the same shift.
class DSymbol {
 public:
  DSymbol() = default;
  DSymbol(std::vector<Integer> first, std::vector<Integer> second);

  const std::vector<Integer>& first() const noexcept { return first_; }
  const std::vector<Integer>& second() const noexcept { return second_; }
  std::size_t m() const noexcept { return first_.size(); }

  /// Shift-reduced, rows in lexicographic order.
  DSymbol canonical() const;
  DSymbol shifted(int k) const;
  DSymbol swapped() const { return DSymbol(second_, first_); }

  friend bool operator==(const DSymbol& a, const DSymbol& b);

 private:
  std::vector<Integer> first_;
  std::vector<Integer> second_;
};

std::ostream& operator<<(std::ostream& os, const BSymbol& s);
std::ostream& operator<<(std::ostream& os, const DSymbol& s);

/// Symbol attached to a shape p (a partition of 2n) with p_{2m+2} = 0: the
/// numbers p_k + 2m + 1 - k, k <= 2m+1, split into m+1 even values (halved,
/// top row) and m odd values ((v-1)/2, bottom row).
/// Throws Error(SymbolSplit) when the parities do not split that way or p
/// has more than 2m+1 rows.
BSymbol symb_b(const Partition& p, int m);

Integer c_b(const BSymbol& s);
/// (top; 0, bottom+1).
DSymbol b_to_d(const BSymbol& s);
Integer c_d(const DSymbol& s);

}  // namespace weylgk
