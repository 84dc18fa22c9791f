#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "weylgk/rational.hpp"

namespace weylgk {

enum class BoxParity { Even, Odd };
enum class RowWeight { Plain, Even, Odd };

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Rows are 1-based in every accessor that takes an index.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(InvalidArgument) if parts are negative or increase.
  explicit Partition(std::vector<Integer> parts);
  Partition(std::initializer_list<Integer> parts)
      : Partition(std::vector<Integer>(parts)) {}

  const std::vector<Integer>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Integer size() const noexcept;

  /// p_i, 1-based; zero past the last row.
  Integer row(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  /// Sum of the first k rows.
  Integer prefix_sum(std::size_t k) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Integer> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct ParityProfile {
  std::vector<Integer> even_counts;
  std::vector<Integer> odd_counts;
};

/// Dual partition: the i-th part is the length of the i-th column.
Partition transpose(const Partition& p);

/// Per-row numbers of even and odd boxes, box (k,l) being even iff k+l is even.
ParityProfile row_parity(const Partition& p);

/// Number of boxes (k, column_index), k <= column_length, whose k + column_index
/// has the requested parity.
Integer column_parity_count(Integer column_length, Integer column_index, BoxParity parity);

/// sum_{i>=1} (i-1) c_i, where c_i is p_i, p_i^ev or p_i^odd.
Integer weighted_parity_sum(const Partition& p, RowWeight weight);

}  // namespace weylgk
