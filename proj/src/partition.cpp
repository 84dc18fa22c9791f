#include "weylgk/partition.hpp"

#include <numeric>
#include <ostream>

#include "weylgk/error.hpp"

namespace weylgk {

Partition::Partition(std::vector<Integer> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::InvalidArgument, "partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Integer Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Integer{0});
}

Integer Partition::prefix_sum(std::size_t k) const noexcept {
  Integer s = 0;
  for (std::size_t i = 0; i < k && i < parts_.size(); ++i) s += parts_[i];
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

Partition transpose(const Partition& p) {
  if (p.empty()) return {};
  std::vector<Integer> cols(static_cast<std::size_t>(p.row(1)), 0);
  for (Integer part : p.parts())
    for (Integer j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

ParityProfile row_parity(const Partition& p) {
  ParityProfile out;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    const Integer len = p.row(i);
    const Integer ceil_half = (len + 1) / 2;
    const Integer floor_half = len / 2;
    // Row i starts at box (i,1), which is even iff i is odd.
    out.even_counts.push_back(i % 2 == 1 ? ceil_half : floor_half);
    out.odd_counts.push_back(i % 2 == 1 ? floor_half : ceil_half);
  }
  return out;
}

Integer column_parity_count(Integer column_length, Integer column_index, BoxParity parity) {
  if (column_length < 0 || column_index < 1)
    throw Error(ErrorCode::InvalidArgument, "column_parity_count: bad column");
  // Box (1, j) has parity of 1 + j; counts alternate down the column.
  const bool top_is_even = (1 + column_index) % 2 == 0;
  const bool want_even = parity == BoxParity::Even;
  return top_is_even == want_even ? (column_length + 1) / 2 : column_length / 2;
}

Integer weighted_parity_sum(const Partition& p, RowWeight weight) {
  const ParityProfile prof = row_parity(p);
  Integer sum = 0;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    Integer c = p.row(i);
    if (weight == RowWeight::Even) c = prof.even_counts[i - 1];
    if (weight == RowWeight::Odd) c = prof.odd_counts[i - 1];
    sum += static_cast<Integer>(i - 1) * c;
  }
  return sum;
}

}  // namespace weylgk
