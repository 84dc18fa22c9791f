#include "weylgk/symbols.hpp"

#include <algorithm>
#include <ostream>

#include "weylgk/error.hpp"

namespace weylgk {

namespace {

void check_row(const std::vector<Integer>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw Error(ErrorCode::InvalidArgument, "symbol entries must be nonnegative");
    if (i > 0 && row[i] <= row[i - 1])
      throw Error(ErrorCode::InvalidArgument, "symbol rows must strictly increase");
  }
}

std::vector<Integer> shift_row(const std::vector<Integer>& row) {
  std::vector<Integer> out{0};
  for (Integer v : row) out.push_back(v + 1);
  return out;
}

// Inverse of shift_row; caller guarantees row[0] == 0.
std::vector<Integer> unshift_row(const std::vector<Integer>& row) {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < row.size(); ++i) out.push_back(row[i] - 1);
  return out;
}

Integer pairwise_min_sum(const std::vector<Integer>& row) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    for (std::size_t j = i + 1; j < row.size(); ++j) s += std::min(row[i], row[j]);
  return s;
}

Integer cross_min_sum(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (Integer x : a)
    for (Integer y : b) s += std::min(x, y);
  return s;
}

void print_row(std::ostream& os, const std::vector<Integer>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
}

}  // namespace

BSymbol::BSymbol(std::vector<Integer> top, std::vector<Integer> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size() + 1)
    throw Error(ErrorCode::InvalidArgument, "B-symbol needs m+1 top and m bottom entries");
  check_row(top_);
  check_row(bottom_);
}

BSymbol BSymbol::reduced() const {
  BSymbol s = *this;
  while (!s.bottom_.empty() && s.top_[0] == 0 && s.bottom_[0] == 0) {
    s.top_ = unshift_row(s.top_);
    s.bottom_ = unshift_row(s.bottom_);
  }
  return s;
}

BSymbol BSymbol::shifted(int k) const {
  BSymbol s = *this;
  for (int i = 0; i < k; ++i) {
    s.top_ = shift_row(s.top_);
    s.bottom_ = shift_row(s.bottom_);
  }
  return s;
}

bool operator==(const BSymbol& a, const BSymbol& b) {
  const BSymbol ra = a.reduced(), rb = b.reduced();
  return ra.top_ == rb.top_ && ra.bottom_ == rb.bottom_;
}

DSymbol::DSymbol(std::vector<Integer> first, std::vector<Integer> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.size() != second_.size())
    throw Error(ErrorCode::InvalidArgument, "D-symbol rows must have equal length");
  check_row(first_);
  check_row(second_);
}

DSymbol DSymbol::canonical() const {
  DSymbol s = *this;
  while (!s.first_.empty() && s.first_[0] == 0 && s.second_[0] == 0) {
    s.first_ = unshift_row(s.first_);
    s.second_ = unshift_row(s.second_);
  }
  if (s.second_ < s.first_) std::swap(s.first_, s.second_);
  return s;
}

DSymbol DSymbol::shifted(int k) const {
  DSymbol s = *this;
  for (int i = 0; i < k; ++i) {
    s.first_ = shift_row(s.first_);
    s.second_ = shift_row(s.second_);
  }
  return s;
}

bool operator==(const DSymbol& a, const DSymbol& b) {
  const DSymbol ca = a.canonical(), cb = b.canonical();
  return ca.first_ == cb.first_ && ca.second_ == cb.second_;
}

std::ostream& operator<<(std::ostream& os, const BSymbol& s) {
  os << '[';
  print_row(os, s.top());
  os << " / ";
  print_row(os, s.bottom());
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const DSymbol& s) {
  os << '[';
  print_row(os, s.first());
  os << " / ";
  print_row(os, s.second());
  return os << ']';
}

BSymbol symb_b(const Partition& p, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "symb_b: m must be nonnegative");
  const auto rows = static_cast<std::size_t>(2 * m + 1);
  if (p.length() > rows)
    throw Error(ErrorCode::SymbolSplit, "symb_b: partition has more than 2m+1 rows");
  std::vector<Integer> top, bottom;
  for (std::size_t k = 1; k <= rows; ++k) {
    const Integer v = p.row(k) + static_cast<Integer>(rows) - static_cast<Integer>(k);
    if (v % 2 == 0)
      top.push_back(v / 2);
    else
      bottom.push_back((v - 1) / 2);
  }
  if (top.size() != static_cast<std::size_t>(m) + 1 || bottom.size() != static_cast<std::size_t>(m))
    throw Error(ErrorCode::SymbolSplit, "symb_b: parity split is not (m+1, m)");
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  return BSymbol(std::move(top), std::move(bottom));
}

Integer c_b(const BSymbol& s) {
  const auto m = static_cast<Integer>(s.m());
  return pairwise_min_sum(s.top()) + pairwise_min_sum(s.bottom()) +
         cross_min_sum(s.top(), s.bottom()) - m * (m - 1) * (4 * m + 1) / 6;
}

DSymbol b_to_d(const BSymbol& s) {
  return DSymbol(s.top(), shift_row(s.bottom())).canonical();
}

Integer c_d(const DSymbol& s) {
  const auto m = static_cast<Integer>(s.m());
  return pairwise_min_sum(s.first()) + pairwise_min_sum(s.second()) +
         cross_min_sum(s.first(), s.second()) - m * (m - 1) * (4 * m - 5) / 6;
}

}  // namespace weylgk
