#include "weylgk/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "weylgk/error.hpp"

namespace weylgk {

YoungTableau::YoungTableau(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw Error(ErrorCode::MalformedTableau, "empty tableau row");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw Error(ErrorCode::MalformedTableau, "row longer than the row above");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c] < row[c - 1])
        throw Error(ErrorCode::MalformedTableau, "row not weakly increasing");
      if (r > 0 && !(rows_[r - 1][c] < row[c]))
        throw Error(ErrorCode::MalformedTableau, "column not strictly increasing");
    }
  }
}

Partition YoungTableau::shape() const {
  std::vector<Integer> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<Integer>(row.size()));
  return Partition(std::move(parts));
}

void YoungTableau::insert(const Rational& v) {
  Rational carry = v;
  for (auto& row : rows_) {
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return;
    }
    std::swap(*it, carry);
  }
  rows_.push_back({carry});
}

std::string render(const YoungTableau& t) {
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << to_string(row[c]);
    os << '\n';
  }
  return os.str();
}

YoungTableau rs_insert(const Sequence& x) {
  YoungTableau t;
  for (const auto& v : x) t.insert(v);
  return t;
}

Partition rs_shape(const Sequence& x) { return rs_insert(x).shape(); }

Integer f_a(const Sequence& x) { return weighted_parity_sum(rs_shape(x), RowWeight::Plain); }
Integer f_b(const Sequence& x) { return weighted_parity_sum(rs_shape(x), RowWeight::Odd); }
Integer f_d(const Sequence& x) { return weighted_parity_sum(rs_shape(x), RowWeight::Even); }

namespace {

enum class ChainKind { WeaklyIncreasing, StrictlyDecreasing };

// best[k] = largest subset coverable by k chains, for k = 0..n.
std::vector<Integer> greene_profile(const Sequence& x, ChainKind kind, std::size_t max_length) {
  const std::size_t n = x.size();
  if (n > max_length)
    throw Error(ErrorCode::GuardViolation, "Greene oracle: sequence longer than the cap");
  const std::size_t full = std::size_t{1} << n;

  auto related = [&](std::size_t i, std::size_t j) {  // i < j
    return kind == ChainKind::WeaklyIncreasing ? x[i] <= x[j] : x[i] > x[j];
  };

  // A subset is a chain iff consecutive chosen positions are related.
  std::vector<char> is_chain(full, 0);
  for (std::size_t mask = 0; mask < full; ++mask) {
    bool ok = true;
    std::size_t prev = n;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (prev != n && !related(prev, i)) ok = false;
      prev = i;
    }
    is_chain[mask] = ok;
  }

  // Minimal number of disjoint chains covering each subset.
  constexpr int kInf = 1 << 20;
  std::vector<int> cover(full, kInf);
  cover[0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest = mask ^ low;
    // Enumerate chains containing the lowest element.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t chain = sub | low;
      if (is_chain[chain]) cover[mask] = std::min(cover[mask], 1 + cover[mask ^ chain]);
      if (sub == 0) break;
    }
  }

  std::vector<Integer> best(n + 1, 0);
  for (std::size_t mask = 0; mask < full; ++mask) {
    const auto size = static_cast<Integer>(std::popcount(mask));
    for (std::size_t k = static_cast<std::size_t>(cover[mask]); k <= n; ++k)
      best[k] = std::max(best[k], size);
  }
  return best;
}

Integer greene(const Sequence& x, std::size_t k, std::size_t max_length, ChainKind kind) {
  if (k < 1 || k > x.size()) throw Error(ErrorCode::OutOfRange, "Greene oracle: k out of range");
  return greene_profile(x, kind, max_length)[k];
}

}  // namespace

Integer greene_c(const Sequence& x, std::size_t k, std::size_t max_length) {
  return greene(x, k, max_length, ChainKind::WeaklyIncreasing);
}

Integer greene_d(const Sequence& x, std::size_t k, std::size_t max_length) {
  return greene(x, k, max_length, ChainKind::StrictlyDecreasing);
}

bool order_equivalent(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::RankMismatch, "order_equivalent: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] <= x[j] && !(y[i] < y[j])) return false;
      if (x[i] > x[j] && !(y[i] > y[j])) return false;
    }
  return true;
}

Sequence reverse_negate(const Sequence& x) {
  Sequence out;
  out.reserve(x.size());
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  return out;
}

}  // namespace weylgk
