#include "weylgk/rootsys.hpp"

#include <algorithm>
#include <set>

#include "weylgk/error.hpp"

namespace weylgk {

namespace {

Root unit(std::size_t dim, std::size_t i, Integer scale = 1) {
  Root r(dim, Rational(0));
  r[i] = Rational(scale);
  return r;
}

Root difference(std::size_t dim, std::size_t i, std::size_t j) {
  Root r(dim, Rational(0));
  r[i] = 1;
  r[j] = -1;
  return r;
}

std::vector<Root> classical_simple(RootType type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<Root> simple;
  if (type == RootType::A) {
    for (std::size_t i = 0; i < n; ++i) simple.push_back(difference(n + 1, i, i + 1));
    return simple;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(difference(n, i, i + 1));
  switch (type) {
    case RootType::B: simple.push_back(unit(n, n - 1)); break;
    case RootType::C: simple.push_back(unit(n, n - 1, 2)); break;
    case RootType::D:
      if (n >= 2) {
        Root r(n, Rational(0));
        r[n - 2] = 1;
        r[n - 1] = 1;
        simple.push_back(r);
      } else {
        simple.clear();
      }
      break;
    default: break;
  }
  return simple;
}

std::vector<RationalVector> invert(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  std::vector<RationalVector> inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Internal, "singular Gram matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "vector dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational pairing(const RationalVector& weight, const Root& root) {
  return 2 * dot(weight, root) / dot(root, root);
}

RationalVector reflect(const RationalVector& v, const Root& root) {
  const Rational c = pairing(v, root);
  RationalVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * root[i];
  return out;
}

Root e_simple_root(int k) {
  if (k < 1 || k > 8) throw Error(ErrorCode::OutOfRange, "E-type simple root index out of range");
  Root r(8, Rational(0));
  if (k == 1) {
    for (std::size_t i = 0; i < 8; ++i) r[i] = Rational(i == 0 || i == 7 ? 1 : -1, 2);
  } else if (k == 2) {
    r[0] = r[1] = 1;
  } else {
    r[static_cast<std::size_t>(k - 2)] = 1;
    r[static_cast<std::size_t>(k - 3)] = -1;
  }
  return r;
}

RootSystem RootSystem::build(RootType type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  switch (type) {
    case RootType::E6:
    case RootType::E7: {
      const int r = type == RootType::E6 ? 6 : 7;
      if (rank != r && rank != 0)
        throw Error(ErrorCode::Unsupported, "E6/E7 have fixed ranks 6 and 7");
      rs.rank_ = r;
      rs.dimension_ = 8;
      for (int k = 1; k <= r; ++k) rs.simple_.push_back(e_simple_root(k));
      break;
    }
    default:
      if (rank < (type == RootType::A ? 0 : 1))
        throw Error(ErrorCode::Unsupported, "rank out of range for " + to_string(type));
      rs.rank_ = rank;
      rs.dimension_ = static_cast<std::size_t>(type == RootType::A ? rank + 1 : rank);
      rs.simple_ = classical_simple(type, rank);
  }

  std::set<Root> all(rs.simple_.begin(), rs.simple_.end());
  std::vector<Root> frontier = rs.simple_;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& beta : frontier)
      for (const auto& alpha : rs.simple_) {
        Root image = reflect(beta, alpha);
        if (all.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  rs.roots_.assign(all.begin(), all.end());

  const std::size_t m = rs.simple_.size();
  std::vector<RationalVector> gram(m, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(rs.simple_[i], rs.simple_[j]);
  rs.inverse_gram_ = invert(std::move(gram));

  for (const auto& root : rs.roots_)
    if (rs.is_positive_root(root)) rs.positive_.push_back(root);
  if (rs.positive_.size() * 2 != rs.roots_.size())
    throw Error(ErrorCode::Internal, "positive system does not halve the roots");
  return rs;
}

RationalVector RootSystem::simple_coordinates(const RationalVector& v) const {
  const std::size_t m = simple_.size();
  RationalVector products(m);
  for (std::size_t j = 0; j < m; ++j) products[j] = dot(v, simple_[j]);
  RationalVector coords(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) coords[i] += inverse_gram_[i][j] * products[j];
  return coords;
}

bool RootSystem::contains(const RationalVector& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

bool RootSystem::is_positive_root(const RationalVector& v) const {
  if (!contains(v)) return false;
  for (const auto& c : simple_coordinates(v))
    if (c != 0) return c > 0;
  return false;
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
  }
  return "?";
}

RationalVector rho(const RootSystem& r) {
  RationalVector sum(r.dimension(), Rational(0));
  for (const auto& a : r.positive())
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a[i];
  for (auto& x : sum) x /= 2;
  return sum;
}

std::vector<Root> psi_plus(const RootSystem& r, const RationalVector& weight) {
  std::vector<Root> out;
  for (const auto& a : r.positive())
    if (pairing(weight, a) > 0) out.push_back(a);
  return out;
}

std::vector<Root> integral_subsystem(const RootSystem& r, const RationalVector& weight) {
  std::vector<Root> out;
  for (const auto& a : r.roots())
    if (is_integer(pairing(weight, a))) out.push_back(a);
  return out;
}

bool is_integral(const RootSystem& r, const RationalVector& weight) {
  for (const auto& a : r.positive())
    if (!is_integer(pairing(weight, a))) return false;
  return true;
}

}  // namespace weylgk
