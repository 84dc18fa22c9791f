#pragma once

#include <string>
#include <vector>

#include "weylgk/rational.hpp"

namespace weylgk {

enum class RootType { A, B, C, D, E6, E7 };

using Root = RationalVector;

/// Standard bilinear form.
Rational dot(const RationalVector& a, const RationalVector& b);

/// <weight, root^vee> = 2(weight, root)/(root, root).
/// Throws Error(RankMismatch) on a dimension mismatch.
Rational pairing(const RationalVector& weight, const Root& root);

/// s_root(v) = v - <v, root^vee> root.
RationalVector reflect(const RationalVector& v, const Root& root);

/// Explicit realization. Classical types live in R^n with
/// alpha_i = e_i - e_{i+1} and last simple root e_n, 2e_n or e_{n-1}+e_n;
/// A_{r} lives in R^{r+1}. E6 and E7 live in R^8.
class RootSystem {
 public:
  /// Throws Error(Unsupported) for unsupported type/rank.
  static RootSystem build(RootType type, int rank);

  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept { return dimension_; }

  const std::vector<Root>& simple() const noexcept { return simple_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const std::vector<Root>& positive() const noexcept { return positive_; }

  /// Coordinates of a root in the basis of simple roots.
  RationalVector simple_coordinates(const RationalVector& v) const;
  bool contains(const RationalVector& v) const;
  bool is_positive_root(const RationalVector& v) const;

 private:
  RootType type_{};
  int rank_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Root> simple_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::vector<RationalVector> inverse_gram_;
};

std::string to_string(RootType t);

/// Half the sum of positive roots.
RationalVector rho(const RootSystem& r);

/// Positive roots pairing strictly positively with the weight.
std::vector<Root> psi_plus(const RootSystem& r, const RationalVector& weight);

/// Roots with integral pairing against the weight.
std::vector<Root> integral_subsystem(const RootSystem& r, const RationalVector& weight);

/// True iff every root pairs integrally with the weight.
bool is_integral(const RootSystem& r, const RationalVector& weight);

/// E-type simple root alpha_k (1-based, Bourbaki labels).
Root e_simple_root(int k);

}  // namespace weylgk
