#pragma once

#include <string>
#include <vector>

#include "weylgk/rootsys.hpp"
#include "weylgk/signed_perm.hpp"
#include "weylgk/tableau.hpp"

namespace weylgk {

enum class CosetKind { Integral, HalfIntegral, Generic };
enum class SubsystemTag { A, B, C, D, Empty };

/// One orthogonal block of the integral root system of a weight.
/// For B/C/D the block collects coordinates in z + Z (`members`) and in
/// -z + Z (`partners`), with z = min(f, 1 - f), f the fractional part.
/// For A the block collects coordinates with equal fractional part z and
/// `partners` stays empty.
struct CosetClass {
  CosetKind kind;
  Rational z;
  std::vector<int> members;   // 1-based indices, ascending
  std::vector<int> partners;  // 1-based indices, ascending
  SubsystemTag tag;
};

std::string to_string(SubsystemTag t);

/// Classes ordered by z ascending.
std::vector<CosetClass> coset_decompose(const WeylType& type, const RationalVector& weight);

/// z in {0, 1/2}: coordinates over `members` in index order.
/// Generic z: members ascending, then the negated partners in descending index order.
Sequence lambda_z_sequence(const CosetClass& cls, const RationalVector& weight);

/// Roots of the block, realized in the coordinates of the ambient type.
std::vector<Root> materialize(const WeylType& type, const CosetClass& cls);

/// Contribution of one class to the a-value: F_a, F_b or F_d of its sequence
/// according to the ambient type and the class kind.
Integer class_a_value(const WeylType& type, const CosetClass& cls, const RationalVector& weight);

/// GK dimension of the simple highest weight module L(weight) (highest
/// weight weight - rho) for a classical type.
/// Throws Error(RankMismatch) if the weight has the wrong length.
Integer gkdim(const WeylType& type, const RationalVector& weight);

/// Root system matching the Weyl type (A uses R^n).
RootSystem classical_root_system(const WeylType& type);

}  // namespace weylgk
