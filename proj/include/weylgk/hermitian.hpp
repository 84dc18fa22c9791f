#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylgk/rational.hpp"
#include "weylgk/rootsys.hpp"
#include "weylgk/signed_perm.hpp"

namespace weylgk {

enum class HermitianFamily { SU, Sp, SOStar, SOOdd, SOEven, E6, E7 };

/// A real group of Hermitian type. SU(k, n-k) uses both parameters; the
/// exceptional groups ignore them.
class HermitianGroup {
 public:
  /// Throws Error(GuardViolation) on parameters outside the family's range:
  /// SU 1 <= k < n, Sp n >= 2, SO* n >= 4, SO(2,2n-1) n >= 3, SO(2,2n-2) n >= 4.
  HermitianGroup(HermitianFamily family, int n, int k = 0);

  static HermitianGroup e6() { return {HermitianFamily::E6, 8}; }
  static HermitianGroup e7() { return {HermitianFamily::E7, 8}; }

  HermitianFamily family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// Weight length: n for classical families, 8 for E6/E7.
  std::size_t weight_dimension() const noexcept;
  bool is_exceptional() const noexcept;
  /// Complexified Weyl type for classical families.
  WeylType weyl_type() const;

 private:
  HermitianFamily family_;
  int n_;
  int k_;
};

/// Accepts su, sp, sostar, soodd, soeven, e6, e7.
HermitianFamily parse_hermitian_family(std::string_view text);
std::string to_string(HermitianFamily f);

/// Rank r, constant c and h^vee - 1 of the Hermitian symmetric space.
struct HermitianConstants {
  int r;
  Rational c;
  int hcheck_minus_one;
};

HermitianConstants constants(const HermitianGroup& g);

/// dim of the closure of O_k: k(h^vee - 1) - k(k-1)c.
/// Throws Error(OutOfRange) unless 0 <= k <= r.
Integer orbit_dimension(const HermitianGroup& g, int k);

/// Positive compact roots, in the realization used by the GK dimension code.
std::vector<Root> compact_positive_roots(const HermitianGroup& g);

/// Phi_c^+-dominance: every compact positive root pairs to a positive integer.
/// Throws Error(RankMismatch) on a dimension mismatch.
bool is_hc_weight(const HermitianGroup& g, const RationalVector& weight);

struct OrbitResult {
  int orbit_index;
  Integer orbit_dim;
  std::optional<Integer> gk_crosscheck;
};

/// Orbit index k(lambda) of the associated variety of L(lambda), from the
/// closed-form case analysis of each family. For classical families the GK
/// dimension is computed independently and must agree with the orbit
/// dimension; a disagreement throws Error(Internal).
/// Throws Error(NotHcWeight) if the weight is not Phi_c^+-dominant.
OrbitResult orbit_index(const HermitianGroup& g, const RationalVector& weight);

/// Hardcoded root sets S_1, S_2 (E6) and S_1, S_2, S_3 (E7) of the
/// exceptional criterion; index 0 holds S_1.
std::vector<std::vector<Root>> exceptional_s_sets(HermitianFamily family);

}  // namespace weylgk
