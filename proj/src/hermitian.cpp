#include "weylgk/hermitian.hpp"

#include <algorithm>

#include "weylgk/error.hpp"
#include "weylgk/gkdim.hpp"
#include "weylgk/partition.hpp"
#include "weylgk/tableau.hpp"

namespace weylgk {

namespace {

const Rational kHalf(1, 2);

Root pair_root(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  Root r(n, Rational(0));
  r[i - 1] += si;
  r[j - 1] += sj;
  return r;
}

Root half_root(std::initializer_list<int> signs) {
  Root r;
  for (int s : signs) r.push_back(Rational(s, 2));
  return r;
}

Root e_root(std::size_t i, int si, std::size_t j, int sj) { return pair_root(8, i, si, j, sj); }

const RootSystem& e_system(HermitianFamily f) {
  static const RootSystem e6 = RootSystem::build(RootType::E6, 6);
  static const RootSystem e7 = RootSystem::build(RootType::E7, 7);
  return f == HermitianFamily::E6 ? e6 : e7;
}

// Index of the noncompact simple root in Bourbaki labels.
std::size_t noncompact_simple(HermitianFamily f) { return f == HermitianFamily::E6 ? 0 : 6; }

void check_dimension(const HermitianGroup& g, const RationalVector& weight) {
  if (weight.size() != g.weight_dimension())
    throw Error(ErrorCode::RankMismatch, "weight has " + std::to_string(weight.size()) +
                                             " coordinates, expected " +
                                             std::to_string(g.weight_dimension()));
}

Partition q_of_minus(const RationalVector& weight) {
  return transpose(rs_shape(mirror_right(weight)));
}

int exceptional_index(const HermitianGroup& g, const RationalVector& weight) {
  const RootSystem& rs = e_system(g.family());
  const int r = constants(g).r;
  if (!is_integral(rs, weight)) return r;
  const auto psi = psi_plus(rs, weight);
  auto hits = [&](const std::vector<Root>& s) {
    return std::any_of(s.begin(), s.end(), [&](const Root& a) {
      return std::find(psi.begin(), psi.end(), a) != psi.end();
    });
  };
  const auto sets = exceptional_s_sets(g.family());
  // sets[r-1] is the most restrictive; an intersection there gives orbit 0.
  for (int k = 0; k < r; ++k)
    if (hits(sets[static_cast<std::size_t>(r - 1 - k)])) return k;
  return r;
}

int classical_index(const HermitianGroup& g, const RationalVector& w) {
  const int n = g.n();
  const int r = constants(g).r;
  switch (g.family()) {
    case HermitianFamily::SU: {
      const Partition q = transpose(rs_shape(w));
      const bool integral = std::all_of(
          w.begin(), w.end(), [&](const Rational& x) { return is_integer(x - w.front()); });
      return integral ? static_cast<int>(q.row(2)) : r;
    }
    case HermitianFamily::Sp: {
      const Integer q2 = q_of_minus(w).row(2);
      int k = n;
      if (is_integer(w[0]))
        k = 2 * static_cast<int>(column_parity_count(q2, 2, BoxParity::Odd));
      else if (is_integer(w[0] + kHalf))
        k = 2 * static_cast<int>(column_parity_count(q2, 2, BoxParity::Even)) + 1;
      // The closed form can land on n+1, whose orbit dimension equals that of n.
      return std::min(k, r);
    }
    case HermitianFamily::SOStar: {
      if (!is_half_integral(w[0])) return r;
      return static_cast<int>(column_parity_count(q_of_minus(w).row(2), 2, BoxParity::Even));
    }
    case HermitianFamily::SOOdd: {
      const Rational d = w[0] - w[1];
      if (is_integer(d) && w[0] > w[1]) return 0;
      if (is_integer(d + kHalf) && w[0] > 0) return 1;
      return 2;
    }
    case HermitianFamily::SOEven: {
      const Rational d = w[0] - w[1];
      if (is_integer(d) && w[0] > w[1]) return 0;
      const Rational last = w.back() < 0 ? -w.back() : w.back();
      if (is_integer(d) && -last < w[0] && w[0] <= w[1]) return 1;
      return 2;
    }
    default: break;
  }
  throw Error(ErrorCode::Internal, "not a classical family");
}

}  // namespace

HermitianGroup::HermitianGroup(HermitianFamily family, int n, int k)
    : family_(family), n_(n), k_(k) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::GuardViolation, what);
  };
  switch (family) {
    case HermitianFamily::SU: require(k >= 1 && k < n, "SU(k,n-k) needs 1 <= k < n"); break;
    case HermitianFamily::Sp: require(n >= 2, "Sp(n,R) needs n >= 2"); break;
    case HermitianFamily::SOStar: require(n >= 4, "SO*(2n) needs n >= 4"); break;
    case HermitianFamily::SOOdd: require(n >= 3, "SO(2,2n-1) needs n >= 3"); break;
    case HermitianFamily::SOEven: require(n >= 4, "SO(2,2n-2) needs n >= 4"); break;
    case HermitianFamily::E6:
    case HermitianFamily::E7:
      n_ = 8;
      k_ = 0;
      break;
  }
}

std::size_t HermitianGroup::weight_dimension() const noexcept {
  return is_exceptional() ? 8 : static_cast<std::size_t>(n_);
}

bool HermitianGroup::is_exceptional() const noexcept {
  return family_ == HermitianFamily::E6 || family_ == HermitianFamily::E7;
}

WeylType HermitianGroup::weyl_type() const {
  switch (family_) {
    case HermitianFamily::SU: return {Family::A, n_};
    case HermitianFamily::Sp: return {Family::C, n_};
    case HermitianFamily::SOStar: return {Family::D, n_};
    case HermitianFamily::SOOdd: return {Family::B, n_};
    case HermitianFamily::SOEven: return {Family::D, n_};
    default: break;
  }
  throw Error(ErrorCode::Unsupported, "exceptional groups have no classical Weyl type");
}

HermitianFamily parse_hermitian_family(std::string_view text) {
  if (text == "su") return HermitianFamily::SU;
  if (text == "sp") return HermitianFamily::Sp;
  if (text == "sostar") return HermitianFamily::SOStar;
  if (text == "soodd") return HermitianFamily::SOOdd;
  if (text == "soeven") return HermitianFamily::SOEven;
  if (text == "e6") return HermitianFamily::E6;
  if (text == "e7") return HermitianFamily::E7;
  throw Error(ErrorCode::InvalidArgument, "unknown group family '" + std::string(text) + "'");
}

std::string to_string(HermitianFamily f) {
  switch (f) {
    case HermitianFamily::SU: return "su";
    case HermitianFamily::Sp: return "sp";
    case HermitianFamily::SOStar: return "sostar";
    case HermitianFamily::SOOdd: return "soodd";
    case HermitianFamily::SOEven: return "soeven";
    case HermitianFamily::E6: return "e6";
    case HermitianFamily::E7: return "e7";
  }
  return "?";
}

HermitianConstants constants(const HermitianGroup& g) {
  const int n = g.n();
  switch (g.family()) {
    case HermitianFamily::SU: return {std::min(g.k(), n - g.k()), Rational(1), n - 1};
    case HermitianFamily::Sp: return {n, Rational(1, 2), n};
    case HermitianFamily::SOStar: return {n / 2, Rational(2), 2 * n - 3};
    case HermitianFamily::SOOdd: return {2, Rational(2 * n - 3, 2), 2 * n - 2};
    case HermitianFamily::SOEven: return {2, Rational(n - 2), 2 * n - 3};
    case HermitianFamily::E6: return {2, Rational(3), 11};
    case HermitianFamily::E7: return {3, Rational(4), 17};
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

Integer orbit_dimension(const HermitianGroup& g, int k) {
  const HermitianConstants c = constants(g);
  if (k < 0 || k > c.r)
    throw Error(ErrorCode::OutOfRange, "orbit index must lie in [0, " + std::to_string(c.r) + "]");
  const Rational dim = Rational(k) * c.hcheck_minus_one - Rational(k) * (k - 1) * c.c;
  if (!is_integer(dim)) throw Error(ErrorCode::Internal, "non-integral orbit dimension");
  return dim.numerator();
}

std::vector<Root> compact_positive_roots(const HermitianGroup& g) {
  std::vector<Root> out;
  if (g.is_exceptional()) {
    const RootSystem& rs = e_system(g.family());
    const std::size_t nc = noncompact_simple(g.family());
    for (const auto& a : rs.positive())
      if (rs.simple_coordinates(a)[nc] == 0) out.push_back(a);
    return out;
  }
  const auto n = static_cast<std::size_t>(g.n());
  switch (g.family()) {
    case HermitianFamily::SU: {
      const auto k = static_cast<std::size_t>(g.k());
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          if ((j <= k) == (i <= k)) out.push_back(pair_root(n, i, 1, j, -1));
      break;
    }
    case HermitianFamily::Sp:
    case HermitianFamily::SOStar:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) out.push_back(pair_root(n, i, 1, j, -1));
      break;
    case HermitianFamily::SOOdd:
    case HermitianFamily::SOEven:
      for (std::size_t i = 2; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          out.push_back(pair_root(n, i, 1, j, -1));
          out.push_back(pair_root(n, i, 1, j, 1));
        }
      if (g.family() == HermitianFamily::SOOdd)
        for (std::size_t i = 2; i <= n; ++i) {
          Root r(n, Rational(0));
          r[i - 1] = 1;
          out.push_back(r);
        }
      break;
    default: break;
  }
  return out;
}

bool is_hc_weight(const HermitianGroup& g, const RationalVector& weight) {
  check_dimension(g, weight);
  for (const auto& a : compact_positive_roots(g)) {
    const Rational p = pairing(weight, a);
    if (!is_integer(p) || p <= 0) return false;
  }
  return true;
}

OrbitResult orbit_index(const HermitianGroup& g, const RationalVector& weight) {
  if (!is_hc_weight(g, weight))
    throw Error(ErrorCode::NotHcWeight, "weight is not dominant for the compact positive roots");
  OrbitResult result{};
  if (g.is_exceptional()) {
    result.orbit_index = exceptional_index(g, weight);
    result.orbit_dim = orbit_dimension(g, result.orbit_index);
    return result;
  }
  result.orbit_index = classical_index(g, weight);
  result.orbit_dim = orbit_dimension(g, result.orbit_index);
  result.gk_crosscheck = gkdim(g.weyl_type(), weight);
  if (*result.gk_crosscheck != result.orbit_dim)
    throw Error(ErrorCode::Internal,
                "GK dimension " + std::to_string(*result.gk_crosscheck) +
                    " disagrees with orbit dimension " + std::to_string(result.orbit_dim) +
                    " for " + to_string(g.family()) + " weight " + to_string(weight));
  return result;
}

std::vector<std::vector<Root>> exceptional_s_sets(HermitianFamily family) {
  if (family == HermitianFamily::E6) {
    return {
        {half_root({1, 1, 1, -1, -1, -1, -1, 1}), half_root({-1, -1, -1, 1, -1, -1, -1, 1})},
        {e_simple_root(1)},
    };
  }
  if (family == HermitianFamily::E7) {
    return {
        {half_root({1, -1, -1, 1, -1, 1, -1, 1}), half_root({-1, 1, 1, -1, -1, 1, -1, 1}),
         e_root(5, 1, 6, 1)},
        {e_root(1, 1, 6, 1), e_root(1, -1, 6, 1)},
        {e_root(5, -1, 6, 1)},
    };
  }
  throw Error(ErrorCode::Unsupported, "S-sets exist only for E6 and E7");
}

}  // namespace weylgk
