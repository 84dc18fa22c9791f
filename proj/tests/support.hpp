#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "weylgk/hermitian.hpp"
#include "weylgk/signed_perm.hpp"

namespace weylgk::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random sequence of small integers; duplicates are likely by design.
inline Sequence random_sequence(Rng& rng, int length, int spread) {
  Sequence x;
  for (int i = 0; i < length; ++i) x.push_back(Rational(uniform(rng, -spread, spread)));
  return x;
}

/// A random coset offset: 0, 1/2 or a rational p/q with 3 <= q <= 7.
inline Rational random_offset(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0: return Rational(0);
    case 1: return Rational(1, 2);
    default: {
      const int q = uniform(rng, 3, 7);
      int p = uniform(rng, 1, q - 1);
      while (2 * p == q) p = uniform(rng, 1, q - 1);
      return Rational(p, q);
    }
  }
}

/// Random rational weight with coordinates drawn from a handful of cosets.
inline RationalVector random_rational_weight(Rng& rng, int n) {
  std::vector<Rational> offsets;
  const int pool = uniform(rng, 1, 3);
  for (int i = 0; i < pool; ++i) offsets.push_back(random_offset(rng));
  RationalVector v;
  for (int i = 0; i < n; ++i) {
    Rational x = offsets[static_cast<std::size_t>(uniform(rng, 0, pool - 1))] +
                 Rational(uniform(rng, -4, 4));
    if (uniform(rng, 0, 1) == 1) x = -x;
    v.push_back(x);
  }
  return v;
}

/// Strictly decreasing run of `len` values in one coset, with gaps 1..3.
inline RationalVector decreasing_run(Rng& rng, int len, Rational bottom) {
  RationalVector v(static_cast<std::size_t>(len));
  Rational cur = bottom;
  for (int i = len - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = cur;
    cur += Rational(uniform(rng, 1, 3));
  }
  return v;
}

/// Random Phi_c^+-dominant weight for a classical Hermitian group.
inline RationalVector random_hc_weight(Rng& rng, const HermitianGroup& g) {
  const int n = g.n();
  switch (g.family()) {
    case HermitianFamily::SU: {
      const int k = g.k();
      auto a = decreasing_run(rng, k, random_offset(rng) + Rational(uniform(rng, -n - 2, n)));
      Rational off = uniform(rng, 0, 1) ? Rational(0) : random_offset(rng);
      auto b = decreasing_run(rng, n - k, a.front() + off + Rational(uniform(rng, -3 * n, n)));
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case HermitianFamily::Sp:
    case HermitianFamily::SOStar:
      return decreasing_run(rng, n, random_offset(rng) + Rational(uniform(rng, -2 * n - 2, 2)));
    case HermitianFamily::SOOdd:
    case HermitianFamily::SOEven: {
      const bool half = uniform(rng, 0, 1) == 1;
      const Rational base = half ? Rational(1, 2) : Rational(g.family() == HermitianFamily::SOOdd);
      RationalVector tail;
      if (g.family() == HermitianFamily::SOOdd) {
        tail = decreasing_run(rng, n - 1, base + Rational(uniform(rng, 0, 1)));
      } else {
        // lambda_2 > ... > lambda_{n-1} > |lambda_n|
        Rational last = base + Rational(uniform(rng, 0, 2));
        auto upper = decreasing_run(rng, n - 2, last + Rational(uniform(rng, 1, 2)));
        if (uniform(rng, 0, 1) == 1) last = -last;
        upper.push_back(last);
        tail = upper;
      }
      Rational l1;
      const int mode = uniform(rng, 0, 3);
      if (mode == 0) {
        // near the boundary -|lambda_n| < lambda_1 <= lambda_2
        l1 = tail.front() - Rational(uniform(rng, 0, 2 * n));
      } else {
        l1 = tail.front() + random_offset(rng) + Rational(uniform(rng, -2 * n - 2, 2 * n));
      }
      RationalVector v{l1};
      v.insert(v.end(), tail.begin(), tail.end());
      return v;
    }
    default: break;
  }
  return {};
}

/// Random Hermitian group of the family with rank at most 6.
inline HermitianGroup random_group(Rng& rng, HermitianFamily f) {
  switch (f) {
    case HermitianFamily::SU: {
      const int n = uniform(rng, 2, 6);
      return {f, n, uniform(rng, 1, n - 1)};
    }
    case HermitianFamily::Sp: return {f, uniform(rng, 2, 6)};
    case HermitianFamily::SOStar: return {f, uniform(rng, 4, 6)};
    case HermitianFamily::SOOdd: return {f, uniform(rng, 3, 6)};
    case HermitianFamily::SOEven: return {f, uniform(rng, 4, 6)};
    default: return HermitianGroup::e6();
  }
}

/// Which case of the orbit-index analysis a weight falls in.
inline std::string hc_branch(const HermitianGroup& g, const RationalVector& w) {
  const Rational d = w[0] - w[1];
  switch (g.family()) {
    case HermitianFamily::SU: {
      for (const auto& x : w)
        if (!is_integer(x - w[0])) return "nonintegral";
      return "integral";
    }
    case HermitianFamily::Sp:
      return is_integer(w[0]) ? "Z" : is_integer(w[0] + Rational(1, 2)) ? "1/2+Z" : "generic";
    case HermitianFamily::SOStar: return is_half_integral(w[0]) ? "1/2Z" : "generic";
    case HermitianFamily::SOOdd:
      if (is_integer(d)) return w[0] > w[1] ? "Z,>" : "Z,<=";
      if (is_integer(d + Rational(1, 2))) return w[0] > 0 ? "1/2+Z,>0" : "1/2+Z,<=0";
      return "generic";
    case HermitianFamily::SOEven: {
      if (!is_integer(d)) return is_integer(d + Rational(1, 2)) ? "1/2+Z" : "generic";
      if (w[0] > w[1]) return "Z,>";
      const Rational last = w.back() < 0 ? -w.back() : w.back();
      return -last < w[0] ? "Z,mid" : "Z,low";
    }
    default: return "exceptional";
  }
}

/// Coxeter length of every element by breadth-first search over generator words.
inline std::map<SignedPermutation, Integer> bfs_lengths(const WeylType& type) {
  std::map<SignedPermutation, Integer> dist{{SignedPermutation::identity(type.n), 0}};
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(type.n)};
  const auto gens = coxeter_generators(type);
  for (Integer d = 1; !frontier.empty(); ++d) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        auto ws = compose(w, s);
        if (dist.emplace(ws, d).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace weylgk::testing
