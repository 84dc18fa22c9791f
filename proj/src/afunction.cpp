#include "weylgk/afunction.hpp"

#include <set>

#include "weylgk/error.hpp"
#include "weylgk/symbols.hpp"
#include "weylgk/tableau.hpp"

namespace weylgk {

namespace {

void require_member(const WeylType& type, const SignedPermutation& w) {
  if (!in_group(w, type))
    throw Error(ErrorCode::NotInGroup, "element is not in the Weyl group " + to_string(type));
}

}  // namespace

Integer a_value(const WeylType& type, const SignedPermutation& w) {
  require_member(type, w);
  switch (type.family) {
    case Family::A: return f_a(to_sequence(w));
    case Family::B:
    case Family::C: return f_b(mirror_left(to_sequence(w)));
    case Family::D: return f_d(mirror_left(to_sequence(w)));
  }
  return 0;
}

Integer a_value_symbol(const WeylType& type, const SignedPermutation& w) {
  require_member(type, w);
  if (type.family == Family::A)
    throw Error(ErrorCode::Unsupported, "symbol route covers types B, C and D only");
  const BSymbol symbol = symb_b(rs_shape(mirror_left(to_sequence(w))), type.n);
  if (type.family == Family::D) return c_d(b_to_d(symbol));
  return c_b(symbol);
}

SignedPermutation parabolic_longest(const WeylType& type, unsigned mask) {
  const auto gens = coxeter_generators(type);
  std::vector<SignedPermutation> chosen;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (mask >> i & 1u) chosen.push_back(gens[i]);

  // Closure of the identity under right multiplication by the chosen generators.
  std::set<SignedPermutation> seen{SignedPermutation::identity(type.n)};
  std::vector<SignedPermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier)
      for (const auto& s : chosen) {
        auto ws = compose(w, s);
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }

  const SignedPermutation* best = nullptr;
  Integer best_len = -1;
  for (const auto& w : seen) {
    const Integer l = length(w, type);
    if (l > best_len) {
      best_len = l;
      best = &w;
    }
  }
  return *best;
}

}  // namespace weylgk
