#pragma once

#include "weylgk/signed_perm.hpp"

namespace weylgk {

/// Lusztig's a-function from the shape of the RS tableau:
/// A: F_a(w), B/C: F_b(-w), D: F_d(-w), with -w = mirror_left(window).
/// Throws Error(NotInGroup) if w is not an element of the given group.
Integer a_value(const WeylType& type, const SignedPermutation& w);

/// Same value through Lusztig symbols, c_B(Symb_B(w)) or c_D(d(Symb_B(w))),
/// using symbol parameter m = n. Only B, C and D.
Integer a_value_symbol(const WeylType& type, const SignedPermutation& w);

/// Longest element of the parabolic subgroup generated by the generators
/// selected by `mask` (bit i = coxeter_generators(type)[i]).
SignedPermutation parabolic_longest(const WeylType& type, unsigned mask);

}  // namespace weylgk
