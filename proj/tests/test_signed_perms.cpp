#include <doctest.h>

#include <set>

#include "support.hpp"
#include "weylgk/error.hpp"
#include "weylgk/signed_perm.hpp"

using namespace weylgk;

namespace {

Sequence ints(std::initializer_list<int> v) {
  Sequence s;
  for (int x : v) s.push_back(Rational(x));
  return s;
}

}  // namespace

TEST_CASE("window validation and parsing") {
  CHECK(parse_window("3,4,-1,5,2") == SignedPermutation{3, 4, -1, 5, 2});
  CHECK(parse_window(" -2 , 1 ") == SignedPermutation{-2, 1});
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({1, 3}), Error);
  CHECK_THROWS_AS(parse_window("1,,2"), Error);
  CHECK_THROWS_AS(parse_window("1,a"), Error);
}

TEST_CASE("mirrors") {
  CHECK(mirror_left(ints({3, 4, -1, 5, 2})) == ints({-2, -5, 1, -4, -3, 3, 4, -1, 5, 2}));
  CHECK(mirror_right(ints({7})) == ints({7, -7}));
  CHECK(mirror_left({}).empty());
}

TEST_CASE("composition and inverse") {
  const auto t = SignedPermutation::sign_generator(4);
  CHECK(compose(t, t) == SignedPermutation::identity(4));
  CHECK(inverse(SignedPermutation{2, -3, 1}) == SignedPermutation{3, 1, -2});
  const SignedPermutation w{3, -1, 2};
  CHECK(compose(w, SignedPermutation::identity(3)) == w);
  CHECK(compose(w, inverse(w)) == SignedPermutation::identity(3));
  CHECK_THROWS_AS(compose(w, SignedPermutation::identity(2)), Error);
}

TEST_CASE("multiplication by t") {
  const SignedPermutation w{-3, 1, 4, -2};
  CHECK(left_multiply_t(w) == SignedPermutation{-3, -1, 4, -2});
  CHECK(right_multiply_t(w) == SignedPermutation{3, 1, 4, -2});
  CHECK(right_multiply_t(SignedPermutation::identity(3)) == SignedPermutation::sign_generator(3));
  CHECK(left_multiply_t(left_multiply_t(w)) == w);
  CHECK(left_multiply_t(w) == compose(SignedPermutation::sign_generator(4), w));
  CHECK(right_multiply_t(w) == compose(w, SignedPermutation::sign_generator(4)));
}

TEST_CASE("lengths") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(length(SignedPermutation::identity(n), {Family::B, n}) == 0);
    CHECK(length(SignedPermutation::negation(n), {Family::B, n}) == n * n);
  }
  Integer longest = 0;
  for (const auto& w : enumerate({Family::D, 4})) longest = std::max(longest, length(w, {Family::D, 4}));
  CHECK(longest == 12);
  CHECK_THROWS_AS(length(SignedPermutation{-1, 2}, {Family::D, 2}), Error);
}

TEST_CASE("length agrees with breadth-first word length") {
  for (Family f : {Family::A, Family::B, Family::D})
    for (int n = (f == Family::D ? 2 : 1); n <= 4; ++n) {
      const WeylType type{f, n};
      const auto dist = testing::bfs_lengths(type);
      CHECK(dist.size() == enumerate(type).size());
      for (const auto& [w, d] : dist) {
        CAPTURE(w);
        CHECK(length(w, type) == d);
      }
    }
}

TEST_CASE("enumeration") {
  CHECK(enumerate({Family::B, 1}).size() == 2);
  CHECK(enumerate({Family::B, 4}).size() == 384);
  CHECK(enumerate({Family::D, 4}).size() == 192);
  CHECK(enumerate({Family::A, 4}).size() == 24);
  const auto all = enumerate({Family::B, 3});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<SignedPermutation>(all.begin(), all.end()).size() == all.size());
  for (const auto& w : enumerate({Family::D, 3})) CHECK(w.is_even());
  CHECK_THROWS_AS(enumerate({Family::B, 7}), Error);
  CHECK_THROWS_AS(enumerate({Family::A, 9}), Error);
}

TEST_CASE("group laws on B4") {
  const auto all = enumerate({Family::B, 4});
  for (const auto& w : all) {
    const auto wi = inverse(w);
    for (int i = 1; i <= 4; ++i) CHECK(w(wi(i)) == i);
  }
  const auto d = enumerate({Family::D, 4});
  for (std::size_t i = 0; i < d.size(); i += 7)
    for (std::size_t j = 0; j < d.size(); j += 5) CHECK(compose(d[i], d[j]).is_even());
}

TEST_CASE("action on weights") {
  const RationalVector lambda{Rational(3), Rational(1, 2), Rational(-2)};
  CHECK(act_on_weight(SignedPermutation::identity(3), lambda) == lambda);
  CHECK(act_on_weight(SignedPermutation::sign_generator(3), lambda) ==
        RationalVector{Rational(3), Rational(1, 2), Rational(2)});
  CHECK(act_on_weight(SignedPermutation::negation(3), lambda) ==
        RationalVector{Rational(-3), Rational(-1, 2), Rational(2)});
  // A homomorphism: (uv).lambda = u.(v.lambda).
  const auto all = enumerate({Family::B, 3});
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 7)
      CHECK(act_on_weight(compose(all[i], all[j]), lambda) ==
            act_on_weight(all[i], act_on_weight(all[j], lambda)));
  CHECK_THROWS_AS(act_on_weight(SignedPermutation::identity(2), lambda), Error);
}

TEST_CASE("group membership") {
  CHECK(in_group(SignedPermutation{2, 1, 3}, {Family::A, 3}));
  CHECK_FALSE(in_group(SignedPermutation{-2, 1, 3}, {Family::A, 3}));
  CHECK(in_group(SignedPermutation{-2, -1, 3}, {Family::D, 3}));
  CHECK_FALSE(in_group(SignedPermutation{-2, 1, 3}, {Family::D, 3}));
  CHECK_FALSE(in_group(SignedPermutation{1, 2}, {Family::B, 3}));
  CHECK(SignedPermutation::d_generator(3) == SignedPermutation{-2, -1, 3});
}
