// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "weylgk/afunction.hpp"
#include "weylgk/domino.hpp"
#include "weylgk/error.hpp"
#include "weylgk/gkdim.hpp"
#include "weylgk/hermitian.hpp"
#include "weylgk/rootsys.hpp"
#include "weylgk/tableau.hpp"

using namespace weylgk;
using testing::Rng;
using testing::uniform;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " failure(s)";
    for (const auto& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  long count_ = 0;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string str(const RationalVector& v) { return to_string(std::span<const Rational>(v)); }

RationalVector ints(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

DominoTableau build(std::initializer_list<std::array<int, 5>> cells) {
  std::vector<Domino> ds;
  for (const auto& [label, r1, c1, r2, c2] : cells) ds.push_back(make_domino(label, {r1, c1}, {r2, c2}));
  return DominoTableau(ds);
}

void criterion_1a(Check& c) {
  const WeylType b5{Family::B, 5};
  const SignedPermutation w{3, 4, -1, 5, 2};
  c.expect(a_value(b5, w) == 2, "a_value(B5) != 2");
  c.expect(a_value_symbol(b5, w) == 2, "a_value_symbol(B5) != 2");
}

void criterion_1b(Check& c) {
  const Integer g = gkdim({Family::B, 8}, ints({3, 4, 1, -2, 0, -3, 5, 6}));
  c.expect(g == 51, "gkdim(B8) = " + std::to_string(g));
}

void criterion_1c(Check& c) {
  const Integer g =
      gkdim({Family::C, 10}, parse_rational_list("3.1,2.3,1.1,-4,-4.1,2.5,1.9,2,2.1,0"));
  c.expect(g == 96, "gkdim(C10) = " + std::to_string(g));
}

void criterion_1d(Check& c) {
  const DominoPair pq = domino_rs({-3, -4, 1, 5, -2});
  c.expect(pq.p == build({{1, 1, 1, 1, 2}, {2, 2, 1, 3, 1}, {3, 2, 2, 3, 2}, {4, 4, 1, 4, 2},
                          {5, 1, 3, 1, 4}}),
           "P tableau differs");
  c.expect(pq.q == build({{1, 1, 1, 2, 1}, {2, 3, 1, 4, 1}, {3, 1, 2, 2, 2}, {4, 1, 3, 1, 4},
                          {5, 3, 2, 4, 2}}),
           "Q tableau differs");
}

void criterion_1e(Check& c) {
  const SignedPermutation w{-3, 1, 4, -2};
  const std::map<Box, int> expected{{{1, 1}, 1}, {{3, 1}, 2}, {{2, 2}, 3}, {{1, 3}, 4}};
  c.expect(hollow(p_tableau(w)).cells() == expected, "hollow(P(w)) differs");
  c.expect(hollow(p_tableau(left_multiply_t(w))).cells() == expected, "hollow(P(tw)) differs");
}

void criterion_1f(Check& c) {
  const OrbitResult r = orbit_index(HermitianGroup::e6(), ints({-1, 2, 3, 4, 5, -3, -3, 3}));
  c.expect(r.orbit_index == 1, "k = " + std::to_string(r.orbit_index));
  c.expect(r.orbit_dim == 11, "orbit_dim = " + std::to_string(r.orbit_dim));
}

void criterion_2(Check& c) {
  for (const WeylType t : {WeylType{Family::B, 4}, WeylType{Family::D, 4}}) {
    long count = 0;
    for_each_element(t, [&](const SignedPermutation& w) {
      ++count;
      std::ostringstream s;
      s << to_string(t) << " " << w;
      c.expect(a_value(t, w) == a_value_symbol(t, w), s.str());
    });
    c.expect(count == (t.family == Family::B ? 384 : 192), "element count of " + to_string(t));
  }
}

void criterion_3(Check& c) {
  std::vector<WeylType> types;
  for (int n = 1; n <= 4; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= 4; ++n) types.push_back({Family::D, n});
  for (int n = 2; n <= 4; ++n) types.push_back({Family::A, n});
  for (const auto& t : types) {
    for_each_element(t, [&](const SignedPermutation& w) {
      std::ostringstream s;
      s << to_string(t) << " " << w;
      const Integer a = a_value(t, w);
      c.expect(a >= 0, "negative a at " + s.str());
      c.expect(a == a_value(t, inverse(w)), "a(w) != a(w^-1) at " + s.str());
    });
    for (unsigned mask = 0; mask < (1u << t.rank()); ++mask) {
      const SignedPermutation wi = parabolic_longest(t, mask);
      c.expect(a_value(t, wi) == length(wi, t),
               "a(w_I) != l(w_I) for " + to_string(t) + " mask " + std::to_string(mask));
    }
  }
}

void criterion_4(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::pair<std::map<Box, int>, std::map<Box, int>>> seen;
    long count = 0;
    for_each_element({Family::B, n}, [&](const SignedPermutation& w) {
      ++count;
      std::ostringstream s;
      s << w;
      const DominoPair pq = domino_rs(w.window());
      const Partition sh = rs_shape(mirror_left(to_sequence(w)));
      c.expect(shape(pq.p) == sh && shape(pq.q) == sh, "shape at " + s.str());
      c.expect(q_tableau(inverse(w)) == pq.p, "P(w) != Q(w^-1) at " + s.str());
      seen.insert({pq.p.grid(), pq.q.grid()});
      const HollowTableau h = hollow(pq.p);
      c.expect(hollow(p_tableau(left_multiply_t(w))) == h, "hollow(P(tw)) at " + s.str());
      c.expect(hollow(p_tableau(right_multiply_t(w))) == h, "hollow(P(wt)) at " + s.str());
    });
    c.expect(static_cast<long>(seen.size()) == count, "(P,Q) not injective for n = " + std::to_string(n));
  }
}

void criterion_5(Check& c) {
  Rng rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const Sequence x = testing::random_sequence(rng, uniform(rng, 1, 8), uniform(rng, 1, 4));
    const Partition p = rs_shape(x);
    const Partition q = transpose(p);
    for (std::size_t k = 1; k <= x.size(); ++k) {
      c.expect(greene_c(x, k) == p.prefix_sum(k), "c_k at " + str(x));
      c.expect(greene_d(x, k) == q.prefix_sum(k), "d_k at " + str(x));
    }
  }
}

void criterion_6(Check& c) {
  Rng rng(6);
  for (const Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      const WeylType t{f, n};
      for (int trial = 0; trial < 20; ++trial) {
        RationalVector v = testing::decreasing_run(rng, n, Rational(uniform(rng, f == Family::A ? -5 : 1, 3)));
        if (f == Family::D && uniform(rng, 0, 1) == 1) v.back() = -v.back();
        const Integer dominant = gkdim(t, v);
        for (auto& x : v) x = -x;
        const Integer anti = gkdim(t, v);
        c.expect(dominant == 0, "dominant " + to_string(t) + " " + str(v));
        c.expect(anti == t.positive_root_count(), "anti-dominant " + to_string(t) + " " + str(v));
      }
    }
  }
}

void criterion_7(Check& c) {
  Rng rng(7);
  for (const Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = uniform(rng, f == Family::D ? 2 : 1, 6);
      const WeylType t{f, n};
      const RationalVector weight = testing::random_rational_weight(rng, n);
      const auto classes = coset_decompose(t, weight);
      std::vector<std::vector<Root>> blocks;
      for (const auto& cls : classes) blocks.push_back(materialize(t, cls));
      std::set<Root> joined;
      std::size_t total = 0;
      for (const auto& b : blocks) {
        joined.insert(b.begin(), b.end());
        total += b.size();
      }
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
          for (const auto& x : blocks[i])
            for (const auto& y : blocks[j])
              c.expect(dot(x, y) == 0, "blocks not orthogonal at " + str(weight));
      const auto integral = integral_subsystem(classical_root_system(t), weight);
      const std::set<Root> expected(integral.begin(), integral.end());
      c.expect(total == joined.size(), "blocks overlap at " + to_string(t) + " " + str(weight));
      c.expect(joined == expected, "union differs at " + to_string(t) + " " + str(weight));
    }
  }
}

void criterion_8(Check& c) {
  Rng rng(8);
  for (const HermitianFamily f : {HermitianFamily::SU, HermitianFamily::Sp, HermitianFamily::SOStar,
                                  HermitianFamily::SOOdd, HermitianFamily::SOEven}) {
    std::map<std::string, int> branches;
    int accepted = 0;
    while (accepted < 500) {
      const HermitianGroup g = testing::random_group(rng, f);
      const RationalVector weight = testing::random_hc_weight(rng, g);
      if (!is_hc_weight(g, weight)) continue;
      ++accepted;
      ++branches[testing::hc_branch(g, weight)];
      const std::string where = to_string(f) + " n=" + std::to_string(g.n()) + " " + str(weight);
      try {
        const OrbitResult r = orbit_index(g, weight);
        const Integer gk = gkdim(g.weyl_type(), weight);
        c.expect(gk == orbit_dimension(g, r.orbit_index), "gk != orbit dim at " + where);
      } catch (const Error& e) {
        c.expect(false, std::string(e.what()) + " at " + where);
      }
    }
    std::set<std::string> required;
    switch (f) {
      case HermitianFamily::SU: required = {"integral", "nonintegral"}; break;
      case HermitianFamily::Sp: required = {"Z", "1/2+Z", "generic"}; break;
      case HermitianFamily::SOStar: required = {"1/2Z", "generic"}; break;
      case HermitianFamily::SOOdd: required = {"Z,>", "Z,<=", "1/2+Z,>0", "1/2+Z,<=0", "generic"}; break;
      case HermitianFamily::SOEven: required = {"Z,>", "Z,mid", "Z,low", "1/2+Z", "generic"}; break;
      default: break;
    }
    for (const auto& b : required)
      c.expect(branches.count(b) > 0, "branch " + b + " of " + to_string(f) + " not covered");
  }
}

void criterion_9(Check& c) {
  const std::vector<std::pair<RootSystem, Integer>> systems{
      {RootSystem::build(RootType::B, 5), 25}, {RootSystem::build(RootType::C, 4), 16},
      {RootSystem::build(RootType::D, 5), 20}, {RootSystem::build(RootType::E6, 6), 36},
      {RootSystem::build(RootType::E7, 7), 63}};
  for (const auto& [rs, expected] : systems) {
    const std::string name = to_string(rs.type());
    c.expect(static_cast<Integer>(rs.positive().size()) == expected, "|Phi+| of " + name);
    const RationalVector r = rho(rs);
    for (const auto& a : rs.simple()) c.expect(pairing(r, a) == 1, "<rho, alpha> != 1 in " + name);
  }
  for (int n = 1; n <= 6; ++n)
    for (const RootType t : {RootType::B, RootType::C, RootType::D}) {
      if (t == RootType::D && n < 2) continue;
      const Integer expected = t == RootType::D ? n * n - n : n * n;
      c.expect(static_cast<Integer>(RootSystem::build(t, n).positive().size()) == expected,
               "|Phi+| of " + to_string(t) + std::to_string(n));
    }
  const auto e6 = RootSystem::build(RootType::E6, 6);
  const auto e7 = RootSystem::build(RootType::E7, 7);
  for (const auto& s : exceptional_s_sets(HermitianFamily::E6))
    for (const auto& root : s) c.expect(e6.is_positive_root(root), "E6 S_k root " + str(root));
  for (const auto& s : exceptional_s_sets(HermitianFamily::E7))
    for (const auto& root : s) c.expect(e7.is_positive_root(root), "E7 S_k root " + str(root));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1a", "a-function of (3,4,-1,5,2) in B5 is 2", 1.0, criterion_1a},
      {"1b", "GK dimension of the B8 example is 51", 1.0, criterion_1b},
      {"1c", "GK dimension of the C10 decimal example is 96", 1.0, criterion_1c},
      {"1d", "domino P and Q of (-3,-4,1,5,-2)", 1.0, criterion_1d},
      {"1e", "hollow tableau of (-3,1,4,-2) and its t-translate", 1.0, criterion_1e},
      {"1f", "E6 example has k = 1 and orbit dimension 11", 1.0, criterion_1f},
      {"2", "a_value = a_value_symbol on W_4 (B) and W'_4 (D)", 5.0, criterion_2},
      {"3", "a-function axioms on W_n, n <= 4", 10.0, criterion_3},
      {"4", "domino laws on W_n, n <= 4", 10.0, criterion_4},
      {"5", "Greene oracle on 1000 random sequences", 30.0, criterion_5},
      {"6", "degenerate GK values, n <= 6", 10.0, criterion_6},
      {"7", "coset decomposition soundness, 200 weights per type", 30.0, criterion_7},
      {"8", "GK dimension equals orbit dimension, 500 weights per family", 60.0, criterion_8},
      {"9", "root system counts, rho pairings, S_k roots", 10.0, criterion_9},
  };

  bool all_ok = true;
  double regression_time = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.id.front() == '1') regression_time += seconds;
    const bool in_time = seconds <= cr.budget_seconds;
    const bool ok = check.ok() && in_time;
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " (" << seconds << " s)";
    if (!check.ok()) std::cout << " -- " << check.summary();
    if (!in_time) std::cout << " -- over the " << cr.budget_seconds << " s budget";
    std::cout << "\n";
  }
  const bool fast = regression_time < 1.0;
  std::cout << (fast ? "[PASS] " : "[FAIL] ") << "1 total regression time " << regression_time << " s\n";
  return all_ok && fast ? 0 : 1;
}
