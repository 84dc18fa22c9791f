#include "weylgk/gkdim.hpp"

#include <algorithm>
#include <map>

#include "weylgk/error.hpp"

namespace weylgk {

namespace {

const Rational kHalf(1, 2);

Root signed_pair(std::size_t n, int i, int si, int j, int sj) {
  Root r(n, Rational(0));
  r[static_cast<std::size_t>(i - 1)] += si;
  r[static_cast<std::size_t>(j - 1)] += sj;
  return r;
}

Root scaled_unit(std::size_t n, int i, Integer s) {
  Root r(n, Rational(0));
  r[static_cast<std::size_t>(i - 1)] = s;
  return r;
}

void add_type_a(std::vector<Root>& out, std::size_t n, const std::vector<int>& idx) {
  for (int i : idx)
    for (int j : idx)
      if (i != j) out.push_back(signed_pair(n, i, 1, j, -1));
}

// lambda^- = (lambda_1, ..., lambda_n, -lambda_n, ..., -lambda_1).
Sequence minus_sequence(const Sequence& x) { return mirror_right(x); }

}  // namespace

std::string to_string(SubsystemTag t) {
  switch (t) {
    case SubsystemTag::A: return "A";
    case SubsystemTag::B: return "B";
    case SubsystemTag::C: return "C";
    case SubsystemTag::D: return "D";
    case SubsystemTag::Empty: return "empty";
  }
  return "?";
}

RootSystem classical_root_system(const WeylType& type) {
  switch (type.family) {
    case Family::A: return RootSystem::build(RootType::A, type.n - 1);
    case Family::B: return RootSystem::build(RootType::B, type.n);
    case Family::C: return RootSystem::build(RootType::C, type.n);
    case Family::D: return RootSystem::build(RootType::D, type.n);
  }
  throw Error(ErrorCode::Internal, "unknown family");
}

std::vector<CosetClass> coset_decompose(const WeylType& type, const RationalVector& weight) {
  if (weight.size() != static_cast<std::size_t>(type.n))
    throw Error(ErrorCode::RankMismatch, "weight length does not match " + to_string(type));

  std::map<Rational, CosetClass> classes;
  for (std::size_t i = 0; i < weight.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    const Rational f = frac(weight[i]);
    const bool paired = type.family != Family::A;
    const Rational z = paired ? std::min(f, 1 - f) : f;
    auto [it, fresh] = classes.try_emplace(z);
    CosetClass& cls = it->second;
    if (fresh) {
      cls.z = z;
      cls.kind = z == 0 ? CosetKind::Integral
                 : (paired && z == kHalf) ? CosetKind::HalfIntegral
                                          : CosetKind::Generic;
    }
    if (paired && f > kHalf)
      cls.partners.push_back(index);
    else
      cls.members.push_back(index);
  }

  std::vector<CosetClass> out;
  for (auto& [z, cls] : classes) {
    switch (cls.kind) {
      case CosetKind::Generic: cls.tag = SubsystemTag::A; break;
      case CosetKind::Integral:
        cls.tag = type.family == Family::A   ? SubsystemTag::A
                  : type.family == Family::B ? SubsystemTag::B
                  : type.family == Family::C ? SubsystemTag::C
                                             : SubsystemTag::D;
        break;
      case CosetKind::HalfIntegral:
        cls.tag = type.family == Family::B ? SubsystemTag::B : SubsystemTag::D;
        break;
    }
    if (materialize(type, cls).empty()) cls.tag = SubsystemTag::Empty;
    out.push_back(std::move(cls));
  }
  return out;
}

Sequence lambda_z_sequence(const CosetClass& cls, const RationalVector& weight) {
  Sequence seq;
  for (int i : cls.members) seq.push_back(weight.at(static_cast<std::size_t>(i - 1)));
  for (auto it = cls.partners.rbegin(); it != cls.partners.rend(); ++it)
    seq.push_back(-weight.at(static_cast<std::size_t>(*it - 1)));
  return seq;
}

std::vector<Root> materialize(const WeylType& type, const CosetClass& cls) {
  const auto n = static_cast<std::size_t>(type.n);
  std::vector<Root> out;
  if (type.family == Family::A || cls.kind == CosetKind::Generic) {
    add_type_a(out, n, cls.members);
    add_type_a(out, n, cls.partners);
    for (int j : cls.members)
      for (int k : cls.partners) {
        out.push_back(signed_pair(n, j, 1, k, 1));
        out.push_back(signed_pair(n, j, -1, k, -1));
      }
    return out;
  }

  const auto& idx = cls.members;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(signed_pair(n, idx[a], si, idx[b], sj));

  const bool short_roots = type.family == Family::B;
  const bool long_roots = type.family == Family::C && cls.kind == CosetKind::Integral;
  for (int i : idx) {
    if (short_roots) {
      out.push_back(scaled_unit(n, i, 1));
      out.push_back(scaled_unit(n, i, -1));
    }
    if (long_roots) {
      out.push_back(scaled_unit(n, i, 2));
      out.push_back(scaled_unit(n, i, -2));
    }
  }
  return out;
}

Integer class_a_value(const WeylType& type, const CosetClass& cls, const RationalVector& weight) {
  const Sequence seq = lambda_z_sequence(cls, weight);
  if (type.family == Family::A || cls.kind == CosetKind::Generic) return f_a(seq);
  const bool odd_weight =
      type.family == Family::B || (type.family == Family::C && cls.kind == CosetKind::Integral);
  return odd_weight ? f_b(minus_sequence(seq)) : f_d(minus_sequence(seq));
}

Integer gkdim(const WeylType& type, const RationalVector& weight) {
  const Integer n = type.n;
  Integer total = type.family == Family::A ? n * (n - 1) / 2
                  : type.family == Family::D ? n * n - n
                                             : n * n;
  for (const auto& cls : coset_decompose(type, weight)) total -= class_a_value(type, cls, weight);
  return total;
}

}  // namespace weylgk
