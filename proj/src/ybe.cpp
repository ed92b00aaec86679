#include "trusslab/ybe.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace trusslab {

namespace {

FiniteGroup require_mul_group(BinOpTable const& mul, char const* who) {
  auto g = as_group(mul);
  if (!g)
    throw Error(Errc::not_verified,
                std::string(who) + ": multiplicative table is not a group (" + g.reason + ")");
  return *g.group;
}

using Vec3 = std::array<Element, 3>;

Vec3 apply_r12(SolutionMap const& r, Vec3 t) {
  return {r.out1(t[0], t[1]), r.out2(t[0], t[1]), t[2]};
}

Vec3 apply_r23(SolutionMap const& r, Vec3 t) {
  return {t[0], r.out1(t[1], t[2]), r.out2(t[1], t[2])};
}

}  // namespace

SolutionMap SolutionMap::flip(int n) {
  SolutionMap r{BinOpTable(n), BinOpTable(n)};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      r.out1.set(a, b, b);
      r.out2.set(a, b, a);
    }
  return r;
}

SolutionMap SolutionMap::identity_solution(int n) {
  SolutionMap r{BinOpTable(n), BinOpTable(n)};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      r.out1.set(a, b, a);
      r.out2.set(a, b, b);
    }
  return r;
}

YbeResult check_ybe(SolutionMap const& r) {
  int n = r.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Vec3 t{a, b, c};
        Vec3 lhs = apply_r12(r, apply_r23(r, apply_r12(r, t)));
        Vec3 rhs = apply_r23(r, apply_r12(r, apply_r23(r, t)));
        if (lhs != rhs) return {false, Triple{a, b, c}};
      }
  return {};
}

Nondegeneracy nondegeneracy(SolutionMap const& r) {
  int n = r.size();
  Nondegeneracy nd;
  for (Element a = 0; a < n && nd.left; ++a) {
    std::vector<char> seen(n, 0);
    for (Element b = 0; b < n; ++b) seen[r.out1(a, b)] = 1;
    nd.left = std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  }
  for (Element b = 0; b < n && nd.right; ++b) {
    std::vector<char> seen(n, 0);
    for (Element a = 0; a < n; ++a) seen[r.out2(a, b)] = 1;
    nd.right = std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  }
  return nd;
}

SolutionMap build_r_almost(AlmostLeftSemiBrace const& a) {
  auto g = require_mul_group(a.mul, "build_r_almost");
  int n = a.add.size();
  SolutionMap r{BinOpTable(n), BinOpTable(n)};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element s = a.add(a.iota(x), y);
      r.out1.set(x, y, a.mul(x, s));
      r.out2.set(x, y, a.mul(g.inverse[s], y));
    }
  // lambda_x(y) o rho_y(x) = x o y must hold by construction
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.mul(r.out1(x, y), r.out2(x, y)) != a.mul(x, y))
        throw Error(Errc::postcondition_violated, "exchange identity failed in build_r_almost");
  return r;
}

SolutionMap build_r_semibrace(LeftSemiBrace const& s) {
  auto g = require_mul_group(s.mul, "build_r_semibrace");
  return build_r_almost(AlmostLeftSemiBrace{s.add, s.mul, SelfMap(g.inverse)});
}

TripleCheck check_cond_solution(AlmostLeftSemiBrace const& a) {
  auto g = require_mul_group(a.mul, "check_cond_solution");
  auto r = build_r_almost(a);
  int n = a.add.size();
  Element i1 = a.iota(g.identity);
  for (Element x = 0; x < n; ++x)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Element lhs = a.add(x, a.mul(r.out1(b, c), a.add(i1, r.out2(b, c))));
        Element rhs = a.add(x, a.mul(b, a.add(i1, c)));
        if (lhs != rhs) return {false, Triple{x, b, c}};
      }
  return {};
}

TripleCheck check_cond_solution_semi(LeftSemiBrace const& s) {
  auto g = require_mul_group(s.mul, "check_cond_solution_semi");
  return check_cond_solution(AlmostLeftSemiBrace{s.add, s.mul, SelfMap(g.inverse)});
}

bool solution_hom_check(SelfMap const& f, SolutionMap const& r, SolutionMap const& r2) {
  if (f.size() != r.size() || r.size() != r2.size())
    throw Error(Errc::size_mismatch, "solution_hom_check: sizes differ");
  int n = r.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (f(r.out1(a, b)) != r2.out1(f(a), f(b))) return false;
      if (f(r.out2(a, b)) != r2.out2(f(a), f(b))) return false;
    }
  return true;
}

bool is_rho_antihomomorphism(SolutionMap const& r, BinOpTable const& mul) {
  int n = r.size();
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c)
      for (Element x = 0; x < n; ++x)
        if (r.out2(x, mul(b, c)) != r.out2(r.out2(x, b), c)) return false;
  return true;
}

VerificationReport theorem_iso_check(AlmostLeftSemiBrace const& a) {
  auto g = require_mul_group(a.mul, "theorem_iso_check");
  int n = a.add.size();
  VerificationReport rep("solution isomorphism");

  auto compat = check_compat(a);
  rep.run("compat-precondition", [&]() -> CheckOutcome {
    if (compat.holds) return {};
    return {false, {compat.witness->first, compat.witness->second}, ""};
  });
  auto cond = check_cond_solution(a);
  rep.run("cond-solution-precondition", [&]() -> CheckOutcome {
    if (cond.holds) return {};
    return {false, {cond.witness->a, cond.witness->b, cond.witness->c}, ""};
  });
  if (!compat.holds || !cond.holds) {
    for (auto name : {"associated-verifies", "associated-cond-solution", "lambda-closed-form",
                      "rho-closed-form", "inverse-map-isomorphism"})
      rep.add(name, {false, {}, "not evaluated: precondition failed"});
    return rep;
  }

  auto assoc = associated_semi_brace(a);
  auto r_direct = build_r_almost(a);
  auto r_assoc = build_r_semibrace(assoc);
  auto const& inv = g.inverse;

  rep.run("associated-verifies",
          [&]() -> CheckOutcome { return {verify_left_semi_brace(assoc).passed(), {}, ""}; });
  rep.run("associated-cond-solution", [&]() -> CheckOutcome {
    auto c = check_cond_solution_semi(assoc);
    if (c.holds) return {};
    return {false, {c.witness->a, c.witness->b, c.witness->c}, ""};
  });
  rep.run("lambda-closed-form", [&]() -> CheckOutcome {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (r_assoc.out1(x, y) != inv[r_direct.out1(inv[x], inv[y])]) return {false, {x, y}, ""};
    return {};
  });
  rep.run("rho-closed-form", [&]() -> CheckOutcome {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (r_assoc.out2(x, y) != inv[r_direct.out2(inv[x], inv[y])]) return {false, {x, y}, ""};
    return {};
  });
  rep.run("inverse-map-isomorphism", [&]() -> CheckOutcome {
    SelfMap f{inv};
    if (!f.is_bijective()) return {false, {}, "inverse map is not a bijection"};
    return {solution_hom_check(f, r_direct, r_assoc), {}, "f(a) = inv(a)"};
  });
  return rep;
}

std::optional<SelfMap> find_solution_isomorphism(SolutionMap const& r, SolutionMap const& r2) {
  int n = r.size();
  if (n != r2.size()) throw Error(Errc::size_mismatch, "find_solution_isomorphism: sizes differ");
  if (n > 7) throw Error(Errc::order_too_large, "isomorphism search is capped at order 7");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SelfMap f{perm};
    if (solution_hom_check(f, r, r2)) return f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace trusslab
