#include "trusslab/semibrace.hpp"

namespace trusslab {

namespace {

void require_same_size(int a, int b, char const* what) {
  if (a != b)
    throw Error(Errc::size_mismatch, std::string(what) + ": carrier sizes " + std::to_string(a) +
                                         " and " + std::to_string(b) + " differ");
}

CheckOutcome associativity_outcome(BinOpTable const& op) {
  if (auto w = associativity_witness(op)) return {false, {w->a, w->b, w->c}, ""};
  return {};
}

CheckOutcome group_outcome(GroupResult const& g) {
  if (g) return {};
  CheckOutcome out{false, {}, g.reason};
  if (g.assoc_witness) out.witness = {g.assoc_witness->a, g.assoc_witness->b, g.assoc_witness->c};
  else if (g.offender >= 0) out.witness = {g.offender};
  return out;
}

FiniteGroup require_mul_group(BinOpTable const& mul, char const* who) {
  auto g = as_group(mul);
  if (!g)
    throw Error(Errc::not_verified,
                std::string(who) + ": multiplicative table is not a group (" + g.reason + ")");
  return *g.group;
}

}  // namespace

VerificationReport verify_left_semi_brace(BinOpTable const& add, BinOpTable const& mul) {
  require_same_size(add.size(), mul.size(), "verify_left_semi_brace");
  int n = add.size();
  VerificationReport rep("left semi-brace");
  rep.run("add-associative", [&] { return associativity_outcome(add); });
  auto g = as_group(mul);
  rep.run("mul-group", [&] { return group_outcome(g); });
  rep.run("semi-brace-law", [&]() -> CheckOutcome {
    if (!g) return {false, {}, "not evaluated: multiplicative table is not a group"};
    auto const& inv = g.group->inverse;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, add(inv[a], c))))
            return {false, {a, b, c}, ""};
    return {};
  });
  return rep;
}

VerificationReport verify_left_semi_brace(LeftSemiBrace const& s) {
  return verify_left_semi_brace(s.add, s.mul);
}

VerificationReport verify_almost(BinOpTable const& add, BinOpTable const& mul,
                                 SelfMap const& iota, AlmostProfile profile) {
  require_same_size(add.size(), mul.size(), "verify_almost");
  require_same_size(add.size(), iota.size(), "verify_almost");
  int n = add.size();
  VerificationReport rep("almost left semi-brace");
  rep.run("add-associative", [&] { return associativity_outcome(add); });
  auto g = as_group(mul);
  rep.run("mul-group", [&] { return group_outcome(g); });
  rep.run("iota-law", [&]() -> CheckOutcome {
    if (!g) return {false, {}, "not evaluated: multiplicative table is not a group"};
    auto const& inv = g.group->inverse;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (iota(mul(a, b)) != mul(inv[b], iota(a))) return {false, {a, b}, ""};
    return {};
  });
  rep.run("almost-law", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, add(iota(a), c))))
            return {false, {a, b, c}, ""};
    return {};
  });
  if (profile == AlmostProfile::miccoli) {
    rep.run("add-left-cancellative", [&]() -> CheckOutcome {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (b != c && add(a, b) == add(a, c)) return {false, {a, b, c}, ""};
      return {};
    });
    rep.run("compat-law", [&]() -> CheckOutcome {
      auto pc = check_compat(AlmostLeftSemiBrace{add, mul, iota});
      if (pc.holds) return {};
      return {false, {pc.witness->first, pc.witness->second}, ""};
    });
  }
  return rep;
}

VerificationReport verify_almost(AlmostLeftSemiBrace const& a, AlmostProfile profile) {
  return verify_almost(a.add, a.mul, a.iota, profile);
}

LambdaFamily derived_lambda(AlmostLeftSemiBrace const& a) {
  int n = a.add.size();
  std::vector<SelfMap> maps;
  maps.reserve(n);
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> img(n);
    for (Element b = 0; b < n; ++b) img[b] = a.mul(x, a.add(a.iota(x), b));
    maps.emplace_back(std::move(img));
  }
  return LambdaFamily(std::move(maps));
}

BraceLikeSemiTruss almost_to_bracelike(AlmostLeftSemiBrace const& a) {
  return {a.add, a.mul, derived_lambda(a)};
}

VerificationReport iota_properties(AlmostLeftSemiBrace const& a) {
  auto g = require_mul_group(a.mul, "iota_properties");
  int n = a.add.size();
  Element i1 = a.iota(g.identity);
  VerificationReport rep("iota");
  rep.run("add-iota1-padding", [&]() -> CheckOutcome {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (a.add(x, y) != a.add(a.add(x, i1), y)) return {false, {x, y}, ""};
    return {};
  });
  rep.run("iota-bijective",
          [&]() -> CheckOutcome { return {a.iota.is_bijective(), {}, ""}; });
  rep.run("iota-forced-form", [&]() -> CheckOutcome {
    for (Element x = 0; x < n; ++x)
      if (a.iota(x) != a.mul(g.inverse[x], i1))
        return {false, {x}, "iota(a) != inv(a) o iota(1)"};
    return {};
  });
  rep.run("iota-inverse-law", [&]() -> CheckOutcome {
    auto inv_iota = a.iota.inverse();
    if (!inv_iota) return {false, {}, "not evaluated: iota is not bijective"};
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if ((*inv_iota)(a.mul(x, y)) != a.mul((*inv_iota)(y), g.inverse[x]))
          return {false, {x, y}, ""};
    return {};
  });
  return rep;
}

PairCheck check_compat(AlmostLeftSemiBrace const& a) {
  auto g = require_mul_group(a.mul, "check_compat");
  int n = a.add.size();
  Element i1 = a.iota(g.identity);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.mul(a.add(a.iota(x), y), i1) != a.add(a.iota(x), a.mul(y, i1)))
        return {false, std::make_pair(x, y)};
  return {};
}

LeftSemiBrace associated_semi_brace(AlmostLeftSemiBrace const& a) {
  int n = a.add.size();
  auto inv_iota = a.iota.inverse();
  if (!inv_iota) throw Error(Errc::iota_not_bijective, "iota has no inverse");
  BinOpTable oplus(n), opp(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      oplus.set(x, y, (*inv_iota)(a.add(a.iota(x), a.iota(y))));
      opp.set(x, y, a.mul(y, x));
    }
  return {std::move(oplus), std::move(opp)};
}

AlmostLeftSemiBrace lift_semi_brace(LeftSemiBrace const& s) {
  auto g = require_mul_group(s.mul, "lift_semi_brace");
  return {s.add, s.mul, SelfMap(g.inverse)};
}

bool is_almost_homomorphism(SelfMap const& f, AlmostLeftSemiBrace const& x,
                            AlmostLeftSemiBrace const& y) {
  require_same_size(f.size(), x.add.size(), "is_almost_homomorphism");
  require_same_size(x.add.size(), y.add.size(), "is_almost_homomorphism");
  int n = f.size();
  for (Element a = 0; a < n; ++a) {
    if (f(x.iota(a)) != y.iota(f(a))) return false;
    for (Element b = 0; b < n; ++b) {
      if (f(x.add(a, b)) != y.add(f(a), f(b))) return false;
      if (f(x.mul(a, b)) != y.mul(f(a), f(b))) return false;
    }
  }
  return true;
}

}  // namespace trusslab
