#include "trusslab/truss.hpp"

#include <algorithm>

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

CheckOutcome group_outcome(BinOpTable const& op) {
  auto g = as_group(op);
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

LambdaFamily LambdaFamily::identity(int n) {
  std::vector<SelfMap> ms(n, SelfMap::identity(n));
  return LambdaFamily(std::move(ms));
}

LambdaFamily LambdaFamily::constant(int n, SelfMap f) {
  std::vector<SelfMap> ms(n, std::move(f));
  return LambdaFamily(std::move(ms));
}

LambdaFamily LambdaFamily::from_rows(std::vector<std::vector<Element>> const& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<SelfMap> ms;
  ms.reserve(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw Error(Errc::range, "lambda row " + std::to_string(a) + " has wrong length");
    for (Element v : rows[a])
      if (v < 0 || v >= n) throw Error(Errc::range, "lambda entry out of range");
    ms.emplace_back(rows[a]);
  }
  return LambdaFamily(std::move(ms));
}

std::vector<std::vector<Element>> LambdaFamily::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(maps.size());
  for (auto const& m : maps) out.push_back(m.image);
  return out;
}

LeftSemiTruss to_semi_truss(BraceLikeSemiTruss const& t) { return {t.add, t.mul, t.lambda}; }

VerificationReport verify_left_semi_truss(BinOpTable const& add, BinOpTable const& mul,
                                          LambdaFamily const& lambda) {
  require_same_size(add.size(), mul.size(), "verify_left_semi_truss");
  require_same_size(add.size(), lambda.size(), "verify_left_semi_truss");
  int n = add.size();
  VerificationReport rep("left semi-truss");
  rep.run("add-associative", [&] { return associativity_outcome(add); });
  rep.run("mul-associative", [&] { return associativity_outcome(mul); });
  rep.run("semi-truss-law", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), lambda[a](c))) return {false, {a, b, c}, ""};
    return {};
  });
  return rep;
}

VerificationReport verify_brace_like(BinOpTable const& add, BinOpTable const& mul,
                                     LambdaFamily const& lambda) {
  auto rep = verify_left_semi_truss(add, mul, lambda);
  int n = add.size();
  rep.run("mul-group", [&] { return group_outcome(mul); });
  rep.run("lambda-endomorphisms", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (lambda[a](add(x, y)) != add(lambda[a](x), lambda[a](y)))
            return {false, {a, x, y}, "lambda_a is not an endomorphism of (B,+)"};
    return {};
  });
  rep.run("lambda-morphism", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (lambda[mul(a, b)] != compose(lambda[a], lambda[b]))
          return {false, {a, b}, "lambda_{a o b} != lambda_a lambda_b"};
    return {};
  });
  return rep;
}

VerificationReport verify_skew_truss(BinOpTable const& add, BinOpTable const& mul,
                                     SelfMap const& sigma) {
  require_same_size(add.size(), mul.size(), "verify_skew_truss");
  require_same_size(add.size(), sigma.size(), "verify_skew_truss");
  int n = add.size();
  VerificationReport rep("skew left truss");
  auto addg = as_group(add);
  rep.run("add-group", [&] { return group_outcome(add); });
  rep.run("mul-group", [&] { return group_outcome(mul); });
  rep.run("skew-truss-law", [&]() -> CheckOutcome {
    if (!addg)
      return {false, {}, "not evaluated: additive table has no inverses"};
    auto const& neg = addg.group->inverse;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(add(mul(a, b), neg[sigma(a)]), mul(a, c)))
            return {false, {a, b, c}, ""};
    return {};
  });
  return rep;
}

VerificationReport verify_left_semi_truss(LeftSemiTruss const& t) {
  return verify_left_semi_truss(t.add, t.mul, t.lambda);
}
VerificationReport verify_brace_like(BraceLikeSemiTruss const& t) {
  return verify_brace_like(t.add, t.mul, t.lambda);
}
VerificationReport verify_skew_truss(SkewLeftTruss const& t) {
  return verify_skew_truss(t.add, t.mul, t.sigma);
}

VerificationReport lemma_one_suite(BraceLikeSemiTruss const& t) {
  auto g = require_mul_group(t.mul, "lemma_one_suite");
  int n = t.add.size();
  Element one = g.identity;
  auto const& lam = t.lambda;
  VerificationReport rep("identity action");
  rep.run("lambda1-idempotent",
          [&]() -> CheckOutcome { return {compose(lam[one], lam[one]) == lam[one], {}, ""}; });
  rep.run("lambda1-unit-for-lambdas", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      if (compose(lam[one], lam[a]) != lam[a] || compose(lam[a], lam[one]) != lam[a])
        return {false, {a}, ""};
    return {};
  });
  rep.run("add-absorbs-lambda1", [&]() -> CheckOutcome {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (t.add(a, b) != t.add(a, lam[one](b))) return {false, {a, b}, ""};
    return {};
  });
  rep.run("one-plus-b-mul-closed", [&]() -> CheckOutcome {
    std::vector<Element> just_one{one};
    auto sub = product_set(t.add, just_one, full_carrier(n));
    for (Element x : sub)
      for (Element y : sub)
        if (!contains(sub, t.mul(x, y)))
          return {false, {x, y}, "1+B = " + set_to_string(sub)};
    return {true, {}, "1+B = " + set_to_string(sub)};
  });
  return rep;
}

VerificationReport lemma_bb_suite(BraceLikeSemiTruss const& t) {
  auto g = require_mul_group(t.mul, "lemma_bb_suite");
  int n = t.add.size();
  auto all = full_carrier(n);
  auto bb = product_set(t.add, all, all);
  VerificationReport rep("additive products");
  std::string bbs = "B+B = " + set_to_string(bb);
  rep.run("identity-in-bb",
          [&]() -> CheckOutcome { return {contains(bb, g.identity), {}, bbs}; });
  rep.run("bb-subgroup", [&]() -> CheckOutcome { return {is_subgroup(bb, g), {}, bbs}; });
  rep.run("complement-subgroup", [&]() -> CheckOutcome {
    std::vector<Element> comp;
    for (Element e = 0; e < n; ++e)
      if (!contains(bb, e) || e == g.identity) comp.push_back(e);
    return {is_subgroup(comp, g), {}, "(B \\ (B+B)) u {1} = " + set_to_string(comp)};
  });
  rep.run("bb-equals-b", [&]() -> CheckOutcome {
    return {static_cast<int>(bb.size()) == n, {}, bbs};
  });
  return rep;
}

namespace {

// Direct group-axiom check of (H,+) with a prescribed identity; H need not
// contain the multiplicative identity, so is_subgroup does not apply.
CheckOutcome subgroup_axioms(BinOpTable const& add, std::vector<Element> const& H, Element z) {
  for (Element h : H)
    for (Element k : H)
      if (!contains(H, add(h, k))) return {false, {h, k}, "not closed under +"};
  for (Element h : H)
    if (add(z, h) != h || add(h, z) != h) return {false, {h}, "z is not an identity for H"};
  for (Element h : H) {
    bool found = false;
    for (Element k : H)
      if (add(h, k) == z && add(k, h) == z) {
        found = true;
        break;
      }
    if (!found) return {false, {h}, "no inverse in H"};
  }
  return {};
}

VerificationReport idempotent_assertions(BraceLikeSemiTruss const& t, FiniteGroup const& g,
                                         Element z, std::vector<Element> const& H) {
  int n = t.add.size();
  auto all = full_carrier(n);
  VerificationReport rep("constructed idempotent");
  rep.run("z-idempotent", [&]() -> CheckOutcome {
    return {t.add(z, z) == z, {z}, "z = " + std::to_string(z)};
  });
  rep.run("zbz-equals-1bz", [&]() -> CheckOutcome {
    std::vector<Element> just_z{z}, just_one{g.identity};
    auto zbz = product_set(t.add, product_set(t.add, just_z, all), just_z);
    auto obz = product_set(t.add, product_set(t.add, just_one, all), just_z);
    return {zbz == obz, {}, "z+B+z = " + set_to_string(zbz) + ", 1+B+z = " + set_to_string(obz)};
  });
  rep.run("subgroup-axioms", [&]() -> CheckOutcome {
    auto out = subgroup_axioms(t.add, H, z);
    if (out.note.empty()) out.note = "H = " + set_to_string(H);
    return out;
  });
  return rep;
}

}  // namespace

SubgroupIdempotent find_subgroup_idempotent(BraceLikeSemiTruss const& t) {
  auto g = require_mul_group(t.mul, "find_subgroup_idempotent");
  int n = t.add.size();
  Element one = g.identity;
  auto const& lam = t.lambda;
  auto all = full_carrier(n);
  std::vector<Element> just_one{one};

  auto one_plus = [&](Element b) { return t.add(one, b); };
  auto h_for = [&](Element z) {
    std::vector<Element> just_z{z};
    return product_set(t.add, product_set(t.add, just_one, all), just_z);
  };

  bool case1 = true;
  for (Element b = 0; b < n && case1; ++b) case1 = one_plus(b) == one;
  if (case1) {
    SubgroupIdempotent out;
    out.z = one;
    out.subgroup = h_for(one);
    out.assertions = idempotent_assertions(t, g, out.z, out.subgroup);
    return out;
  }

  auto one_plus_b = product_set(t.add, just_one, all);
  std::vector<Element> candidates;
  for (Element b = 0; b < n; ++b)
    if (contains(one_plus_b, b) && one_plus(b) != one) candidates.push_back(b);
  if (candidates.empty())
    for (Element b = 0; b < n; ++b)
      if (one_plus(b) != one) candidates.push_back(b);

  SubgroupIdempotent last;
  for (Element b : candidates) {
    Element u = one_plus(b);
    // order of 1+b in (B,o), powers via a^{k+1} = a o a^k
    int order = 1;
    for (Element p = u; p != one; p = t.mul(u, p)) ++order;
    // z_b = b + sum_{i=1..order-1} lambda_{(1+b)^i}(b), accumulated left to right
    Element acc = b;
    Element p = u;
    for (int i = 1; i < order; ++i) {
      acc = t.add(acc, lam[p](b));
      p = t.mul(u, p);
    }
    Element z = (acc == one) ? one : acc;
    SubgroupIdempotent out;
    out.z = z;
    out.subgroup = h_for(z);
    out.assertions = idempotent_assertions(t, g, z, out.subgroup);
    if (out.ok()) return out;
    last = std::move(out);
  }
  return last;  // assertions record what failed
}

bool lemma_bzb_check(BraceLikeSemiTruss const& t, Element z) {
  int n = t.add.size();
  if (z < 0 || z >= n || t.add(z, z) != z)
    throw Error(Errc::precondition_violated, "z is not an additive idempotent");
  auto all = full_carrier(n);
  std::vector<Element> just_z{z};
  auto zbz = product_set(t.add, product_set(t.add, just_z, all), just_z);
  if (!subgroup_axioms(t.add, zbz, z).pass)
    throw Error(Errc::precondition_violated, "z+B+z is not a group under +");
  for (Element c = 0; c < n; ++c) {
    bool found = false;
    Element cz = t.add(c, z);
    for (Element b = 0; b < n && !found; ++b) found = t.add(cz, b) == c;
    if (!found) return false;
  }
  auto bzb = product_set(t.add, product_set(t.add, all, just_z), all);
  return static_cast<int>(bzb.size()) == n;
}

VerificationReport theorem_completely_simple(BraceLikeSemiTruss const& t) {
  auto found = find_subgroup_idempotent(t);
  VerificationReport rep("completely simple additive structure");
  rep.append(found.assertions);
  rep.run("z-primitive", [&]() -> CheckOutcome {
    if (t.add(found.z, found.z) != found.z) return {false, {found.z}, "z not idempotent"};
    return {is_primitive_idempotent(found.z, t.add), {found.z}, ""};
  });
  rep.run("add-completely-simple",
          [&]() -> CheckOutcome { return {is_completely_simple(t.add), {}, ""}; });
  return rep;
}

bool lemma_lambda_idempotents(LeftSemiTruss const& t) {
  auto idem = idempotents(t.add);
  for (Element a = 0; a < t.add.size(); ++a)
    for (Element e : idem)
      if (!contains(idem, t.lambda[a](e))) return false;
  return true;
}

ClosureCheck idempotents_closed_under_mul(LeftSemiTruss const& t) {
  auto idem = idempotents(t.add);
  for (Element a : idem)
    for (Element b : idem)
      if (!contains(idem, t.mul(a, b))) return {false, std::make_pair(a, b)};
  return {};
}

}  // namespace trusslab
