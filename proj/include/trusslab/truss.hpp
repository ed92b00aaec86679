#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trusslab/algebra.hpp"
#include "trusslab/report.hpp"

namespace trusslab {

// One self-map per element; maps[a] is the action of a on the carrier.
struct LambdaFamily {
  std::vector<SelfMap> maps;

  LambdaFamily() = default;
  explicit LambdaFamily(std::vector<SelfMap> ms) : maps(std::move(ms)) {}
  static LambdaFamily identity(int n);
  static LambdaFamily constant(int n, SelfMap f);
  static LambdaFamily from_rows(std::vector<std::vector<Element>> const& rows);

  int size() const { return static_cast<int>(maps.size()); }
  SelfMap const& operator[](Element a) const { return maps[a]; }
  std::vector<std::vector<Element>> rows() const;

  bool operator==(LambdaFamily const&) const = default;
  auto operator<=>(LambdaFamily const&) const = default;
};

// (B,+) and (B,o) semigroups with a o (b+c) = (a o b) + lambda_a(c).
struct LeftSemiTruss {
  BinOpTable add;
  BinOpTable mul;
  LambdaFamily lambda;
};

// Semi-truss with (B,o) a group and lambda a morphism (B,o) -> End(B,+).
struct BraceLikeSemiTruss {
  BinOpTable add;
  BinOpTable mul;
  LambdaFamily lambda;
};

// Two group operations with a o (b+c) = (a o b) - sigma(a) + (a o c).
struct SkewLeftTruss {
  BinOpTable add;
  BinOpTable mul;
  SelfMap sigma;
};

LeftSemiTruss to_semi_truss(BraceLikeSemiTruss const& t);

VerificationReport verify_left_semi_truss(BinOpTable const& add, BinOpTable const& mul,
                                          LambdaFamily const& lambda);
VerificationReport verify_brace_like(BinOpTable const& add, BinOpTable const& mul,
                                     LambdaFamily const& lambda);
VerificationReport verify_skew_truss(BinOpTable const& add, BinOpTable const& mul,
                                     SelfMap const& sigma);

VerificationReport verify_left_semi_truss(LeftSemiTruss const& t);
VerificationReport verify_brace_like(BraceLikeSemiTruss const& t);
VerificationReport verify_skew_truss(SkewLeftTruss const& t);

// Identities of the multiplicative identity's action: lambda_1 idempotent and
// neutral for the family, a+b = a+lambda_1(b), and 1+B closed under o.
VerificationReport lemma_one_suite(BraceLikeSemiTruss const& t);

// B+B: contains 1, is a subgroup of (B,o), complement-plus-1 is a subgroup,
// and B+B = B.  Computed sets are recorded in the check notes.
VerificationReport lemma_bb_suite(BraceLikeSemiTruss const& t);

// Constructive search for an additive idempotent z with 1+B+z = z+B+z a
// group under +.  The assertions report re-verifies the outcome directly.
struct SubgroupIdempotent {
  Element z = -1;
  std::vector<Element> subgroup;  // 1+B+z
  VerificationReport assertions;
  bool ok() const { return assertions.passed(); }
};
SubgroupIdempotent find_subgroup_idempotent(BraceLikeSemiTruss const& t);

// c in c+z+B for every c, and B+z+B = B.  Requires z additive idempotent with
// z+B+z a group under +; throws precondition_violated otherwise.
bool lemma_bzb_check(BraceLikeSemiTruss const& t, Element z);

// z primitive and (B,+) completely simple, via the constructed idempotent.
VerificationReport theorem_completely_simple(BraceLikeSemiTruss const& t);

// lambda_a(e) idempotent for every a and every additive idempotent e.
bool lemma_lambda_idempotents(LeftSemiTruss const& t);

struct ClosureCheck {
  bool closed = true;
  std::optional<std::pair<Element, Element>> witness;  // (a,b) with a o b not idempotent
};
ClosureCheck idempotents_closed_under_mul(LeftSemiTruss const& t);

}  // namespace trusslab
