#pragma once

#include <optional>
#include <utility>

#include "trusslab/algebra.hpp"
#include "trusslab/report.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

// (B,+) semigroup, (B,o) group, a o (b+c) = a o b + a o (inv(a)+c).
struct LeftSemiBrace {
  BinOpTable add;
  BinOpTable mul;
};

// Semi-brace variant where the role of inv(a) is played by a map iota with
// iota(a o b) = inv(b) o iota(a).
struct AlmostLeftSemiBrace {
  BinOpTable add;
  BinOpTable mul;
  SelfMap iota;
};

VerificationReport verify_left_semi_brace(BinOpTable const& add, BinOpTable const& mul);
VerificationReport verify_left_semi_brace(LeftSemiBrace const& s);

// The default profile checks the two defining identities; the miccoli profile
// additionally requires (B,+) left cancellative and the compatibility law.
enum class AlmostProfile { standard, miccoli };
VerificationReport verify_almost(BinOpTable const& add, BinOpTable const& mul,
                                 SelfMap const& iota,
                                 AlmostProfile profile = AlmostProfile::standard);
VerificationReport verify_almost(AlmostLeftSemiBrace const& a,
                                 AlmostProfile profile = AlmostProfile::standard);

// lambda_a(b) = a o (iota(a) + b).
LambdaFamily derived_lambda(AlmostLeftSemiBrace const& a);

// Bundle (add, mul, derived lambda); passes verify_brace_like for valid input.
BraceLikeSemiTruss almost_to_bracelike(AlmostLeftSemiBrace const& a);

// a+b = a+iota(1)+b, iota bijective, iota(a) = inv(a) o iota(1), and the
// inverse identity iota^-1(a o b) = iota^-1(b) o inv(a).
VerificationReport iota_properties(AlmostLeftSemiBrace const& a);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};
// (iota(a)+b) o iota(1) = iota(a) + b o iota(1).
PairCheck check_compat(AlmostLeftSemiBrace const& a);

// (B, ⊕, o^op) with a⊕b = iota^-1(iota(a)+iota(b)); throws iota_not_bijective.
LeftSemiBrace associated_semi_brace(AlmostLeftSemiBrace const& a);

// View a semi-brace as an almost one via iota(a) = inv(a).
AlmostLeftSemiBrace lift_semi_brace(LeftSemiBrace const& s);

// f is a +-homomorphism, an o-homomorphism, and f iota_x = iota_y f.
bool is_almost_homomorphism(SelfMap const& f, AlmostLeftSemiBrace const& x,
                            AlmostLeftSemiBrace const& y);

}  // namespace trusslab
