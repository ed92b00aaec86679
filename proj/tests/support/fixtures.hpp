#pragma once

#include "trusslab/algebra.hpp"
#include "trusslab/semibrace.hpp"
#include "trusslab/truss.hpp"

namespace trusslab::fixtures {

inline BinOpTable left_zero(int n) {
  BinOpTable t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.set(a, b, a);
  return t;
}

inline BinOpTable right_zero(int n) {
  BinOpTable t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.set(a, b, b);
  return t;
}

inline BinOpTable zn_add(int n) {
  BinOpTable t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.set(a, b, (a + b) % n);
  return t;
}

inline BinOpTable z2_xor() { return zn_add(2); }

// Klein four-group as xor on two-bit indices.
inline BinOpTable klein_xor() {
  BinOpTable t(4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) t.set(a, b, a ^ b);
  return t;
}

// Permutations of {0,1,2} in lexicographic one-line order; (x o y)(k) = x(y(k)).
inline BinOpTable s3_compose() {
  return BinOpTable::from_rows({
      {0, 1, 2, 3, 4, 5},
      {1, 0, 4, 5, 2, 3},
      {2, 3, 0, 1, 5, 4},
      {3, 2, 5, 4, 0, 1},
      {4, 5, 1, 0, 3, 2},
      {5, 4, 3, 2, 1, 0},
  });
}

// Left-zero addition with the two-element group; lambda is the identity family.
inline BraceLikeSemiTruss fix_lz2() {
  return {left_zero(2), z2_xor(), LambdaFamily::identity(2)};
}

// Carrier Z2 x Z2 indexed as 2i+j.  Addition (i,j)+(h,k) = (1+i+h, j),
// multiplication is the Klein group, and every element acts by (h,k) -> (h,0).
inline LeftSemiTruss fix_klein() {
  auto add = BinOpTable::from_rows({
      {2, 2, 0, 0},
      {3, 3, 1, 1},
      {0, 0, 2, 2},
      {1, 1, 3, 3},
  });
  SelfMap f{{0, 0, 2, 2}};
  return {add, klein_xor(), LambdaFamily::constant(4, f)};
}

inline BraceLikeSemiTruss fix_klein_brace_like() {
  auto k = fix_klein();
  return {k.add, k.mul, k.lambda};
}

// S3 with a o b = a + b - a and sigma constant at the additive identity.
inline SkewLeftTruss fix_conj_s3() {
  auto add = s3_compose();
  auto g = *as_group(add).group;
  BinOpTable mul(6);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) mul.set(a, b, add(add(a, b), g.inverse[a]));
  return {add, mul, SelfMap::constant(6, g.identity)};
}

// Right-zero addition over the cyclic group of order three.
inline LeftSemiBrace fix_rz_z3() { return {right_zero(3), zn_add(3)}; }

inline LeftSemiBrace trivial_z2() { return {z2_xor(), z2_xor()}; }

inline LeftSemiBrace lz_z3() { return {left_zero(3), zn_add(3)}; }

// Almost structure whose iota is not the group inverse: iota(1) = 1 on Z2.
inline AlmostLeftSemiBrace almost_lz2_swapped() {
  return {left_zero(2), z2_xor(), SelfMap{{1, 0}}};
}

}  // namespace trusslab::fixtures
