#pragma once

#include <functional>
#include <vector>

#include "trusslab/algebra.hpp"
#include "trusslab/semibrace.hpp"
#include "trusslab/truss.hpp"
#include "trusslab/ybe.hpp"

// Unpruned brute-force counterparts of the library's enumerators and checks.
// Everything here walks the raw search space; the library must agree with it.
namespace trusslab::oracle {

void all_tables(int n, std::function<void(BinOpTable const&)> const& fn);
std::vector<SelfMap> all_selfmaps(int n);

std::vector<BinOpTable> semigroups(int n);
std::vector<BinOpTable> groups(int n);
std::vector<BraceLikeSemiTruss> brace_like(int n);
std::vector<AlmostLeftSemiBrace> almost(int n);
std::vector<LeftSemiBrace> semi_braces(int n);

// Simplicity as the absence of a proper nonempty two-sided ideal.
bool is_simple_by_ideals(BinOpTable const& op);

// Braid check through explicit composite maps on all of B^3.
bool ybe_by_composites(SolutionMap const& r);

}  // namespace trusslab::oracle
