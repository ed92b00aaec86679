#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "trusslab/algebra.hpp"
#include "trusslab/semibrace.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

enum class StructureKind { semigroup, group, brace_like, semi_brace, almost };

char const* kind_name(StructureKind k);
std::optional<StructureKind> kind_from_name(std::string_view s);

struct EnumLimits {
  std::optional<long long> max_instances;
  std::optional<double> max_seconds;
};

struct EnumSpec {
  int order = 1;
  StructureKind kind = StructureKind::semigroup;
  bool modulo_iso = false;
  bool slow = false;  // lifts the brace-like order cap from 3 to 4
  EnumLimits limits;
  std::optional<int> max_order_override;
};

struct EnumSummary {
  long long count = 0;
  bool partial = false;
  std::string stop_reason;
};

enum class EnumControl { next, stop };

int max_enum_order(StructureKind kind, EnumSpec const& spec);

// All streams are lexicographic over flattened table cells and re-verify every
// instance on yield.  Throws order_too_large above the kind's cap.
EnumSummary enum_semigroups(EnumSpec const& spec,
                            std::function<EnumControl(BinOpTable const&)> const& yield);
EnumSummary enum_groups(EnumSpec const& spec,
                        std::function<EnumControl(FiniteGroup const&)> const& yield);
EnumSummary enum_brace_like(EnumSpec const& spec,
                            std::function<EnumControl(BraceLikeSemiTruss const&)> const& yield);
EnumSummary enum_semi_braces(EnumSpec const& spec,
                             std::function<EnumControl(LeftSemiBrace const&)> const& yield);
EnumSummary enum_almost(EnumSpec const& spec,
                        std::function<EnumControl(AlmostLeftSemiBrace const&)> const& yield);

std::vector<BinOpTable> collect_semigroups(EnumSpec spec);
std::vector<FiniteGroup> collect_groups(EnumSpec spec);
std::vector<BraceLikeSemiTruss> collect_brace_like(EnumSpec spec);
std::vector<LeftSemiBrace> collect_semi_braces(EnumSpec spec);
std::vector<AlmostLeftSemiBrace> collect_almost(EnumSpec spec);

// Relabel under a bijection p (old index -> new index).
BinOpTable relabel(BinOpTable const& t, std::vector<Element> const& p);
SelfMap relabel(SelfMap const& m, std::vector<Element> const& p);
LambdaFamily relabel(LambdaFamily const& lf, std::vector<Element> const& p);

// All additive endomorphisms of the table, in lexicographic image order.
std::vector<SelfMap> endomorphisms(BinOpTable const& add);

}  // namespace trusslab
