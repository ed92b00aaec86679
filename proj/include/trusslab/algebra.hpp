#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trusslab/error.hpp"

namespace trusslab {

// Elements are dense indices 0..n-1 into a Cayley table.
using Element = int;

struct Triple {
  Element a = 0, b = 0, c = 0;
  bool operator==(Triple const&) const = default;
};

// Square Cayley table over elements 0..n-1, row-major.
class BinOpTable {
 public:
  BinOpTable() = default;
  explicit BinOpTable(int n, Element fill = 0)
      : n_(n), cells_(static_cast<size_t>(n) * static_cast<size_t>(n), fill) {}

  // Validates shape and entry range; throws Errc::range.
  static BinOpTable from_rows(std::vector<std::vector<Element>> const& rows);

  int size() const { return n_; }
  Element operator()(Element a, Element b) const {
    return cells_[static_cast<size_t>(a) * n_ + b];
  }
  void set(Element a, Element b, Element v) { cells_[static_cast<size_t>(a) * n_ + b] = v; }
  std::vector<Element> const& cells() const { return cells_; }
  std::vector<std::vector<Element>> rows() const;

  bool operator==(BinOpTable const&) const = default;
  auto operator<=>(BinOpTable const&) const = default;

 private:
  int n_ = 0;
  std::vector<Element> cells_;
};

// Total self-map of the carrier, stored as an image array.
struct SelfMap {
  std::vector<Element> image;

  SelfMap() = default;
  explicit SelfMap(std::vector<Element> img) : image(std::move(img)) {}
  static SelfMap identity(int n);
  static SelfMap constant(int n, Element v);

  int size() const { return static_cast<int>(image.size()); }
  Element operator()(Element a) const { return image[a]; }
  bool is_bijective() const;
  std::optional<SelfMap> inverse() const;

  bool operator==(SelfMap const&) const = default;
  auto operator<=>(SelfMap const&) const = default;
};

SelfMap compose(SelfMap const& f, SelfMap const& g);  // x -> f(g(x))
SelfMap map_power(SelfMap const& f, int k);           // k >= 1

struct FiniteSemigroup {
  BinOpTable op;
};
FiniteSemigroup make_semigroup(BinOpTable op);  // throws Errc::not_associative

struct FiniteGroup {
  BinOpTable op;
  Element identity = 0;
  std::vector<Element> inverse;
};

// Outcome of as_group: either the group data or the first missing axiom.
struct GroupResult {
  std::optional<FiniteGroup> group;
  Errc defect = Errc::none;
  std::string reason;
  std::optional<Triple> assoc_witness;
  Element offender = -1;  // element without a two-sided inverse

  explicit operator bool() const { return group.has_value(); }
};

std::optional<Triple> associativity_witness(BinOpTable const& op);
bool is_associative(BinOpTable const& op);
GroupResult as_group(BinOpTable const& op);

std::vector<Element> full_carrier(int n);
std::vector<Element> idempotents(BinOpTable const& op);
std::optional<Element> zero_element(BinOpTable const& op);
// { op(x,y) : x in xs, y in ys }, sorted and deduplicated.
std::vector<Element> product_set(BinOpTable const& op, std::span<Element const> xs,
                                 std::span<Element const> ys);
bool contains(std::span<Element const> sorted_set, Element e);

bool is_subgroup(std::span<Element const> subset, FiniteGroup const& g);  // throws empty_subset
bool is_simple(BinOpTable const& op);                                     // throws not_associative
bool is_primitive_idempotent(Element e, BinOpTable const& op);            // throws not_idempotent
bool is_completely_simple(BinOpTable const& op);                          // throws not_associative
bool is_endomorphism(SelfMap const& f, BinOpTable const& op);

}  // namespace trusslab
