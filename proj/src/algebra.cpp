#include "trusslab/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace trusslab {

char const* errc_name(Errc c) {
  switch (c) {
    case Errc::none: return "none";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_a_group: return "NotAGroup";
    case Errc::no_identity: return "NoIdentity";
    case Errc::missing_inverse: return "MissingInverse";
    case Errc::not_verified: return "NotVerified";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::postcondition_violated: return "PostconditionViolated";
    case Errc::iota_not_bijective: return "IotaNotBijective";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::syntax: return "Syntax";
    case Errc::range: return "Range";
    case Errc::kind_field_mismatch: return "KindFieldMismatch";
    case Errc::io_error: return "Io";
  }
  return "unknown";
}

BinOpTable BinOpTable::from_rows(std::vector<std::vector<Element>> const& rows) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(Errc::range, "table must have at least one row");
  BinOpTable t(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(Errc::range, "row " + std::to_string(i) + " has " +
                                   std::to_string(rows[i].size()) + " entries, expected " +
                                   std::to_string(n));
    for (int j = 0; j < n; ++j) {
      Element v = rows[i][j];
      if (v < 0 || v >= n)
        throw Error(Errc::range, "[" + std::to_string(i) + "][" + std::to_string(j) +
                                     "] out of range");
      t.set(i, j, v);
    }
  }
  return t;
}

std::vector<std::vector<Element>> BinOpTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].assign(cells_.begin() + static_cast<size_t>(i) * n_,
                  cells_.begin() + static_cast<size_t>(i + 1) * n_);
  return out;
}

SelfMap SelfMap::identity(int n) {
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), 0);
  return SelfMap(std::move(img));
}

SelfMap SelfMap::constant(int n, Element v) { return SelfMap(std::vector<Element>(n, v)); }

bool SelfMap::is_bijective() const {
  std::vector<char> seen(image.size(), 0);
  for (Element v : image) {
    if (v < 0 || v >= size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::optional<SelfMap> SelfMap::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<Element> inv(image.size());
  for (int i = 0; i < size(); ++i) inv[image[i]] = i;
  return SelfMap(std::move(inv));
}

SelfMap compose(SelfMap const& f, SelfMap const& g) {
  std::vector<Element> img(g.image.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = f.image[g.image[i]];
  return SelfMap(std::move(img));
}

SelfMap map_power(SelfMap const& f, int k) {
  SelfMap acc = f;
  for (int i = 1; i < k; ++i) acc = compose(f, acc);
  return acc;
}

FiniteSemigroup make_semigroup(BinOpTable op) {
  if (auto w = associativity_witness(op))
    throw Error(Errc::not_associative, "table is not associative");
  return FiniteSemigroup{std::move(op)};
}

std::optional<Triple> associativity_witness(BinOpTable const& op) {
  int n = op.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) return Triple{a, b, c};
  return std::nullopt;
}

bool is_associative(BinOpTable const& op) { return !associativity_witness(op); }

GroupResult as_group(BinOpTable const& op) {
  GroupResult res;
  if (auto w = associativity_witness(op)) {
    res.defect = Errc::not_associative;
    res.assoc_witness = w;
    res.reason = "not associative at (" + std::to_string(w->a) + "," + std::to_string(w->b) +
                 "," + std::to_string(w->c) + ")";
    return res;
  }
  int n = op.size();
  Element identity = -1;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = op(e, x) == x && op(x, e) == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    res.defect = Errc::no_identity;
    res.reason = "no two-sided identity";
    return res;
  }
  std::vector<Element> inverse(n, -1);
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x)
      if (op(a, x) == identity && op(x, a) == identity) {
        inverse[a] = x;
        break;
      }
    if (inverse[a] < 0) {
      res.defect = Errc::missing_inverse;
      res.offender = a;
      res.reason = "element " + std::to_string(a) + " has no inverse";
      return res;
    }
  }
  res.group = FiniteGroup{op, identity, std::move(inverse)};
  return res;
}

std::vector<Element> full_carrier(int n) {
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<Element> idempotents(BinOpTable const& op) {
  std::vector<Element> out;
  for (Element e = 0; e < op.size(); ++e)
    if (op(e, e) == e) out.push_back(e);
  return out;
}

std::optional<Element> zero_element(BinOpTable const& op) {
  int n = op.size();
  for (Element z = 0; z < n; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = op(z, x) == z && op(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::vector<Element> product_set(BinOpTable const& op, std::span<Element const> xs,
                                 std::span<Element const> ys) {
  std::vector<char> mark(op.size(), 0);
  for (Element x : xs)
    for (Element y : ys) mark[op(x, y)] = 1;
  std::vector<Element> out;
  for (Element e = 0; e < op.size(); ++e)
    if (mark[e]) out.push_back(e);
  return out;
}

bool contains(std::span<Element const> sorted_set, Element e) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), e);
}

bool is_subgroup(std::span<Element const> subset, FiniteGroup const& g) {
  if (subset.empty()) throw Error(Errc::empty_subset, "subset is empty");
  std::vector<char> in(g.op.size(), 0);
  for (Element x : subset) in[x] = 1;
  if (!in[g.identity]) return false;
  for (Element x : subset) {
    if (!in[g.inverse[x]]) return false;
    for (Element y : subset)
      if (!in[g.op(x, y)]) return false;
  }
  return true;
}

bool is_simple(BinOpTable const& op) {
  if (!is_associative(op)) throw Error(Errc::not_associative, "is_simple needs a semigroup");
  int n = op.size();
  if (n == 1) return true;
  auto all = full_carrier(n);
  for (Element b = 0; b < n; ++b) {
    std::vector<Element> just_b{b};
    auto ideal = product_set(op, product_set(op, all, just_b), all);
    if (static_cast<int>(ideal.size()) != n) return false;
  }
  return true;
}

bool is_primitive_idempotent(Element e, BinOpTable const& op) {
  if (op(e, e) != e) throw Error(Errc::not_idempotent, "element is not idempotent");
  for (Element f : idempotents(op))
    if (f != e && op(e, f) == f && op(f, e) == f) return false;
  return true;
}

bool is_completely_simple(BinOpTable const& op) {
  if (!is_associative(op))
    throw Error(Errc::not_associative, "is_completely_simple needs a semigroup");
  if (!is_simple(op)) return false;
  for (Element e : idempotents(op))
    if (is_primitive_idempotent(e, op)) return true;
  return false;
}

bool is_endomorphism(SelfMap const& f, BinOpTable const& op) {
  int n = op.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (f(op(a, b)) != op(f(a), f(b))) return false;
  return true;
}

}  // namespace trusslab
