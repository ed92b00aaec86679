#include "trusslab/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

namespace trusslab {

namespace {

using Clock = std::chrono::steady_clock;

struct RunState {
  EnumSpec const& spec;
  EnumSummary summary;
  Clock::time_point start = Clock::now();
  bool stopping = false;

  explicit RunState(EnumSpec const& s) : spec(s) {}

  bool over_time() {
    if (!spec.limits.max_seconds) return false;
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return secs > *spec.limits.max_seconds;
  }

  // Returns false when enumeration must stop.
  template <class T, class F>
  bool emit(T const& value, F const& yield) {
    if (spec.limits.max_instances && summary.count >= *spec.limits.max_instances) {
      summary.partial = true;
      summary.stop_reason = "instance limit";
      return false;
    }
    ++summary.count;
    if (yield(value) == EnumControl::stop) {
      summary.partial = true;
      summary.stop_reason = "stopped by caller";
      return false;
    }
    return true;
  }

  bool time_check() {
    if (over_time()) {
      summary.partial = true;
      summary.stop_reason = "time limit";
      return false;
    }
    return true;
  }
};

// Backtracking fill of the table, row-major, values ascending; prunes on any
// decidable associativity violation (and Latin violations when requested).
class TableSearch {
 public:
  TableSearch(int n, bool latin) : n_(n), latin_(latin), cells_(n * n, -1) {}

  template <class F>
  bool search(RunState& rs, F const& on_complete) {
    return fill(0, rs, on_complete);
  }

 private:
  int n_;
  bool latin_;
  std::vector<Element> cells_;

  Element at(Element a, Element b) const { return cells_[a * n_ + b]; }

  bool latin_ok(int idx, Element v) const {
    int row = idx / n_, col = idx % n_;
    for (int j = 0; j < n_; ++j)
      if (j != col && at(row, j) == v) return false;
    for (int i = 0; i < n_; ++i)
      if (i != row && at(i, col) == v) return false;
    return true;
  }

  bool assoc_ok() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        Element ab = at(a, b);
        if (ab < 0) continue;
        for (Element c = 0; c < n_; ++c) {
          Element bc = at(b, c);
          if (bc < 0) continue;
          Element l = at(ab, c), r = at(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  template <class F>
  bool fill(int idx, RunState& rs, F const& on_complete) {
    if (idx == n_ * n_) {
      BinOpTable t(n_);
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b) t.set(a, b, at(a, b));
      return on_complete(t);
    }
    if (!rs.time_check()) return false;
    for (Element v = 0; v < n_; ++v) {
      if (latin_ && !latin_ok(idx, v)) continue;
      cells_[idx] = v;
      if (assoc_ok()) {
        if (!fill(idx + 1, rs, on_complete)) {
          cells_[idx] = -1;
          return false;
        }
      }
      cells_[idx] = -1;
    }
    return true;
  }
};

void check_order(EnumSpec const& spec, int cap) {
  int effective = spec.max_order_override.value_or(cap);
  if (spec.order < 1 || spec.order > effective)
    throw Error(Errc::order_too_large, "order " + std::to_string(spec.order) +
                                           " exceeds the cap " + std::to_string(effective));
}

std::vector<std::vector<Element>> all_permutations(int n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Lexicographically minimal relabeling key decides orbit representatives.
template <class Key>
bool is_canonical(std::vector<std::vector<Element>> const& perms, Key const& key_under) {
  auto own = key_under(perms.front());  // perms.front() is the identity
  for (size_t i = 1; i < perms.size(); ++i)
    if (key_under(perms[i]) < own) return false;
  return true;
}

}  // namespace

char const* kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::semigroup: return "semigroup";
    case StructureKind::group: return "group";
    case StructureKind::brace_like: return "brace-like";
    case StructureKind::semi_brace: return "semi-brace";
    case StructureKind::almost: return "almost";
  }
  return "unknown";
}

std::optional<StructureKind> kind_from_name(std::string_view s) {
  if (s == "semigroup") return StructureKind::semigroup;
  if (s == "group") return StructureKind::group;
  if (s == "brace-like") return StructureKind::brace_like;
  if (s == "semi-brace" || s == "left-semi-brace") return StructureKind::semi_brace;
  if (s == "almost") return StructureKind::almost;
  return std::nullopt;
}

int max_enum_order(StructureKind kind, EnumSpec const& spec) {
  if (spec.max_order_override) return *spec.max_order_override;
  switch (kind) {
    case StructureKind::semigroup: return 4;
    case StructureKind::group: return 5;
    case StructureKind::brace_like: return spec.slow ? 4 : 3;
    case StructureKind::semi_brace: return 4;
    case StructureKind::almost: return 4;
  }
  return 1;
}

BinOpTable relabel(BinOpTable const& t, std::vector<Element> const& p) {
  int n = t.size();
  std::vector<Element> q(n);
  for (int i = 0; i < n; ++i) q[p[i]] = i;
  BinOpTable out(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out.set(a, b, p[t(q[a], q[b])]);
  return out;
}

SelfMap relabel(SelfMap const& m, std::vector<Element> const& p) {
  int n = m.size();
  std::vector<Element> q(n);
  for (int i = 0; i < n; ++i) q[p[i]] = i;
  std::vector<Element> img(n);
  for (int i = 0; i < n; ++i) img[i] = p[m(q[i])];
  return SelfMap(std::move(img));
}

LambdaFamily relabel(LambdaFamily const& lf, std::vector<Element> const& p) {
  int n = lf.size();
  std::vector<Element> q(n);
  for (int i = 0; i < n; ++i) q[p[i]] = i;
  std::vector<SelfMap> maps(n);
  for (int a = 0; a < n; ++a) maps[a] = relabel(lf[q[a]], p);
  return LambdaFamily(std::move(maps));
}

std::vector<SelfMap> endomorphisms(BinOpTable const& add) {
  int n = add.size();
  std::vector<SelfMap> out;
  std::vector<Element> img(n, 0);
  while (true) {
    SelfMap f{img};
    if (is_endomorphism(f, add)) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

EnumSummary enum_semigroups(EnumSpec const& spec,
                            std::function<EnumControl(BinOpTable const&)> const& yield) {
  check_order(spec, max_enum_order(StructureKind::semigroup, spec));
  RunState rs(spec);
  auto perms = all_permutations(spec.order);
  TableSearch search(spec.order, false);
  search.search(rs, [&](BinOpTable const& t) {
    if (!is_associative(t)) return true;  // soundness re-check on yield
    if (spec.modulo_iso &&
        !is_canonical(perms, [&](std::vector<Element> const& p) { return relabel(t, p).cells(); }))
      return true;
    return rs.emit(t, yield);
  });
  return rs.summary;
}

EnumSummary enum_groups(EnumSpec const& spec,
                        std::function<EnumControl(FiniteGroup const&)> const& yield) {
  check_order(spec, max_enum_order(StructureKind::group, spec));
  RunState rs(spec);
  auto perms = all_permutations(spec.order);
  TableSearch search(spec.order, true);
  search.search(rs, [&](BinOpTable const& t) {
    auto g = as_group(t);
    if (!g) return true;
    if (spec.modulo_iso &&
        !is_canonical(perms, [&](std::vector<Element> const& p) { return relabel(t, p).cells(); }))
      return true;
    return rs.emit(*g.group, yield);
  });
  return rs.summary;
}

namespace {

// Small generating set, greedily extended by the least element outside the
// generated subgroup; never empty.
std::vector<Element> generating_set(FiniteGroup const& g) {
  int n = g.op.size();
  std::vector<char> gen(n, 0);
  gen[g.identity] = 1;
  std::vector<Element> gens;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element a = 0; a < n; ++a)
        if (gen[a])
          for (Element b = 0; b < n; ++b)
            if (gen[b] && !gen[g.op(a, b)]) {
              gen[g.op(a, b)] = 1;
              grew = true;
            }
    }
  };
  for (Element a = 0; a < n; ++a)
    if (!gen[a]) {
      gens.push_back(a);
      gen[a] = 1;
      close();
    }
  if (gens.empty()) gens.push_back(g.identity);
  return gens;
}

int element_order(FiniteGroup const& g, Element a) {
  int k = 1;
  for (Element p = a; p != g.identity; p = g.op(a, p)) ++k;
  return k;
}

// Extend generator images to the whole group as nonempty products; the caller
// verifies the morphism property afterwards, so any ill-defined extension is
// rejected there.
std::vector<SelfMap> extend_lambda(FiniteGroup const& g, std::vector<Element> const& gens,
                                   std::vector<SelfMap> const& images) {
  int n = g.op.size();
  std::vector<SelfMap> lam(n);
  std::vector<char> assigned(n, 0);
  std::vector<Element> queue;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!assigned[gens[i]]) {
      lam[gens[i]] = images[i];
      assigned[gens[i]] = 1;
      queue.push_back(gens[i]);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Element x = queue[qi];
    for (size_t i = 0; i < gens.size(); ++i) {
      Element y = g.op(x, gens[i]);
      if (!assigned[y]) {
        lam[y] = compose(lam[x], images[i]);
        assigned[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return lam;
}

std::vector<LambdaFamily> brace_like_lambdas(BinOpTable const& add,
                                             std::vector<SelfMap> const& end,
                                             FiniteGroup const& g) {
  int n = add.size();
  // lambda_1 candidates: idempotent endomorphisms absorbed by +
  std::set<std::vector<Element>> unit_candidates;
  for (auto const& h : end) {
    if (compose(h, h) != h) continue;
    bool absorbed = true;
    for (Element a = 0; a < n && absorbed; ++a)
      for (Element b = 0; b < n && absorbed; ++b) absorbed = add(a, b) == add(a, h(b));
    if (absorbed) unit_candidates.insert(h.image);
  }
  if (unit_candidates.empty()) return {};

  auto gens = generating_set(g);
  std::vector<int> orders;
  orders.reserve(gens.size());
  for (Element gen : gens) orders.push_back(element_order(g, gen));

  // per-generator candidates whose derived lambda_1 is admissible
  std::vector<std::vector<SelfMap>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (auto const& v : end)
      if (unit_candidates.count(map_power(v, orders[i]).image)) cand[i].push_back(v);

  std::vector<LambdaFamily> found;
  std::vector<SelfMap> images(gens.size());
  auto try_assignment = [&] {
    auto lam = extend_lambda(g, gens, images);
    if (!unit_candidates.count(lam[g.identity].image)) return;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (lam[g.op(a, b)] != compose(lam[a], lam[b])) return;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.op(a, add(b, c)) != add(g.op(a, b), lam[a](c))) return;
    found.emplace_back(lam);
  };
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == gens.size()) {
      try_assignment();
      return;
    }
    for (auto const& v : cand[i]) {
      if (i > 0 && map_power(v, orders[i]) != map_power(images[0], orders[0]))
        continue;  // all generators must derive the same lambda_1
      images[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

EnumSummary enum_brace_like(EnumSpec const& spec,
                            std::function<EnumControl(BraceLikeSemiTruss const&)> const& yield) {
  check_order(spec, max_enum_order(StructureKind::brace_like, spec));
  RunState rs(spec);
  auto perms = all_permutations(spec.order);

  EnumSpec inner = spec;
  inner.modulo_iso = false;
  inner.limits = {};
  inner.max_order_override = spec.order;
  auto groups = collect_groups(inner);

  bool go = true;
  enum_semigroups(inner, [&](BinOpTable const& add) {
    auto end = endomorphisms(add);
    for (auto const& g : groups) {
      for (auto const& lambda : brace_like_lambdas(add, end, g)) {
        BraceLikeSemiTruss t{add, g.op, lambda};
        if (!verify_brace_like(t).passed()) continue;  // soundness re-check on yield
        if (spec.modulo_iso && !is_canonical(perms, [&](std::vector<Element> const& p) {
              auto key = relabel(add, p).cells();
              auto mk = relabel(g.op, p).cells();
              key.insert(key.end(), mk.begin(), mk.end());
              for (auto const& row : relabel(lambda, p).rows())
                key.insert(key.end(), row.begin(), row.end());
              return key;
            }))
          continue;
        if (!rs.emit(t, yield)) {
          go = false;
          return EnumControl::stop;
        }
      }
      if (!rs.time_check()) {
        go = false;
        return EnumControl::stop;
      }
    }
    return go ? EnumControl::next : EnumControl::stop;
  });
  return rs.summary;
}

EnumSummary enum_semi_braces(EnumSpec const& spec,
                             std::function<EnumControl(LeftSemiBrace const&)> const& yield) {
  check_order(spec, max_enum_order(StructureKind::semi_brace, spec));
  RunState rs(spec);
  auto perms = all_permutations(spec.order);

  EnumSpec inner = spec;
  inner.modulo_iso = false;
  inner.limits = {};
  inner.max_order_override = spec.order;
  auto groups = collect_groups(inner);

  bool go = true;
  enum_semigroups(inner, [&](BinOpTable const& add) {
    for (auto const& g : groups) {
      LeftSemiBrace s{add, g.op};
      if (!verify_left_semi_brace(s).passed()) continue;
      if (spec.modulo_iso && !is_canonical(perms, [&](std::vector<Element> const& p) {
            auto key = relabel(add, p).cells();
            auto mk = relabel(g.op, p).cells();
            key.insert(key.end(), mk.begin(), mk.end());
            return key;
          }))
        continue;
      if (!rs.emit(s, yield)) {
        go = false;
        return EnumControl::stop;
      }
    }
    return go && rs.time_check() ? EnumControl::next : EnumControl::stop;
  });
  return rs.summary;
}

EnumSummary enum_almost(EnumSpec const& spec,
                        std::function<EnumControl(AlmostLeftSemiBrace const&)> const& yield) {
  check_order(spec, max_enum_order(StructureKind::almost, spec));
  RunState rs(spec);
  int n = spec.order;
  auto perms = all_permutations(n);

  EnumSpec inner = spec;
  inner.modulo_iso = false;
  inner.limits = {};
  inner.max_order_override = spec.order;
  auto groups = collect_groups(inner);

  bool go = true;
  enum_semigroups(inner, [&](BinOpTable const& add) {
    for (auto const& g : groups) {
      // iota is forced to a -> inv(a) o t; candidates indexed by t = iota(1),
      // then both defining identities are verified in full.
      std::vector<SelfMap> cands;
      for (Element t = 0; t < n; ++t) {
        std::vector<Element> img(n);
        for (Element x = 0; x < n; ++x) img[x] = g.op(g.inverse[x], t);
        cands.emplace_back(std::move(img));
      }
      std::sort(cands.begin(), cands.end());
      for (auto const& iota : cands) {
        AlmostLeftSemiBrace a{add, g.op, iota};
        if (!verify_almost(a).passed()) continue;
        if (spec.modulo_iso && !is_canonical(perms, [&](std::vector<Element> const& p) {
              auto key = relabel(add, p).cells();
              auto mk = relabel(g.op, p).cells();
              key.insert(key.end(), mk.begin(), mk.end());
              auto ik = relabel(iota, p).image;
              key.insert(key.end(), ik.begin(), ik.end());
              return key;
            }))
          continue;
        if (!rs.emit(a, yield)) {
          go = false;
          return EnumControl::stop;
        }
      }
      if (!rs.time_check()) {
        go = false;
        return EnumControl::stop;
      }
    }
    return go ? EnumControl::next : EnumControl::stop;
  });
  return rs.summary;
}

std::vector<BinOpTable> collect_semigroups(EnumSpec spec) {
  std::vector<BinOpTable> out;
  enum_semigroups(spec, [&](BinOpTable const& t) {
    out.push_back(t);
    return EnumControl::next;
  });
  return out;
}

std::vector<FiniteGroup> collect_groups(EnumSpec spec) {
  std::vector<FiniteGroup> out;
  enum_groups(spec, [&](FiniteGroup const& g) {
    out.push_back(g);
    return EnumControl::next;
  });
  return out;
}

std::vector<BraceLikeSemiTruss> collect_brace_like(EnumSpec spec) {
  std::vector<BraceLikeSemiTruss> out;
  enum_brace_like(spec, [&](BraceLikeSemiTruss const& t) {
    out.push_back(t);
    return EnumControl::next;
  });
  return out;
}

std::vector<LeftSemiBrace> collect_semi_braces(EnumSpec spec) {
  std::vector<LeftSemiBrace> out;
  enum_semi_braces(spec, [&](LeftSemiBrace const& s) {
    out.push_back(s);
    return EnumControl::next;
  });
  return out;
}

std::vector<AlmostLeftSemiBrace> collect_almost(EnumSpec spec) {
  std::vector<AlmostLeftSemiBrace> out;
  enum_almost(spec, [&](AlmostLeftSemiBrace const& a) {
    out.push_back(a);
    return EnumControl::next;
  });
  return out;
}

}  // namespace trusslab
