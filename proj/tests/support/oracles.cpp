#include "support/oracles.hpp"

namespace trusslab::oracle {

void all_tables(int n, std::function<void(BinOpTable const&)> const& fn) {
  int cells = n * n;
  std::vector<Element> v(cells, 0);
  while (true) {
    BinOpTable t(n);
    for (int i = 0; i < cells; ++i) t.set(i / n, i % n, v[i]);
    fn(t);
    int i = cells - 1;
    while (i >= 0 && v[i] == n - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
}

std::vector<SelfMap> all_selfmaps(int n) {
  std::vector<SelfMap> out;
  std::vector<Element> img(n, 0);
  while (true) {
    out.emplace_back(img);
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::vector<BinOpTable> semigroups(int n) {
  std::vector<BinOpTable> out;
  all_tables(n, [&](BinOpTable const& t) {
    if (is_associative(t)) out.push_back(t);
  });
  return out;
}

std::vector<BinOpTable> groups(int n) {
  std::vector<BinOpTable> out;
  all_tables(n, [&](BinOpTable const& t) {
    if (as_group(t)) out.push_back(t);
  });
  return out;
}

std::vector<BraceLikeSemiTruss> brace_like(int n) {
  std::vector<BraceLikeSemiTruss> out;
  auto maps = all_selfmaps(n);
  std::vector<int> pick(n, 0);
  for (auto const& add : semigroups(n)) {
    for (auto const& mul : groups(n)) {
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<SelfMap> fam;
        fam.reserve(n);
        for (int a = 0; a < n; ++a) fam.push_back(maps[pick[a]]);
        BraceLikeSemiTruss t{add, mul, LambdaFamily{fam}};
        if (verify_brace_like(t).passed()) out.push_back(t);
        int i = n - 1;
        while (i >= 0 && pick[i] == static_cast<int>(maps.size()) - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
    }
  }
  return out;
}

std::vector<AlmostLeftSemiBrace> almost(int n) {
  std::vector<AlmostLeftSemiBrace> out;
  auto maps = all_selfmaps(n);
  for (auto const& add : semigroups(n))
    for (auto const& mul : groups(n))
      for (auto const& iota : maps) {
        AlmostLeftSemiBrace a{add, mul, iota};
        if (verify_almost(a).passed()) out.push_back(a);
      }
  return out;
}

std::vector<LeftSemiBrace> semi_braces(int n) {
  std::vector<LeftSemiBrace> out;
  for (auto const& add : semigroups(n))
    for (auto const& mul : groups(n)) {
      LeftSemiBrace s{add, mul};
      if (verify_left_semi_brace(s).passed()) out.push_back(s);
    }
  return out;
}

bool is_simple_by_ideals(BinOpTable const& op) {
  int n = op.size();
  // subsets as bitmasks; proper and nonempty only
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    bool ideal = true;
    for (Element i = 0; i < n && ideal; ++i) {
      if (!(mask >> i & 1)) continue;
      for (Element x = 0; x < n && ideal; ++x)
        ideal = (mask >> op(x, i) & 1) && (mask >> op(i, x) & 1);
    }
    if (ideal) return false;
  }
  return true;
}

bool ybe_by_composites(SolutionMap const& r) {
  int n = r.size();
  auto idx = [n](Element a, Element b, Element c) { return (a * n + b) * n + c; };
  std::vector<int> r12(n * n * n), r23(n * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        r12[idx(a, b, c)] = idx(r.out1(a, b), r.out2(a, b), c);
        r23[idx(a, b, c)] = idx(a, r.out1(b, c), r.out2(b, c));
      }
  for (int t = 0; t < n * n * n; ++t)
    if (r12[r23[r12[t]]] != r23[r12[r23[t]]]) return false;
  return true;
}

}  // namespace trusslab::oracle
