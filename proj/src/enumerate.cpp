#include "gis/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gis {

std::vector<int> canonical_table(const FiniteSemigroup& s) {
  const int n = s.order;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best, relab(static_cast<size_t>(n) * n);
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relab[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[s.at(a, b)];
    if (best.empty() || relab < best) best = relab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int max_enumeration_order(bool bands_only) {
  if (const char* env = std::getenv("GIS_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return bands_only ? 6 : 5;
}

namespace {

// isomorphism-invariant fingerprint used to bucket candidates at order >= 5
uint64_t invariant_hash(const FiniteSemigroup& s) {
  const int n = s.order;
  std::vector<std::vector<int>> profiles;
  for (int a = 0; a < n; ++a) {
    std::vector<int> p;
    p.push_back(s.at(a, a) == a ? 1 : 0);
    int left_fix = 0, right_fix = 0;
    for (int b = 0; b < n; ++b) {
      if (s.at(a, b) == a) ++right_fix;
      if (s.at(b, a) == a) ++left_fix;
    }
    p.push_back(left_fix);
    p.push_back(right_fix);
    std::vector<int> row, col;
    for (int b = 0; b < n; ++b) {
      row.push_back(s.at(a, b));
      col.push_back(s.at(b, a));
    }
    std::sort(row.begin(), row.end());
    p.push_back(static_cast<int>(
        std::unique(row.begin(), row.end()) - row.begin()));
    std::sort(col.begin(), col.end());
    p.push_back(static_cast<int>(
        std::unique(col.begin(), col.end()) - col.begin()));
    p.push_back(static_cast<int>(inverses_of(s, a).size()));
    // index and period of the cyclic subsemigroup generated by a
    std::vector<int> seen;
    int x = a;
    while (std::find(seen.begin(), seen.end(), x) == seen.end()) {
      seen.push_back(x);
      x = s.at(x, a);
    }
    int idx = static_cast<int>(
        std::find(seen.begin(), seen.end(), x) - seen.begin());
    p.push_back(idx);
    p.push_back(static_cast<int>(seen.size()) - idx);
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](int v) {
    h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(n);
  for (const auto& p : profiles)
    for (int v : p) mix(v);
  // frequency multiset of table values
  std::vector<int> freq(n, 0);
  for (int v : s.table) ++freq[v];
  std::sort(freq.begin(), freq.end());
  for (int v : freq) mix(v);
  return h;
}

// collects complete tables up to isomorphism
class Collector {
 public:
  explicit Collector(int order) : n_(order) {}

  void offer(const std::vector<int>& table) {
    FiniteSemigroup s;
    s.order = n_;
    s.table = table;
    if (n_ <= 4) {
      auto canon = canonical_table(s);
      if (seen_canon_.insert(std::move(canon)).second)
        out_.push_back(std::move(s));
      return;
    }
    uint64_t h = invariant_hash(s);
    auto& bucket = buckets_[h];
    for (int idx : bucket)
      if (find_isomorphism(out_[static_cast<size_t>(idx)], s)) return;
    bucket.push_back(static_cast<int>(out_.size()));
    out_.push_back(std::move(s));
  }

  std::vector<FiniteSemigroup> take() { return std::move(out_); }

 private:
  int n_;
  std::set<std::vector<int>> seen_canon_;
  std::unordered_map<uint64_t, std::vector<int>> buckets_;
  std::vector<FiniteSemigroup> out_;
};

bool partial_associative(const std::vector<int>& t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = t[x * n + y];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        int yz = t[y * n + z];
        if (yz < 0) continue;
        int l = t[xy * n + z], r = t[x * n + yz];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

void backtrack(std::vector<int>& t, int n, size_t cell, Collector& col) {
  while (cell < t.size() && t[cell] >= 0) ++cell;
  if (cell == t.size()) {
    col.offer(t);
    return;
  }
  for (int v = 0; v < n; ++v) {
    t[cell] = v;
    if (partial_associative(t, n)) backtrack(t, n, cell + 1, col);
  }
  t[cell] = -1;
}

}  // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(int order, bool bands_only) {
  if (order < 1 || order > max_enumeration_order(bands_only))
    throw Error("OrderBoundExceeded",
                "order " + std::to_string(order) + " is over the cap (set "
                "GIS_MAX_ORDER to raise it)");
  static std::map<std::pair<int, bool>, std::vector<FiniteSemigroup>> cache;
  auto hit = cache.find({order, bands_only});
  if (hit != cache.end()) return hit->second;
  Collector col(order);
  std::vector<int> t(static_cast<size_t>(order) * order, -1);
  if (bands_only)
    for (int x = 0; x < order; ++x) t[x * order + x] = x;
  backtrack(t, order, 0, col);
  auto out = col.take();
  cache[{order, bands_only}] = out;
  return out;
}

std::vector<FiniteSemigroup> naive_enumerate(int order) {
  if (order < 1 || order > 3)
    throw Error("OrderBoundExceeded", "the naive oracle stops at order 3");
  const int n = order;
  const size_t cells = static_cast<size_t>(n) * n;
  std::vector<FiniteSemigroup> out;
  std::set<std::vector<int>> seen_canon;
  std::vector<int> t(cells, 0);
  for (;;) {
    bool assoc = true;
    for (int x = 0; x < n && assoc; ++x)
      for (int y = 0; y < n && assoc; ++y)
        for (int z = 0; z < n && assoc; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) assoc = false;
    if (assoc) {
      FiniteSemigroup s;
      s.order = n;
      s.table = t;
      auto canon = canonical_table(s);
      if (seen_canon.insert(std::move(canon)).second)
        out.push_back(std::move(s));
    }
    // next table in lexicographic order
    size_t i = cells;
    while (i > 0 && t[i - 1] == n - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

std::vector<FiniteSemigroup> enumerate_filtered(
    int order, const std::function<bool(const FiniteSemigroup&)>& keep,
    bool bands_only) {
  std::vector<FiniteSemigroup> out;
  for (const auto& s : enumerate_semigroups(order, bands_only))
    if (keep(s)) out.push_back(s);
  return out;
}

}  // namespace gis
