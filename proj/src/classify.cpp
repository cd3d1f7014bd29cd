#include "gis/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gis {

namespace {

bool identity_over(const FiniteSemigroup& s, const std::vector<int>& es,
                   int arity, auto lhs, auto rhs) {
  // exhaustive evaluation of a band identity over tuples of idempotents
  std::vector<int> tup(arity);
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == arity) return lhs(tup) == rhs(tup);
    for (int e : es) {
      tup[k] = e;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

Classification classify(const FiniteSemigroup& s) {
  Classification c;
  auto es = idempotents(s);
  c.regular = true;
  c.inverse = true;
  for (int x = 0; x < s.order; ++x) {
    auto v = inverses_of(s, x);
    if (v.empty()) c.regular = false;
    if (v.size() != 1) c.inverse = false;
  }
  c.inverse = c.inverse && c.regular;

  bool e_closed = true;
  for (int e : es)
    for (int f : es)
      if (!is_idempotent(s, s.at(e, f))) e_closed = false;
  c.orthodox = c.regular && e_closed;

  c.is_band = static_cast<int>(es.size()) == s.order;

  auto m = [&](int a, int b) { return s.at(a, b); };
  c.normal = identity_over(
      s, es, 4,
      [&](const std::vector<int>& t) {
        return m(m(m(t[0], t[1]), t[2]), t[3]);
      },
      [&](const std::vector<int>& t) {
        return m(m(m(t[0], t[2]), t[1]), t[3]);
      });
  c.right_normal = identity_over(
      s, es, 3,
      [&](const std::vector<int>& t) { return m(m(t[0], t[1]), t[2]); },
      [&](const std::vector<int>& t) { return m(m(t[1], t[0]), t[2]); });
  c.left_normal = identity_over(
      s, es, 3,
      [&](const std::vector<int>& t) { return m(m(t[0], t[1]), t[2]); },
      [&](const std::vector<int>& t) { return m(m(t[0], t[2]), t[1]); });
  c.right_regular = identity_over(
      s, es, 2,
      [&](const std::vector<int>& t) { return m(m(t[0], t[1]), t[0]); },
      [&](const std::vector<int>& t) { return m(t[1], t[0]); });
  c.left_regular = identity_over(
      s, es, 2,
      [&](const std::vector<int>& t) { return m(m(t[0], t[1]), t[0]); },
      [&](const std::vector<int>& t) { return m(t[0], t[1]); });

  c.generalized_inverse = c.orthodox && c.normal;
  c.left_generalized_inverse = c.orthodox && c.left_normal;
  c.right_generalized_inverse = c.orthodox && c.right_normal;
  return c;
}

std::string Classification::describe() const {
  std::ostringstream out;
  std::vector<std::string> parts;
  if (is_band) {
    std::string b = "band";
    std::vector<std::string> q;
    if (left_normal && right_normal) q.push_back("semilattice-like normal");
    else if (right_normal) q.push_back("right normal");
    else if (left_normal) q.push_back("left normal");
    else if (normal) q.push_back("normal");
    if (right_regular) q.push_back("right regular");
    if (left_regular) q.push_back("left regular");
    if (!q.empty()) {
      b += ":";
      for (auto& x : q) b += " " + x + ",";
      b.pop_back();
    }
    parts.push_back(b);
  }
  if (inverse) parts.push_back("inverse");
  else if (orthodox) parts.push_back("orthodox");
  else if (regular) parts.push_back("regular");
  else parts.push_back("not regular");
  if (generalized_inverse) parts.push_back("generalized inverse");
  if (right_generalized_inverse && !inverse)
    parts.push_back("right generalized inverse");
  if (left_generalized_inverse && !inverse)
    parts.push_back("left generalized inverse");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << "; ";
    out << parts[i];
  }
  return out.str();
}

namespace {

// principal ideal membership sets as sorted vectors
std::vector<std::set<int>> left_ideals(const FiniteSemigroup& s) {
  std::vector<std::set<int>> out(s.order);
  for (int a = 0; a < s.order; ++a) {
    out[a].insert(a);  // S^1 a includes a
    for (int x = 0; x < s.order; ++x) out[a].insert(s.at(x, a));
  }
  return out;
}

std::vector<std::set<int>> right_ideals(const FiniteSemigroup& s) {
  std::vector<std::set<int>> out(s.order);
  for (int a = 0; a < s.order; ++a) {
    out[a].insert(a);
    for (int x = 0; x < s.order; ++x) out[a].insert(s.at(a, x));
  }
  return out;
}

std::vector<std::set<int>> two_sided_ideals(const FiniteSemigroup& s) {
  std::vector<std::set<int>> out(s.order);
  for (int a = 0; a < s.order; ++a) {
    out[a].insert(a);
    for (int x = 0; x < s.order; ++x) {
      out[a].insert(s.at(x, a));
      out[a].insert(s.at(a, x));
      for (int y = 0; y < s.order; ++y) out[a].insert(s.at(s.at(x, a), y));
    }
  }
  return out;
}

Partition partition_by_ideal(const std::vector<std::set<int>>& ideals) {
  const int n = static_cast<int>(ideals.size());
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a) {
    raw[a] = a;
    for (int b = 0; b < a; ++b)
      if (ideals[a] == ideals[b]) {
        raw[a] = raw[b];
        break;
      }
  }
  return Partition::from_class_of(raw);
}

}  // namespace

GreenRelations green(const FiniteSemigroup& s) {
  GreenRelations g;
  g.L = partition_by_ideal(left_ideals(s));
  g.R = partition_by_ideal(right_ideals(s));
  g.H = Partition::meet(g.L, g.R);
  g.D = Partition::join(g.L, g.R);
  g.J = partition_by_ideal(two_sided_ideals(s));
  return g;
}

NaturalOrder natural_order(const FiniteSemigroup& s) {
  auto c = classify(s);
  if (!c.regular) throw Error("NotRegular", "natural order needs a regular semigroup");
  auto es = idempotents(s);
  NaturalOrder o;
  o.order = s.order;
  o.table.assign(static_cast<size_t>(s.order) * s.order, 0);
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b) {
      bool left = false, right = false;
      for (int e : es)
        if (s.at(e, b) == a) { left = true; break; }
      for (int f : es)
        if (s.at(b, f) == a) { right = true; break; }
      o.table[static_cast<size_t>(a) * s.order + b] = left && right;
    }
  // partial order sanity
  for (int a = 0; a < s.order; ++a) {
    if (!o.leq(a, a))
      throw Error("InternalTheoremViolation", "natural order not reflexive");
    for (int b = 0; b < s.order; ++b) {
      if (a != b && o.leq(a, b) && o.leq(b, a))
        throw Error("InternalTheoremViolation",
                    "natural order not antisymmetric");
      for (int cc = 0; cc < s.order; ++cc)
        if (o.leq(a, b) && o.leq(b, cc) && !o.leq(a, cc))
          throw Error("InternalTheoremViolation",
                      "natural order not transitive");
    }
  }
  return o;
}

std::pair<FiniteSemigroup, std::vector<int>> local_submonoid(
    const FiniteSemigroup& s, int e) {
  if (!is_idempotent(s, e))
    throw Error("NotIdempotent", std::to_string(e) + " is not idempotent");
  std::vector<int> carrier;
  for (int x = 0; x < s.order; ++x)
    carrier.push_back(s.at(s.at(e, x), e));
  return subsemigroup(s, carrier);
}

namespace {

bool l_unipotent(const FiniteSemigroup& s) {
  auto g = green(s);
  auto cls = g.L.classes();
  for (auto& cl : cls) {
    int count = 0;
    for (int x : cl) count += is_idempotent(s, x);
    if (count != 1) return false;
  }
  return true;
}

bool r_unipotent(const FiniteSemigroup& s) {
  auto g = green(s);
  auto cls = g.R.classes();
  for (auto& cl : cls) {
    int count = 0;
    for (int x : cl) count += is_idempotent(s, x);
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

OrderCompatibility order_compatibility_report(const FiniteSemigroup& s) {
  auto cl = classify(s);
  if (!cl.regular) throw Error("NotRegular", "report needs a regular semigroup");
  auto o = natural_order(s);
  OrderCompatibility rep;
  rep.right_compatible = true;
  rep.left_compatible = true;
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b) {
      if (!o.leq(a, b)) continue;
      for (int c = 0; c < s.order; ++c) {
        if (!o.leq(s.at(a, c), s.at(b, c))) rep.right_compatible = false;
        if (!o.leq(s.at(c, a), s.at(c, b))) rep.left_compatible = false;
      }
    }
  rep.compatible = rep.right_compatible && rep.left_compatible;

  rep.locally_l_unipotent = true;
  rep.locally_r_unipotent = true;
  rep.locally_inverse = true;
  for (int e : idempotents(s)) {
    auto [local, emb] = local_submonoid(s, e);
    if (!l_unipotent(local)) rep.locally_l_unipotent = false;
    if (!r_unipotent(local)) rep.locally_r_unipotent = false;
    if (!classify(local).inverse) rep.locally_inverse = false;
  }

  if (rep.right_compatible != rep.locally_l_unipotent ||
      rep.left_compatible != rep.locally_r_unipotent ||
      rep.compatible != rep.locally_inverse)
    throw Error("InternalTheoremViolation",
                "order-compatibility biconditional failed");
  return rep;
}

}  // namespace gis
