#include "gis/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gis/classify.hpp"

namespace gis {

bool is_congruence(const FiniteSemigroup& s, const Partition& p) {
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b) {
      if (!p.same(a, b)) continue;
      for (int c = 0; c < s.order; ++c) {
        if (!p.same(s.at(c, a), s.at(c, b))) return false;
        if (!p.same(s.at(a, c), s.at(b, c))) return false;
      }
    }
  return true;
}

Congruence make_congruence(const FiniteSemigroup& s, Partition p) {
  if (static_cast<int>(p.class_of.size()) != s.order)
    throw Error("NotACongruence", "partition carrier does not match order");
  if (!is_congruence(s, p))
    throw Error("NotACongruence", "partition is not multiplication-compatible");
  return Congruence{std::move(p)};
}

Partition congruence_closure(const FiniteSemigroup& s, const Partition& seed) {
  std::vector<int> parent(s.order);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  };
  for (int a = 0; a < s.order; ++a)
    for (int b = a + 1; b < s.order; ++b)
      if (seed.same(a, b)) unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < s.order; ++a)
      for (int b = 0; b < s.order; ++b) {
        if (find(a) != find(b)) continue;
        for (int c = 0; c < s.order; ++c) {
          changed |= unite(s.at(c, a), s.at(c, b));
          changed |= unite(s.at(a, c), s.at(b, c));
        }
      }
  }
  std::vector<int> raw(s.order);
  for (int i = 0; i < s.order; ++i) raw[i] = find(i);
  return Partition::from_class_of(raw);
}

Partition principal_congruence(const FiniteSemigroup& s, int a, int b) {
  Partition seed = Partition::equality(s.order);
  std::vector<int> raw = seed.class_of;
  raw[b] = raw[a];
  return congruence_closure(s, Partition::from_class_of(raw));
}

Congruence gamma(const FiniteSemigroup& s) {
  if (!classify(s).orthodox)
    throw Error("NotOrthodox", "gamma needs an orthodox semigroup");
  std::vector<std::vector<int>> v(s.order);
  for (int x = 0; x < s.order; ++x) v[x] = inverses_of(s, x);
  std::vector<int> raw(s.order);
  for (int x = 0; x < s.order; ++x) {
    raw[x] = x;
    for (int y = 0; y < x; ++y)
      if (v[x] == v[y]) {
        raw[x] = raw[y];
        break;
      }
  }
  Partition p = Partition::from_class_of(raw);
  if (!is_congruence(s, p))
    throw Error("NotACongruence",
                "gamma failed to be a congruence on an orthodox semigroup");
  Congruence c{p};
  auto [q, proj] = quotient(s, c);
  if (!classify(q).inverse)
    throw Error("NotACongruence", "gamma quotient is not inverse");
  return c;
}

std::pair<FiniteSemigroup, std::vector<int>> quotient(const FiniteSemigroup& s,
                                                      const Congruence& c) {
  if (!is_congruence(s, c.partition))
    throw Error("NotACongruence", "quotient by a non-congruence");
  const Partition& p = c.partition;
  FiniteSemigroup q;
  q.order = p.num_classes;
  q.table.assign(static_cast<size_t>(q.order) * q.order, -1);
  auto cls = p.classes();
  for (int i = 0; i < q.order; ++i)
    for (int j = 0; j < q.order; ++j)
      q.at(i, j) = p.class_of[s.at(cls[i][0], cls[j][0])];
  return {q, p.class_of};
}

std::pair<Congruence, Congruence> lambda_rho(const FiniteSemigroup& s) {
  if (!classify(s).generalized_inverse)
    throw Error("NotGeneralizedInverse",
                "lambda/rho need a generalized inverse semigroup");
  Congruence g = gamma(s);
  GreenRelations gr = green(s);
  Partition lam = Partition::meet(g.partition, gr.L);
  Partition rho = Partition::meet(g.partition, gr.R);
  Congruence cl = make_congruence(s, lam);
  Congruence cr = make_congruence(s, rho);
  auto [ql, pl] = quotient(s, cl);
  auto [qr, pr] = quotient(s, cr);
  if (!classify(ql).right_generalized_inverse)
    throw Error("InternalTheoremViolation",
                "S/lambda is not right generalized inverse");
  if (!classify(qr).left_generalized_inverse)
    throw Error("InternalTheoremViolation",
                "S/rho is not left generalized inverse");
  if (!Partition::meet(lam, rho).is_equality())
    throw Error("InternalTheoremViolation", "lambda meet rho is not equality");
  return {cl, cr};
}

std::vector<Congruence> all_congruences(const FiniteSemigroup& s,
                                        int max_order) {
  if (s.order > max_order)
    throw Error("OrderBoundExceeded",
                "congruence enumeration capped at order " +
                    std::to_string(max_order));
  std::set<std::vector<int>> seen;
  std::vector<Partition> work;
  auto push = [&](const Partition& p) {
    if (seen.insert(p.class_of).second) work.push_back(p);
  };
  push(Partition::equality(s.order));
  for (int a = 0; a < s.order; ++a)
    for (int b = a + 1; b < s.order; ++b)
      push(principal_congruence(s, a, b));
  // close under joins
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Partition joined =
          congruence_closure(s, Partition::join(work[i], work[j]));
      push(joined);
    }
  std::vector<Congruence> out;
  out.reserve(work.size());
  for (auto& p : work) out.push_back(make_congruence(s, p));
  return out;
}

bool is_minimum_with(const FiniteSemigroup& s, const Congruence& c,
                     const std::function<bool(const FiniteSemigroup&)>& pred,
                     int max_order) {
  for (const Congruence& sigma : all_congruences(s, max_order)) {
    auto [q, proj] = quotient(s, sigma);
    if (!pred(q)) continue;
    if (!c.partition.refines(sigma.partition)) return false;
  }
  return true;
}

bool idempotent_pure(const FiniteSemigroup& s, const Congruence& c) {
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      if (c.partition.same(a, b) && is_idempotent(s, a) &&
          !is_idempotent(s, b))
        return false;
  return true;
}

SubdirectEmbedding subdirect_embed(const FiniteSemigroup& s) {
  auto [lam, rho] = lambda_rho(s);
  SubdirectEmbedding e;
  e.lambda = lam;
  e.rho = rho;
  auto [ql, pl] = quotient(s, lam);
  auto [qr, pr] = quotient(s, rho);
  e.right_quotient = ql;
  e.left_quotient = qr;
  e.product = direct_product(e.left_quotient, e.right_quotient);
  e.map.resize(s.order);
  for (int x = 0; x < s.order; ++x)
    e.map[x] = pr[x] * e.right_quotient.order + pl[x];
  // injectivity + homomorphism + subdirectness
  std::set<int> image(e.map.begin(), e.map.end());
  if (static_cast<int>(image.size()) != s.order)
    throw Error("InternalTheoremViolation", "subdirect embedding not injective");
  if (!is_homomorphism(s, e.product, e.map))
    throw Error("InternalTheoremViolation",
                "subdirect embedding not a homomorphism");
  std::set<int> proj_l, proj_r;
  for (int v : e.map) {
    proj_l.insert(v / e.right_quotient.order);
    proj_r.insert(v % e.right_quotient.order);
  }
  if (static_cast<int>(proj_l.size()) != e.left_quotient.order ||
      static_cast<int>(proj_r.size()) != e.right_quotient.order)
    throw Error("InternalTheoremViolation", "projections not surjective");
  return e;
}

std::string congruence_to_string(const Congruence& c) {
  return c.partition.to_string();
}

Partition parse_class_list(const std::string& text, int carrier_size) {
  std::vector<int> raw(carrier_size, -1);
  int cls = 0;
  auto flush = [&](const std::string& piece) {
    std::istringstream ps(piece);
    int x;
    bool any = false;
    while (ps >> x) {
      if (x < 0 || x >= carrier_size)
        throw Error("ParseError", "class member out of range");
      raw[x] = cls;
      any = true;
    }
    if (any) ++cls;
  };
  std::string piece;
  for (char ch : text) {
    if (ch == '|') {
      flush(piece);
      piece.clear();
    } else {
      piece.push_back(ch);
    }
  }
  flush(piece);
  for (int i = 0; i < carrier_size; ++i)
    if (raw[i] < 0)
      throw Error("ParseError",
                  "element " + std::to_string(i) + " missing from class list");
  return Partition::from_class_of(raw);
}

}  // namespace gis
