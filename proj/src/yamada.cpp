#include "gis/yamada.hpp"

#include <algorithm>
#include <set>

#include "gis/classify.hpp"

namespace gis {

int RightYamada::index_of(int t, int x) const {
  auto it = std::lower_bound(elems.begin(), elems.end(),
                             std::make_pair(t, x));
  if (it == elems.end() || *it != std::make_pair(t, x))
    throw Error("BaseMismatch", "pair outside the Yamada carrier");
  return static_cast<int>(it - elems.begin());
}

RightYamada build_right_yamada(const InverseSemigroup& t, const Presheaf& x) {
  if (!(x.base == t.e_semilattice()))
    throw Error("BaseMismatch", "presheaf base must equal E(T)");
  if (!x.global_support())
    throw Error("NoGlobalSupport",
                "the Yamada construction needs every fiber nonempty");
  RightYamada y;
  y.actor = t;
  y.sheaf = x;
  for (int a = 0; a < t.s.order; ++a)
    for (int v = 0; v < x.carrier_size; ++v)
      if (t.d(a) == t.idem[x.fiber_of[v]]) y.elems.emplace_back(a, v);
  const int m = static_cast<int>(y.elems.size());
  y.sg.order = m;
  y.sg.table.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [s, xv] = y.elems[i];
      auto [u, yv] = y.elems[j];
      int su = t.s.at(s, u);
      int restricted = x.restrict_to(yv, t.idem_index[t.d(su)]);
      y.sg.at(i, j) = y.index_of(su, restricted);
    }
  y.sg = validate(y.sg.rows());
  auto cl = classify(y.sg);
  if (!cl.right_generalized_inverse)
    throw Error("InternalTheoremViolation",
                "the Yamada product is not right generalized inverse");
  // idempotents are exactly the pairs (p(x), x)
  for (int i = 0; i < m; ++i) {
    auto [a, v] = y.elems[i];
    bool should = a == t.idem[x.fiber_of[v]];
    if (should != is_idempotent(y.sg, i))
      throw Error("InternalTheoremViolation",
                  "idempotents are not the pairs (p(x), x)");
  }
  // gamma classes are the fibers of the first projection; quotient is T
  Congruence g = gamma(y.sg);
  y.quotient_iso.assign(g.partition.num_classes, -1);
  for (int i = 0; i < m; ++i) {
    int cls = g.partition.class_of[i];
    if (y.quotient_iso[cls] < 0) y.quotient_iso[cls] = y.elems[i].first;
    else if (y.quotient_iso[cls] != y.elems[i].first)
      throw Error("InternalTheoremViolation",
                  "gamma does not match the first projection");
  }
  auto [q, proj] = quotient(y.sg, g);
  std::vector<int> iso = y.quotient_iso;
  if (q.order != t.s.order || !is_homomorphism(q, t.s, iso))
    throw Error("InternalTheoremViolation", "S/gamma is not isomorphic to T");
  std::set<int> image(iso.begin(), iso.end());
  if (static_cast<int>(image.size()) != t.s.order)
    throw Error("InternalTheoremViolation", "S/gamma misses elements of T");
  return y;
}

EtaleStructure etale_structure(const FiniteSemigroup& s) {
  if (!classify(s).right_generalized_inverse)
    throw Error("NotRightGeneralizedInverse",
                "the free etale structure needs a right generalized inverse "
                "semigroup");
  EtaleStructure e;
  Congruence g = gamma(s);
  auto [q, proj] = quotient(s, g);
  e.gamma_quotient = q;
  e.gamma_class_of = proj;
  e.actor = make_inverse(q);
  // well-definedness of [a].s = as
  auto cls = g.partition.classes();
  for (auto& c : cls)
    for (size_t i = 1; i < c.size(); ++i)
      for (int x = 0; x < s.order; ++x)
        if (s.at(c[0], x) != s.at(c[i], x))
          throw Error("InternalTheoremViolation",
                      "[a].s is not well-defined on gamma classes");
  // support p(s) = [ss'], independent of the inverse chosen
  std::vector<int> support(s.order, -1);
  for (int x = 0; x < s.order; ++x) {
    for (int xp : inverses_of(s, x)) {
      int v = proj[s.at(x, xp)];
      if (support[x] < 0) support[x] = v;
      else if (support[x] != v)
        throw Error("InternalTheoremViolation",
                    "p(s) depends on the inverse chosen");
    }
  }
  std::vector<std::vector<int>> act(q.order, std::vector<int>(s.order));
  for (int a = 0; a < q.order; ++a) {
    int rep = -1;
    for (int x = 0; x < s.order; ++x)
      if (proj[x] == a) { rep = x; break; }
    for (int x = 0; x < s.order; ++x) act[a][x] = s.at(rep, x);
  }
  e.action = validate_etale(e.actor, std::move(support), std::move(act));
  if (!e.action.global_support())
    throw Error("InternalTheoremViolation",
                "the free etale structure lacks global support");
  return e;
}

bool l_cover_check(const FiniteSemigroup& s, const FiniteSemigroup& t,
                   const std::vector<int>& theta) {
  if (!is_homomorphism(s, t, theta))
    throw Error("NotHomomorphism", "theta is not a homomorphism");
  std::set<int> image(theta.begin(), theta.end());
  if (static_cast<int>(image.size()) != t.order)
    throw Error("NotSurjective", "theta is not surjective");
  GreenRelations gs = green(s);
  GreenRelations gt = green(t);
  auto s_classes = gs.L.classes();
  auto t_classes = gt.L.classes();
  for (int e : idempotents(s)) {
    const auto& le = s_classes[gs.L.class_of[e]];
    const auto& lte = t_classes[gt.L.class_of[theta[e]]];
    std::set<int> mapped;
    for (int x : le) {
      if (gt.L.class_of[theta[x]] != gt.L.class_of[theta[e]]) return false;
      mapped.insert(theta[x]);
    }
    if (mapped.size() != le.size() || mapped.size() != lte.size())
      return false;
  }
  return true;
}

KappaDecomposition kappa_decompose(const FiniteSemigroup& s) {
  if (!classify(s).right_generalized_inverse)
    throw Error("NotRightGeneralizedInverse",
                "kappa needs a right generalized inverse semigroup");
  KappaDecomposition k;
  EtaleStructure e = etale_structure(s);
  k.t = e.actor;
  const std::vector<int>& proj = e.gamma_class_of;
  // presheaf of idempotents over E(S/gamma): fiber of [e] collects the
  // idempotents of S in that gamma class, restriction is left multiplication
  auto es = idempotents(s);
  k.sheaf_carrier = es;
  std::vector<int> pos(s.order, -1);
  for (size_t i = 0; i < es.size(); ++i)
    pos[static_cast<size_t>(es[i])] = static_cast<int>(i);
  MeetSemilattice base = k.t.e_semilattice();
  std::vector<int> fiber_of(es.size());
  for (size_t i = 0; i < es.size(); ++i) {
    int cls = proj[es[i]];
    int idx = k.t.idem_index[cls];
    if (idx < 0)
      throw Error("InternalTheoremViolation",
                  "gamma class of an idempotent is not idempotent");
    fiber_of[i] = idx;
  }
  std::map<std::pair<int, int>, std::vector<int>> given;
  for (int a = 0; a < base.order; ++a)
    for (int b = 0; b < base.order; ++b) {
      if (a == b || !base.leq(b, a)) continue;
      std::vector<int> img(es.size(), -1);
      for (size_t i = 0; i < es.size(); ++i) {
        if (fiber_of[i] != a) continue;
        // multiply by any idempotent in the target gamma class
        int result = -1;
        for (int f : es) {
          if (k.t.idem_index[proj[f]] != b) continue;
          int fe = s.at(f, es[i]);
          if (result < 0) result = fe;
          else if (result != fe)
            throw Error("InternalTheoremViolation",
                        "restriction depends on the representative");
        }
        img[i] = pos[result];
      }
      given[{a, b}] = img;
    }
  k.sheaf = validate_presheaf(base, fiber_of, given);
  k.yam = build_right_yamada(k.t, k.sheaf);
  // kappa(s) = ([s], s's), independent of the inverse s' chosen
  k.kappa.assign(s.order, -1);
  for (int x = 0; x < s.order; ++x) {
    for (int xp : inverses_of(s, x)) {
      int spx = s.at(xp, x);
      int idx = k.yam.index_of(proj[x], pos[spx]);
      if (k.kappa[x] < 0) k.kappa[x] = idx;
      else if (k.kappa[x] != idx)
        throw Error("InternalTheoremViolation",
                    "kappa depends on the inverse chosen");
    }
  }
  std::set<int> image(k.kappa.begin(), k.kappa.end());
  if (static_cast<int>(image.size()) != s.order ||
      k.yam.sg.order != s.order ||
      !is_homomorphism(s, k.yam.sg, k.kappa))
    throw Error("InternalTheoremViolation", "kappa is not an isomorphism");
  return k;
}

FreeRoundtrip free_roundtrip_check(const InverseSemigroup& t,
                                   const Presheaf& x) {
  FreeRoundtrip out;
  RightYamada y = build_right_yamada(t, x);
  EtaleStructure e = etale_structure(y.sg);
  FreeEtale f = free_etale(t, x);
  // the two carriers are literally the same pair set
  if (f.elems != y.elems) {
    out.counterexample = "carriers differ";
    return out;
  }
  // actor identification S/gamma -> T from the Yamada build
  const std::vector<int>& actor_iso = y.quotient_iso;
  for (int i = 0; i < e.action.carrier_size; ++i)
    if (actor_iso[e.action.support[i]] != f.action.support[i]) {
      out.counterexample = "supports differ at element " + std::to_string(i);
      return out;
    }
  for (int a = 0; a < e.actor.s.order; ++a)
    for (int i = 0; i < e.action.carrier_size; ++i)
      if (e.action.apply(a, i) != f.action.apply(actor_iso[a], i)) {
        out.counterexample = "actions differ";
        return out;
      }
  out.ok = true;
  return out;
}

}  // namespace gis
