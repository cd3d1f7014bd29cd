#include "gis/etale.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gis/classify.hpp"

namespace gis {

MeetSemilattice InverseSemigroup::e_semilattice() const {
  const int k = static_cast<int>(idem.size());
  std::vector<std::vector<int>> meet(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      meet[i][j] = idem_index[s.at(idem[i], idem[j])];
  return validate_semilattice(meet);
}

InverseSemigroup make_inverse(const FiniteSemigroup& s) {
  InverseSemigroup t;
  t.s = s;
  t.inv.resize(s.order);
  for (int x = 0; x < s.order; ++x) {
    auto v = inverses_of(s, x);
    if (v.size() != 1)
      throw Error("NotInverse", "element " + std::to_string(x) + " has " +
                                    std::to_string(v.size()) + " inverses");
    t.inv[x] = v[0];
  }
  t.idem = idempotents(s);
  t.idem_index.assign(s.order, -1);
  for (size_t i = 0; i < t.idem.size(); ++i)
    t.idem_index[t.idem[i]] = static_cast<int>(i);
  // idempotents must commute; implied by uniqueness of inverses, kept as a
  // sanity check
  for (int e : t.idem)
    for (int f : t.idem)
      if (s.at(e, f) != s.at(f, e))
        throw Error("NotInverse", "idempotents do not commute");
  return t;
}

bool EtaleAction::global_support() const {
  std::vector<char> hit(actor.s.order, 0);
  for (int x = 0; x < carrier_size; ++x) hit[support[x]] = 1;
  for (int e : actor.idem)
    if (!hit[e]) return false;
  return true;
}

EtaleAction validate_etale(InverseSemigroup actor, std::vector<int> support,
                           std::vector<std::vector<int>> act) {
  EtaleAction a;
  a.carrier_size = static_cast<int>(support.size());
  a.actor = std::move(actor);
  a.support = std::move(support);
  a.act = std::move(act);
  const int n = a.actor.s.order;
  if (static_cast<int>(a.act.size()) != n)
    throw Error("NotAnAction", "action table must have one row per actor");
  for (auto& row : a.act)
    if (static_cast<int>(row.size()) != a.carrier_size)
      throw Error("NotAnAction", "action row has wrong carrier size");
  for (int x = 0; x < a.carrier_size; ++x)
    if (a.actor.idem_index[a.support[x]] < 0)
      throw Error("E1Violated",
                  "support of " + std::to_string(x) + " is not idempotent");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < a.carrier_size; ++x)
        if (a.apply(a.actor.s.at(s, t), x) != a.apply(s, a.apply(t, x)))
          throw Error("NotAnAction",
                      "(st).x != s.(t.x) at s=" + std::to_string(s) + " t=" +
                          std::to_string(t) + " x=" + std::to_string(x));
  for (int x = 0; x < a.carrier_size; ++x)
    if (a.apply(a.support[x], x) != x)
      throw Error("E1Violated", "p(x).x != x at x=" + std::to_string(x));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < a.carrier_size; ++x) {
      int lhs = a.support[a.apply(s, x)];
      int rhs = a.actor.s.at(a.actor.s.at(s, a.support[x]), a.actor.inv[s]);
      if (lhs != rhs)
        throw Error("E2Violated", "p(s.x) != s p(x) s^-1 at s=" +
                                      std::to_string(s) + " x=" +
                                      std::to_string(x));
    }
  return a;
}

EtaleAction translation_action(const InverseSemigroup& s) {
  const int n = s.s.order;
  std::vector<int> support(n);
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) support[x] = s.r(x);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) act[a][x] = s.s.at(a, x);
  return validate_etale(s, std::move(support), std::move(act));
}

Presheaf presheaf_of(const EtaleAction& a) {
  MeetSemilattice base = a.actor.e_semilattice();
  std::vector<int> fiber_of(a.carrier_size);
  for (int x = 0; x < a.carrier_size; ++x)
    fiber_of[x] = a.actor.idem_index[a.support[x]];
  std::map<std::pair<int, int>, std::vector<int>> given;
  for (int e = 0; e < base.order; ++e)
    for (int f = 0; f < base.order; ++f) {
      if (e == f || !base.leq(f, e)) continue;
      std::vector<int> img(a.carrier_size, -1);
      for (int x = 0; x < a.carrier_size; ++x)
        if (fiber_of[x] == e) img[x] = a.apply(a.actor.idem[f], x);
      given[{e, f}] = img;
    }
  return validate_presheaf(base, fiber_of, given);
}

int PresheafAction::apply(int s, int x) const {
  int v = partial_act[s][x];
  if (v < 0)
    throw Error("NotAnAction", "partial action applied outside its domain");
  return v;
}

PresheafAction validate_presheaf_action(InverseSemigroup actor, Presheaf sheaf,
                                        std::vector<std::vector<int>> act) {
  PresheafAction pa;
  pa.actor = std::move(actor);
  pa.sheaf = std::move(sheaf);
  pa.partial_act = std::move(act);
  const InverseSemigroup& S = pa.actor;
  const Presheaf& X = pa.sheaf;
  if (!(X.base == S.e_semilattice()))
    throw Error("BaseMismatch", "presheaf base is not E(S)");
  auto p_elem = [&](int x) { return S.idem[X.fiber_of[x]]; };
  const int n = S.s.order;
  if (static_cast<int>(pa.partial_act.size()) != n)
    throw Error("NotAnAction", "action table must have one row per actor");
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(pa.partial_act[s].size()) != X.carrier_size)
      throw Error("NotAnAction", "action row has wrong carrier size");
    for (int x = 0; x < X.carrier_size; ++x) {
      bool in_domain = S.d(s) == p_elem(x);
      if (in_domain != (pa.partial_act[s][x] >= 0))
        throw Error("NotAnAction",
                    "domain of the partial action disagrees with S*X at s=" +
                        std::to_string(s) + " x=" + std::to_string(x));
    }
  }
  // AP1
  for (int e : S.idem)
    for (int x = 0; x < X.carrier_size; ++x)
      if (pa.partial_act[e][x] >= 0 && pa.partial_act[e][x] != x)
        throw Error("AxiomViolation", "AP1 failed: e.x != x");
  // AP2
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < X.carrier_size; ++x)
      if (pa.partial_act[s][x] >= 0 &&
          p_elem(pa.partial_act[s][x]) != S.r(s))
        throw Error("AxiomViolation", "AP2 failed: p(s.x) != r(s)");
  // AP3
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (S.d(s) != S.r(t)) continue;
      int st = S.s.at(s, t);
      for (int x = 0; x < X.carrier_size; ++x) {
        if (pa.partial_act[t][x] < 0) continue;
        int tx = pa.partial_act[t][x];
        bool lhs_def = pa.partial_act[s][tx] >= 0;
        bool rhs_def = pa.partial_act[st][x] >= 0;
        if (lhs_def != rhs_def)
          throw Error("AxiomViolation", "AP3 domain condition failed");
        if (lhs_def && pa.partial_act[s][tx] != pa.partial_act[st][x])
          throw Error("AxiomViolation", "AP3 failed: s.(t.x) != (st).x");
      }
    }
  // AP4
  for (int s = 0; s < n; ++s)
    for (int f : S.idem) {
      if (S.s.at(S.s.at(f, S.d(s)), f) != f) continue;  // need f <= d(s)
      int sf = S.s.at(s, f);
      for (int x = 0; x < X.carrier_size; ++x) {
        if (pa.partial_act[s][x] < 0) continue;
        int sx = pa.partial_act[s][x];
        int lhs = X.restrict_to(sx, S.idem_index[S.r(sf)]);
        int xf = X.restrict_to(x, S.idem_index[f]);
        int rhs = pa.partial_act[sf][xf];
        if (rhs < 0 || lhs != rhs)
          throw Error("AxiomViolation",
                      "AP4 failed: restriction square does not commute");
      }
    }
  return pa;
}

PresheafAction etale_to_presheaf_action(const EtaleAction& a) {
  Presheaf sheaf = presheaf_of(a);
  const int n = a.actor.s.order;
  std::vector<std::vector<int>> act(n,
                                    std::vector<int>(a.carrier_size, -1));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < a.carrier_size; ++x)
      if (a.actor.d(s) == a.support[x]) act[s][x] = a.apply(s, x);
  return validate_presheaf_action(a.actor, std::move(sheaf), std::move(act));
}

EtaleAction presheaf_action_to_etale(const PresheafAction& pa) {
  const InverseSemigroup& S = pa.actor;
  const Presheaf& X = pa.sheaf;
  auto p_elem = [&](int x) { return S.idem[X.fiber_of[x]]; };
  const int n = S.s.order;
  std::vector<int> support(X.carrier_size);
  for (int x = 0; x < X.carrier_size; ++x) support[x] = p_elem(x);
  std::vector<std::vector<int>> act(n, std::vector<int>(X.carrier_size, -1));
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < X.carrier_size; ++x) {
      int px = p_elem(x);
      int spx = S.s.at(s, px);
      int dspx = S.s.at(S.d(s), px);  // d(s p(x)) = d(s) p(x)
      int restricted = X.restrict_to(x, S.idem_index[dspx]);
      act[s][x] = pa.partial_act[spx][restricted];
      if (act[s][x] < 0)
        throw Error("AxiomViolation", "totalization left the domain");
    }
  return validate_etale(S, std::move(support), std::move(act));
}

int FreeEtale::index_of(int s, int a) const {
  auto it = std::lower_bound(elems.begin(), elems.end(),
                             std::make_pair(s, a));
  if (it == elems.end() || *it != std::make_pair(s, a))
    throw Error("NotAnAction", "pair outside the pullback carrier");
  return static_cast<int>(it - elems.begin());
}

FreeEtale free_etale(const InverseSemigroup& s, const Presheaf& a) {
  if (!(a.base == s.e_semilattice()))
    throw Error("BaseMismatch", "presheaf base must equal E(S)");
  FreeEtale f;
  for (int t = 0; t < s.s.order; ++t)
    for (int x = 0; x < a.carrier_size; ++x)
      if (s.d(t) == s.idem[a.fiber_of[x]]) f.elems.emplace_back(t, x);
  const int m = static_cast<int>(f.elems.size());
  std::vector<int> support(m);
  std::vector<std::vector<int>> act(s.s.order, std::vector<int>(m));
  for (int i = 0; i < m; ++i) support[i] = s.r(f.elems[i].first);
  for (int u = 0; u < s.s.order; ++u)
    for (int i = 0; i < m; ++i) {
      auto [t, x] = f.elems[i];
      int ut = s.s.at(u, t);
      int restricted = a.restrict_to(x, s.idem_index[s.d(ut)]);
      act[u][i] = f.index_of(ut, restricted);
    }
  f.action = validate_etale(s, std::move(support), std::move(act));
  return f;
}

bool is_presheaf_morphism_over_e(const InverseSemigroup& s, const Presheaf& a,
                                 const EtaleAction& target,
                                 const std::vector<int>& beta) {
  if (!(a.base == s.e_semilattice())) return false;
  if (static_cast<int>(beta.size()) != a.carrier_size) return false;
  Presheaf tp = presheaf_of(target);
  for (int x = 0; x < a.carrier_size; ++x) {
    int y = beta[x];
    if (y < 0 || y >= tp.carrier_size) return false;
    if (tp.fiber_of[y] != a.fiber_of[x]) return false;
    for (int fidx = 0; fidx < a.base.order; ++fidx) {
      if (!a.base.leq(fidx, a.fiber_of[x])) continue;
      if (beta[a.restrict_to(x, fidx)] != tp.restrict_to(y, fidx))
        return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> all_etale_morphisms(const EtaleAction& from,
                                                  const EtaleAction& to) {
  std::vector<std::vector<int>> out;
  std::vector<int> phi(from.carrier_size, -1);
  const int n = from.actor.s.order;
  std::function<void(int)> rec = [&](int x) {
    if (x == from.carrier_size) {
      out.push_back(phi);
      return;
    }
    for (int y = 0; y < to.carrier_size; ++y) {
      if (to.support[y] != from.support[x]) continue;
      phi[x] = y;
      bool ok = true;
      for (int s = 0; s < n && ok; ++s) {
        for (int z = 0; z <= x && ok; ++z) {
          int sz = from.apply(s, z);
          if (sz <= x && phi[sz] >= 0 &&
              to.apply(s, phi[z]) != phi[sz])
            ok = false;
        }
      }
      if (ok) rec(x + 1);
      phi[x] = -1;
    }
  };
  rec(0);
  // final full filter (products landing beyond the frontier)
  std::vector<std::vector<int>> checked;
  for (auto& m : out) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      for (int x = 0; x < from.carrier_size && ok; ++x)
        if (to.apply(s, m[x]) != m[from.apply(s, x)]) ok = false;
    if (ok) checked.push_back(m);
  }
  return checked;
}

UniversalPropertyResult universal_property_check(const InverseSemigroup& s,
                                                 const Presheaf& a,
                                                 const EtaleAction& target,
                                                 const std::vector<int>& beta,
                                                 int uniqueness_bound) {
  if (!is_presheaf_morphism_over_e(s, a, target, beta))
    throw Error("NotAPresheafMorphism",
                "beta is not a presheaf morphism into the target");
  FreeEtale f = free_etale(s, a);
  UniversalPropertyResult res;
  res.theta.resize(f.elems.size());
  for (size_t i = 0; i < f.elems.size(); ++i) {
    auto [t, x] = f.elems[i];
    res.theta[i] = target.apply(t, beta[x]);
  }
  // theta is an etale morphism
  for (size_t i = 0; i < f.elems.size(); ++i)
    if (target.support[res.theta[i]] != f.action.support[i])
      throw Error("InternalTheoremViolation",
                  "mediating map does not preserve support");
  for (int u = 0; u < s.s.order; ++u)
    for (size_t i = 0; i < f.elems.size(); ++i)
      if (target.apply(u, res.theta[i]) !=
          res.theta[static_cast<size_t>(f.action.apply(u, static_cast<int>(i)))])
        throw Error("InternalTheoremViolation",
                    "mediating map is not equivariant");
  // triangle identity: theta(q(a), a) = beta(a)
  for (int x = 0; x < a.carrier_size; ++x) {
    int unit = f.index_of(s.idem[a.fiber_of[x]], x);
    if (res.theta[static_cast<size_t>(unit)] != beta[x])
      throw Error("InternalTheoremViolation", "triangle identity failed");
  }
  if (static_cast<int>(f.elems.size()) <= uniqueness_bound) {
    res.uniqueness_checked = true;
    int count = 0;
    for (auto& phi : all_etale_morphisms(f.action, target)) {
      bool triangle = true;
      for (int x = 0; x < a.carrier_size && triangle; ++x)
        if (phi[static_cast<size_t>(f.index_of(s.idem[a.fiber_of[x]], x))] !=
            beta[x])
          triangle = false;
      if (triangle) ++count;
    }
    res.unique = count == 1;
  }
  return res;
}

EtaleAction parse_action_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what());
  }
  FiniteSemigroup base;
  if (j.at("semigroup").is_string())
    base = load_semigroup_file(j["semigroup"].get<std::string>());
  else
    base = parse_semigroup_json(j["semigroup"].dump());
  InverseSemigroup inv = make_inverse(base);
  if (j.contains("inverse_of")) {
    auto given = j["inverse_of"].get<std::vector<int>>();
    if (given != inv.inv)
      throw Error("ParseError", "inverse_of table disagrees with the semigroup");
  }
  auto support = j.at("support").get<std::vector<int>>();
  auto act = j.at("act").get<std::vector<std::vector<int>>>();
  return validate_etale(std::move(inv), std::move(support), std::move(act));
}

std::string write_action_json(const EtaleAction& a) {
  nlohmann::json j;
  j["semigroup"] = {{"order", a.actor.s.order},
                    {"table", a.actor.s.rows()}};
  j["inverse_of"] = a.actor.inv;
  j["support"] = a.support;
  j["act"] = a.act;
  return j.dump(2);
}

}  // namespace gis
