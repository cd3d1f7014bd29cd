#include "gis/morita.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gis/classify.hpp"

namespace gis {

SSet make_sset(bool left, FiniteSemigroup actor,
               std::vector<std::vector<int>> act) {
  SSet s;
  s.left = left;
  s.actor = std::move(actor);
  s.act = std::move(act);
  if (static_cast<int>(s.act.size()) != s.actor.order)
    throw Error("NotAnAction", "one action row per actor element required");
  s.carrier_size = s.act.empty() ? 0 : static_cast<int>(s.act[0].size());
  for (auto& row : s.act)
    if (static_cast<int>(row.size()) != s.carrier_size)
      throw Error("NotAnAction", "ragged action table");
  for (int a = 0; a < s.actor.order; ++a)
    for (int b = 0; b < s.actor.order; ++b)
      for (int x = 0; x < s.carrier_size; ++x) {
        // left: (ab).x = a.(b.x); right: x.(ab) = (x.a).b
        int composite = s.apply(s.actor.at(a, b), x);
        int stepwise = s.left ? s.apply(a, s.apply(b, x))
                              : s.apply(b, s.apply(a, x));
        if (composite != stepwise)
          throw Error("NotAnAction", "action law failed");
      }
  return s;
}

int YamadaSemigroup::index_of(int xv, int tv, int yv) const {
  std::array<int, 3> key{xv, tv, yv};
  auto it = std::lower_bound(elems.begin(), elems.end(), key);
  if (it == elems.end() || *it != key)
    throw Error("BaseMismatch", "triple outside the Yamada carrier");
  return static_cast<int>(it - elems.begin());
}

YamadaSemigroup build_yamada(const InverseSemigroup& t, const Presheaf& x,
                             const Presheaf& y) {
  if (!(x.base == t.e_semilattice()) || !(y.base == t.e_semilattice()))
    throw Error("BaseMismatch", "both presheaves must live over E(T)");
  if (!x.global_support() || !y.global_support())
    throw Error("NoGlobalSupport", "both presheaves need global support");
  YamadaSemigroup ys;
  ys.t = t;
  ys.x = x;
  ys.y = y;
  for (int xv = 0; xv < x.carrier_size; ++xv)
    for (int tv = 0; tv < t.s.order; ++tv) {
      if (t.idem[x.fiber_of[xv]] != t.r(tv)) continue;
      for (int yv = 0; yv < y.carrier_size; ++yv)
        if (t.idem[y.fiber_of[yv]] == t.d(tv))
          ys.elems.push_back({xv, tv, yv});
    }
  std::sort(ys.elems.begin(), ys.elems.end());
  const int m = static_cast<int>(ys.elems.size());
  ys.sg.order = m;
  ys.sg.table.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [xv, sv, yv] = ys.elems[static_cast<size_t>(i)];
      auto [uv, tv, vv] = ys.elems[static_cast<size_t>(j)];
      int st = t.s.at(sv, tv);
      int new_x = x.restrict_to(xv, t.idem_index[t.r(st)]);
      int new_v = y.restrict_to(vv, t.idem_index[t.d(st)]);
      ys.sg.at(i, j) = ys.index_of(new_x, st, new_v);
    }
  ys.sg = validate(ys.sg.rows());
  auto cl = classify(ys.sg);
  if (!cl.generalized_inverse)
    throw Error("InternalTheoremViolation",
                "the Yamada product is not generalized inverse");
  // idempotents are the triples with idempotent middle coordinate
  for (int i = 0; i < m; ++i)
    if ((t.idem_index[ys.elems[static_cast<size_t>(i)][1]] >= 0) !=
        is_idempotent(ys.sg, i))
      throw Error("InternalTheoremViolation",
                  "idempotents do not match the middle coordinate");
  // V((x,t,y)) = all (u, t^-1, v) with matching supports
  for (int i = 0; i < m; ++i) {
    auto [xv, tv, yv] = ys.elems[static_cast<size_t>(i)];
    std::set<int> expect;
    for (int j = 0; j < m; ++j) {
      auto [uv, wv, vv] = ys.elems[static_cast<size_t>(j)];
      if (wv == t.inv[tv]) expect.insert(j);
    }
    auto got = inverses_of(ys.sg, i);
    if (std::set<int>(got.begin(), got.end()) != expect)
      throw Error("InternalTheoremViolation",
                  "inverse sets do not match the coordinate description");
  }
  return ys;
}

PairProjections lambda_rho_projections(const YamadaSemigroup& ys) {
  const InverseSemigroup& t = ys.t;
  PairProjections pp;
  for (int tv = 0; tv < t.s.order; ++tv)
    for (int yv = 0; yv < ys.y.carrier_size; ++yv)
      if (t.idem[ys.y.fiber_of[yv]] == t.d(tv))
        pp.r_elems.emplace_back(tv, yv);
  for (int xv = 0; xv < ys.x.carrier_size; ++xv)
    for (int tv = 0; tv < t.s.order; ++tv)
      if (t.idem[ys.x.fiber_of[xv]] == t.r(tv))
        pp.l_elems.emplace_back(xv, tv);
  auto r_index = [&](int tv, int yv) {
    auto it = std::lower_bound(pp.r_elems.begin(), pp.r_elems.end(),
                               std::make_pair(tv, yv));
    return static_cast<int>(it - pp.r_elems.begin());
  };
  auto l_index = [&](int xv, int tv) {
    auto it = std::lower_bound(pp.l_elems.begin(), pp.l_elems.end(),
                               std::make_pair(xv, tv));
    return static_cast<int>(it - pp.l_elems.begin());
  };
  const int nr = static_cast<int>(pp.r_elems.size());
  const int nl = static_cast<int>(pp.l_elems.size());
  pp.s_r.order = nr;
  pp.s_r.table.assign(static_cast<size_t>(nr) * nr, -1);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      auto [sv, yv] = pp.r_elems[static_cast<size_t>(i)];
      auto [tv, vv] = pp.r_elems[static_cast<size_t>(j)];
      int st = t.s.at(sv, tv);
      pp.s_r.at(i, j) =
          r_index(st, ys.y.restrict_to(vv, t.idem_index[t.d(st)]));
    }
  pp.s_r = validate(pp.s_r.rows());
  pp.s_l.order = nl;
  pp.s_l.table.assign(static_cast<size_t>(nl) * nl, -1);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) {
      auto [xv, sv] = pp.l_elems[static_cast<size_t>(i)];
      auto [uv, tv] = pp.l_elems[static_cast<size_t>(j)];
      int st = t.s.at(sv, tv);
      pp.s_l.at(i, j) =
          l_index(ys.x.restrict_to(xv, t.idem_index[t.r(st)]), st);
    }
  pp.s_l = validate(pp.s_l.rows());
  if (!classify(pp.s_r).right_generalized_inverse ||
      !classify(pp.s_l).left_generalized_inverse)
    throw Error("InternalTheoremViolation",
                "pair semigroups have the wrong classification");

  // agree with the abstract quotients
  auto [lam, rho] = lambda_rho(ys.sg);
  auto [ql, lproj] = quotient(ys.sg, lam);
  auto [qr, rproj] = quotient(ys.sg, rho);
  pp.lambda_class_to_pair.assign(ql.order, -1);
  pp.rho_class_to_pair.assign(qr.order, -1);
  for (size_t i = 0; i < ys.elems.size(); ++i) {
    auto [xv, tv, yv] = ys.elems[i];
    int lcls = lproj[static_cast<int>(i)];
    int rcls = rproj[static_cast<int>(i)];
    int rpair = r_index(tv, yv);
    int lpair = l_index(xv, tv);
    if (pp.lambda_class_to_pair[lcls] < 0)
      pp.lambda_class_to_pair[lcls] = rpair;
    else if (pp.lambda_class_to_pair[lcls] != rpair)
      throw Error("InternalTheoremViolation",
                  "lambda classes do not match (t, y) pairs");
    if (pp.rho_class_to_pair[rcls] < 0) pp.rho_class_to_pair[rcls] = lpair;
    else if (pp.rho_class_to_pair[rcls] != lpair)
      throw Error("InternalTheoremViolation",
                  "rho classes do not match (x, t) pairs");
  }
  if (ql.order != nr || !is_homomorphism(ql, pp.s_r, pp.lambda_class_to_pair))
    throw Error("InternalTheoremViolation",
                "S/lambda is not isomorphic to the pair semigroup");
  if (qr.order != nl || !is_homomorphism(qr, pp.s_l, pp.rho_class_to_pair))
    throw Error("InternalTheoremViolation",
                "S/rho is not isomorphic to the pair semigroup");
  return pp;
}

Tensor tensor(const SSet& q, const SSet& p) {
  if (q.left || !p.left)
    throw Error("ActorMismatch", "tensor needs a right set and a left set");
  if (q.actor.table != p.actor.table)
    throw Error("ActorMismatch", "tensor factors must share the actor");
  Tensor t;
  t.q_size = q.carrier_size;
  t.p_size = p.carrier_size;
  const int n = t.q_size * t.p_size;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int qi = 0; qi < t.q_size; ++qi)
    for (int s = 0; s < q.actor.order; ++s)
      for (int pi = 0; pi < t.p_size; ++pi) {
        int a = q.apply(s, qi) * t.p_size + pi;   // (q.s, p)
        int b = qi * t.p_size + p.apply(s, pi);   // (q, s.p)
        parent[find(a)] = find(b);
      }
  t.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (t.class_of[root] < 0) {
      t.class_of[root] = t.num_classes++;
      t.rep.emplace_back(v / t.p_size, v % t.p_size);
    }
    t.class_of[v] = t.class_of[root];
  }
  return t;
}

bool balanced_check(const SSet& q, const SSet& p,
                    const std::vector<std::vector<int>>& f,
                    std::array<int, 3>* witness) {
  for (int qi = 0; qi < q.carrier_size; ++qi)
    for (int s = 0; s < q.actor.order; ++s)
      for (int pi = 0; pi < p.carrier_size; ++pi)
        if (f[q.apply(s, qi)][pi] != f[qi][p.apply(s, pi)]) {
          if (witness) *witness = {qi, s, pi};
          return false;
        }
  return true;
}

FiniteSemigroup morita_product(const SSet& q, const SSet& p,
                               const std::vector<std::vector<int>>& pairing,
                               Tensor* out_tensor) {
  // bilinearity: <s.p, q> = s<p, q> and <p, q.s> = <p, q>s
  const FiniteSemigroup& r = q.actor;
  for (int pi = 0; pi < p.carrier_size; ++pi)
    for (int qi = 0; qi < q.carrier_size; ++qi)
      for (int s = 0; s < r.order; ++s) {
        if (pairing[p.apply(s, pi)][qi] != r.at(s, pairing[pi][qi]))
          throw Error("NotBilinear", "left bilinearity failed");
        if (pairing[pi][q.apply(s, qi)] != r.at(pairing[pi][qi], s))
          throw Error("NotBilinear", "right bilinearity failed");
      }
  Tensor t = tensor(q, p);
  auto product_class = [&](int q1, int p1, int q2, int p2) {
    int scalar = pairing[p1][q2];
    return t.cls(q1, p.apply(scalar, p2));
  };
  FiniteSemigroup m;
  m.order = t.num_classes;
  m.table.assign(static_cast<size_t>(m.order) * m.order, -1);
  // collect class members once
  std::vector<std::vector<std::pair<int, int>>> members(t.num_classes);
  for (int qi = 0; qi < t.q_size; ++qi)
    for (int pi = 0; pi < t.p_size; ++pi)
      members[t.cls(qi, pi)].emplace_back(qi, pi);
  for (int a = 0; a < m.order; ++a)
    for (int b = 0; b < m.order; ++b) {
      int expect = -1;
      for (auto& [q1, p1] : members[a])
        for (auto& [q2, p2] : members[b]) {
          int got = product_class(q1, p1, q2, p2);
          if (expect < 0) expect = got;
          else if (expect != got)
            throw Error("IllDefinedProduct",
                        "product depends on the representatives chosen");
        }
      m.at(a, b) = expect;
    }
  m = validate(m.rows());
  if (out_tensor) *out_tensor = t;
  return m;
}

MoritaContext morita_context(const YamadaSemigroup& ys) {
  MoritaContext ctx;
  ctx.pairs = lambda_rho_projections(ys);
  const InverseSemigroup& t = ys.t;
  const auto& le = ctx.pairs.l_elems;
  const auto& re = ctx.pairs.r_elems;
  auto l_index = [&](int xv, int tv) {
    auto it = std::lower_bound(le.begin(), le.end(), std::make_pair(xv, tv));
    return static_cast<int>(it - le.begin());
  };
  auto r_index = [&](int tv, int yv) {
    auto it = std::lower_bound(re.begin(), re.end(), std::make_pair(tv, yv));
    return static_cast<int>(it - re.begin());
  };
  // S_L as a right T-set: (x,a).s = (x.r(as), as)
  std::vector<std::vector<int>> qact(
      t.s.order, std::vector<int>(le.size()));
  for (int s = 0; s < t.s.order; ++s)
    for (size_t i = 0; i < le.size(); ++i) {
      auto [xv, av] = le[i];
      int as = t.s.at(av, s);
      qact[s][i] =
          l_index(ys.x.restrict_to(xv, t.idem_index[t.r(as)]), as);
    }
  ctx.q = make_sset(false, t.s, std::move(qact));
  // S_R as a left T-set: s.(b,y) = (sb, d(sb).y)
  std::vector<std::vector<int>> pact(
      t.s.order, std::vector<int>(re.size()));
  for (int s = 0; s < t.s.order; ++s)
    for (size_t i = 0; i < re.size(); ++i) {
      auto [bv, yv] = re[i];
      int sb = t.s.at(s, bv);
      pact[s][i] =
          r_index(sb, ys.y.restrict_to(yv, t.idem_index[t.d(sb)]));
    }
  ctx.p = make_sset(true, t.s, std::move(pact));
  // pairing <(a,y), (x,b)> = ab
  ctx.pairing.assign(re.size(), std::vector<int>(le.size()));
  for (size_t i = 0; i < re.size(); ++i)
    for (size_t j = 0; j < le.size(); ++j)
      ctx.pairing[i][j] = t.s.at(re[i].first, le[j].second);
  ctx.product = morita_product(ctx.q, ctx.p, ctx.pairing, &ctx.ten);
  return ctx;
}

std::pair<int, int> normalize(const MoritaContext& ctx,
                              const YamadaSemigroup& ys, int q, int p) {
  const InverseSemigroup& t = ys.t;
  auto [xv, av] = ctx.pairs.l_elems[static_cast<size_t>(q)];
  auto [bv, yv] = ctx.pairs.r_elems[static_cast<size_t>(p)];
  int s = t.s.at(av, bv);
  int nx = ys.x.restrict_to(xv, t.idem_index[t.r(s)]);
  int ny = ys.y.restrict_to(yv, t.idem_index[t.d(s)]);
  auto lb_l = std::lower_bound(ctx.pairs.l_elems.begin(),
                               ctx.pairs.l_elems.end(),
                               std::make_pair(nx, t.r(s)));
  auto lb_r = std::lower_bound(ctx.pairs.r_elems.begin(),
                               ctx.pairs.r_elems.end(),
                               std::make_pair(s, ny));
  int nq = static_cast<int>(lb_l - ctx.pairs.l_elems.begin());
  int np = static_cast<int>(lb_r - ctx.pairs.r_elems.begin());
  if (ctx.ten.cls(nq, np) != ctx.ten.cls(q, p))
    throw Error("InternalTheoremViolation",
                "normalization left the tensor class");
  return {nq, np};
}

ThetaReport theta_iso_check(const YamadaSemigroup& ys) {
  MoritaContext ctx = morita_context(ys);
  const InverseSemigroup& t = ys.t;
  ThetaReport rep;
  rep.tensor_classes = ctx.ten.num_classes;
  rep.theta.resize(ys.elems.size());
  auto l_index = [&](int xv, int tv) {
    auto it = std::lower_bound(ctx.pairs.l_elems.begin(),
                               ctx.pairs.l_elems.end(),
                               std::make_pair(xv, tv));
    return static_cast<int>(it - ctx.pairs.l_elems.begin());
  };
  auto r_index = [&](int tv, int yv) {
    auto it = std::lower_bound(ctx.pairs.r_elems.begin(),
                               ctx.pairs.r_elems.end(),
                               std::make_pair(tv, yv));
    return static_cast<int>(it - ctx.pairs.r_elems.begin());
  };
  for (size_t i = 0; i < ys.elems.size(); ++i) {
    auto [xv, sv, yv] = ys.elems[i];
    rep.theta[i] = ctx.ten.cls(l_index(xv, t.r(sv)), r_index(sv, yv));
  }
  if (!is_homomorphism(ys.sg, ctx.product, rep.theta)) {
    rep.counterexample = "theta is not a homomorphism";
    return rep;
  }
  std::set<int> image(rep.theta.begin(), rep.theta.end());
  if (static_cast<int>(image.size()) != ys.sg.order) {
    rep.counterexample = "theta is not injective";
    return rep;
  }
  if (ctx.ten.num_classes != ys.sg.order) {
    rep.counterexample = "tensor class count differs from the Yamada order";
    return rep;
  }
  rep.iso = true;
  return rep;
}

YamadaForm yamada_form(const FiniteSemigroup& s) {
  if (!classify(s).generalized_inverse)
    throw Error("NotGeneralizedInverse",
                "only generalized inverse semigroups decompose");
  Congruence g = gamma(s);
  auto [q, proj] = quotient(s, g);
  InverseSemigroup t = make_inverse(q);
  auto es = idempotents(s);
  const int ne = static_cast<int>(es.size());
  // L- and R-classes inside the band of idempotents
  auto band_partition = [&](bool left) {
    std::vector<int> raw(ne);
    for (int i = 0; i < ne; ++i) {
      raw[i] = i;
      for (int j = 0; j < i; ++j) {
        int e = es[i], f = es[j];
        bool related = left ? (s.at(e, f) == e && s.at(f, e) == f)
                            : (s.at(e, f) == f && s.at(f, e) == e);
        if (related) {
          raw[i] = raw[j];
          break;
        }
      }
    }
    return Partition::from_class_of(raw);
  };
  Partition l_on_e = band_partition(true);
  Partition r_on_e = band_partition(false);

  MeetSemilattice base = t.e_semilattice();
  auto build_side = [&](const Partition& part, bool left_side) {
    auto cls = part.classes();
    std::vector<int> fiber_of(cls.size());
    for (size_t c = 0; c < cls.size(); ++c) {
      int idx = t.idem_index[proj[es[cls[c][0]]]];
      for (int member : cls[c])
        if (t.idem_index[proj[es[member]]] != idx)
          throw Error("InternalTheoremViolation",
                      "band class meets two gamma classes");
      fiber_of[c] = idx;
    }
    std::map<std::pair<int, int>, std::vector<int>> given;
    for (int a = 0; a < base.order; ++a)
      for (int b = 0; b < base.order; ++b) {
        if (a == b || !base.leq(b, a)) continue;
        std::vector<int> img(cls.size(), -1);
        for (size_t c = 0; c < cls.size(); ++c) {
          if (fiber_of[c] != a) continue;
          int result = -1;
          for (int member : cls[c])
            for (int f : es) {
              if (t.idem_index[proj[f]] != b) continue;
              int prod = left_side ? s.at(es[member], f)
                                   : s.at(f, es[member]);
              int target = part.class_of[
                  static_cast<size_t>(std::distance(
                      es.begin(),
                      std::find(es.begin(), es.end(), prod)))];
              if (result < 0) result = target;
              else if (result != target)
                throw Error("InternalTheoremViolation",
                            "band restriction depends on representatives");
            }
          img[c] = result;
        }
        given[{a, b}] = img;
      }
    return validate_presheaf(base, fiber_of, given);
  };
  // X carries the R-classes (left side, x.f = class of ef);
  // Y carries the L-classes (right side, f.e)
  Presheaf x = build_side(r_on_e, true);
  Presheaf y = build_side(l_on_e, false);
  YamadaForm out{build_yamada(t, x, y), {}};
  // s -> ([ss']_R, [s], [s's]_L), independent of the inverse chosen
  std::vector<int> e_pos(s.order, -1);
  for (int i = 0; i < ne; ++i) e_pos[es[i]] = i;
  out.iso.assign(s.order, -1);
  for (int v = 0; v < s.order; ++v) {
    for (int vp : inverses_of(s, v)) {
      int xe = r_on_e.class_of[e_pos[s.at(v, vp)]];
      int ye = l_on_e.class_of[e_pos[s.at(vp, v)]];
      int idx = out.ys.index_of(xe, proj[v], ye);
      if (out.iso[v] < 0) out.iso[v] = idx;
      else if (out.iso[v] != idx)
        throw Error("InternalTheoremViolation",
                    "decomposition depends on the inverse chosen");
    }
  }
  std::set<int> image(out.iso.begin(), out.iso.end());
  if (out.ys.sg.order != s.order ||
      static_cast<int>(image.size()) != s.order ||
      !is_homomorphism(s, out.ys.sg, out.iso))
    throw Error("InternalTheoremViolation",
                "Yamada coordinates do not reconstruct the semigroup");
  return out;
}

}  // namespace gis
