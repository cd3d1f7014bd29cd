#include "gis/presheaf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gis/classify.hpp"

namespace gis {

FiniteSemigroup MeetSemilattice::as_semigroup() const {
  FiniteSemigroup s;
  s.order = order;
  s.table = meet;
  return s;
}

MeetSemilattice validate_semilattice(
    const std::vector<std::vector<int>>& rows) {
  FiniteSemigroup s = validate(rows);
  for (int e = 0; e < s.order; ++e) {
    if (s.at(e, e) != e)
      throw Error("NotASemilattice", "meet not idempotent at " +
                                         std::to_string(e));
    for (int f = 0; f < s.order; ++f)
      if (s.at(e, f) != s.at(f, e))
        throw Error("NotASemilattice", "meet not commutative at (" +
                                           std::to_string(e) + "," +
                                           std::to_string(f) + ")");
  }
  MeetSemilattice m;
  m.order = s.order;
  m.meet = s.table;
  return m;
}

int Presheaf::restrict_to(int x, int f) const {
  int e = fiber_of[x];
  auto it = rest.find({e, f});
  if (it == rest.end())
    throw Error("MissingRestriction",
                "no restriction from " + std::to_string(e) + " to " +
                    std::to_string(f));
  return it->second[x];
}

std::vector<std::vector<int>> Presheaf::fibers() const {
  std::vector<std::vector<int>> out(base.order);
  for (int x = 0; x < carrier_size; ++x) out[fiber_of[x]].push_back(x);
  return out;
}

bool Presheaf::global_support() const {
  auto fs = fibers();
  return std::all_of(fs.begin(), fs.end(),
                     [](const std::vector<int>& f) { return !f.empty(); });
}

Presheaf validate_presheaf(
    MeetSemilattice base, std::vector<int> fiber_of,
    const std::map<std::pair<int, int>, std::vector<int>>& given) {
  Presheaf p;
  p.base = std::move(base);
  p.carrier_size = static_cast<int>(fiber_of.size());
  p.fiber_of = std::move(fiber_of);
  for (int x = 0; x < p.carrier_size; ++x)
    if (p.fiber_of[x] < 0 || p.fiber_of[x] >= p.base.order)
      throw Error("ParseError", "fiber index out of range");

  auto fs = p.fibers();
  // seed with identities, then the given pairs
  for (int e = 0; e < p.base.order; ++e) {
    std::vector<int> id(p.carrier_size, -1);
    for (int x : fs[e]) id[x] = x;
    p.rest[{e, e}] = id;
  }
  for (auto& [key, img] : given) {
    auto [e, f] = key;
    if (!p.base.leq(f, e))
      throw Error("ParseError", "restriction given for incomparable pair");
    if (static_cast<int>(img.size()) != p.carrier_size)
      throw Error("ParseError", "restriction map has wrong carrier size");
    for (int x = 0; x < p.carrier_size; ++x) {
      if (p.fiber_of[x] == e) {
        if (img[x] < 0 || img[x] >= p.carrier_size ||
            p.fiber_of[img[x]] != f)
          throw Error("ParseError", "restriction image lands off-fiber");
      }
    }
    if (e == f) {
      for (int x : fs[e])
        if (img[x] != x)
          throw Error("IdentityLawViolated",
                      "restriction from " + std::to_string(e) +
                          " to itself is not the identity");
      continue;
    }
    p.rest[{e, f}] = img;
  }
  // fill the remaining comparable pairs by composing along chains
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < p.base.order; ++e)
      for (int f = 0; f < p.base.order; ++f) {
        if (!p.base.leq(f, e) || p.rest.count({e, f})) continue;
        for (int g = 0; g < p.base.order; ++g) {
          if (g == e || g == f) continue;
          if (!p.base.leq(g, e) || !p.base.leq(f, g)) continue;
          auto eg = p.rest.find({e, g});
          auto gf = p.rest.find({g, f});
          if (eg == p.rest.end() || gf == p.rest.end()) continue;
          std::vector<int> img(p.carrier_size, -1);
          for (int x : fs[e]) img[x] = gf->second[eg->second[x]];
          p.rest[{e, f}] = img;
          changed = true;
          break;
        }
      }
  }
  for (int e = 0; e < p.base.order; ++e)
    for (int f = 0; f < p.base.order; ++f)
      if (p.base.leq(f, e) && !p.rest.count({e, f})) {
        if (fs[e].empty()) {
          p.rest[{e, f}] = std::vector<int>(p.carrier_size, -1);
        } else {
          throw Error("MissingRestriction",
                      "no data determines the restriction from " +
                          std::to_string(e) + " to " + std::to_string(f));
        }
      }
  // composition law over all chains e >= f >= g
  for (int e = 0; e < p.base.order; ++e)
    for (int f = 0; f < p.base.order; ++f)
      for (int g = 0; g < p.base.order; ++g) {
        if (!p.base.leq(f, e) || !p.base.leq(g, f)) continue;
        for (int x : fs[e]) {
          int two_step = p.rest.at({f, g})[p.rest.at({e, f})[x]];
          int direct = p.rest.at({e, g})[x];
          if (two_step != direct)
            throw Error("CompositionLawViolated",
                        "chains " + std::to_string(e) + ">=" +
                            std::to_string(f) + ">=" + std::to_string(g) +
                            " disagree at element " + std::to_string(x));
        }
      }
  return p;
}

FiniteSemigroup to_band(const Presheaf& p) {
  FiniteSemigroup b;
  b.order = p.carrier_size;
  b.table.assign(static_cast<size_t>(b.order) * b.order, -1);
  for (int x = 0; x < b.order; ++x)
    for (int y = 0; y < b.order; ++y)
      b.at(x, y) = p.restrict_to(y, p.base.meet_of(p.p(x), p.p(y)));
  FiniteSemigroup checked = validate(b.rows());
  auto c = classify(checked);
  if (!c.is_band || !c.right_normal)
    throw Error("InternalTheoremViolation",
                "presheaf product is not a right normal band");
  return checked;
}

Presheaf band_to_presheaf(const FiniteSemigroup& b) {
  auto c = classify(b);
  if (!c.is_band || !c.right_normal)
    throw Error("NotRightNormalBand",
                "band_to_presheaf needs a right normal band");
  GreenRelations g = green(b);
  auto cls = g.R.classes();
  const int k = g.R.num_classes;
  // meet on R-classes via representative products
  std::vector<std::vector<int>> meet(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      meet[i][j] = g.R.class_of[b.at(cls[i][0], cls[j][0])];
  MeetSemilattice base = validate_semilattice(meet);

  std::map<std::pair<int, int>, std::vector<int>> given;
  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f) {
      if (!base.leq(f, e) || e == f) continue;
      std::vector<int> img(b.order, -1);
      for (int x : cls[e]) {
        int image = b.at(cls[f][0], x);
        // representative independence across the target R-class
        for (int rep : cls[f])
          if (b.at(rep, x) != image)
            throw Error("InternalTheoremViolation",
                        "restriction depends on the representative");
        img[x] = image;
      }
      given[{e, f}] = img;
    }
  return validate_presheaf(base, g.R.class_of, given);
}

PresheafIso presheaf_isomorphic(const Presheaf& a, const Presheaf& b,
                                const std::vector<int>& carrier_map,
                                const std::vector<int>& base_map) {
  PresheafIso out;
  out.carrier_map = carrier_map;
  out.base_map = base_map;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.counterexample = why;
    return out;
  };
  if (a.base.order != b.base.order || a.carrier_size != b.carrier_size)
    return fail("size mismatch");
  // base is a semilattice isomorphism
  std::vector<char> seen(b.base.order, 0);
  for (int e = 0; e < a.base.order; ++e) {
    if (base_map[e] < 0 || base_map[e] >= b.base.order || seen[base_map[e]])
      return fail("base map not a bijection");
    seen[base_map[e]] = 1;
  }
  for (int e = 0; e < a.base.order; ++e)
    for (int f = 0; f < a.base.order; ++f)
      if (base_map[a.base.meet_of(e, f)] !=
          b.base.meet_of(base_map[e], base_map[f]))
        return fail("base map does not preserve meets");
  std::vector<char> cseen(b.carrier_size, 0);
  for (int x = 0; x < a.carrier_size; ++x) {
    int y = carrier_map[x];
    if (y < 0 || y >= b.carrier_size || cseen[y])
      return fail("carrier map not a bijection");
    cseen[y] = 1;
    if (b.fiber_of[y] != base_map[a.fiber_of[x]])
      return fail("carrier map does not respect fibers at " +
                  std::to_string(x));
  }
  for (int x = 0; x < a.carrier_size; ++x)
    for (int f = 0; f < a.base.order; ++f) {
      if (!a.base.leq(f, a.fiber_of[x])) continue;
      int lhs = carrier_map[a.restrict_to(x, f)];
      int rhs = b.restrict_to(carrier_map[x], base_map[f]);
      if (lhs != rhs)
        return fail("restrictions do not commute at element " +
                    std::to_string(x));
    }
  out.ok = true;
  return out;
}

RoundtripResult roundtrip_band(const FiniteSemigroup& b) {
  RoundtripResult r;
  Presheaf p = band_to_presheaf(b);
  FiniteSemigroup back = to_band(p);
  if (back.table != b.table) {
    r.ok = false;
    r.counterexample = "band round trip changed the table";
    return r;
  }
  r.ok = true;
  return r;
}

RoundtripResult roundtrip_presheaf(const Presheaf& p) {
  RoundtripResult r;
  if (!p.global_support()) {
    r.ok = false;
    r.counterexample = "presheaf lacks global support";
    return r;
  }
  FiniteSemigroup b = to_band(p);
  Presheaf q = band_to_presheaf(b);
  // canonical witness: identity on the carrier, [x] -> p(x) on the base
  std::vector<int> carrier_map(p.carrier_size);
  for (int x = 0; x < p.carrier_size; ++x) carrier_map[x] = x;
  std::vector<int> base_map(q.base.order, -1);
  auto q_fibers = q.fibers();
  for (int e = 0; e < q.base.order; ++e)
    base_map[e] = p.fiber_of[q_fibers[e][0]];
  // base maps run q -> p, so check q isomorphic to p with identity carrier
  PresheafIso iso = presheaf_isomorphic(q, p, carrier_map, base_map);
  r.presheaf_witness = iso;
  r.ok = iso.ok;
  if (!iso.ok) r.counterexample = iso.counterexample;
  return r;
}

PresheafMorphism morphism_transport(const FiniteSemigroup& b1,
                                    const FiniteSemigroup& b2,
                                    const std::vector<int>& h) {
  if (!is_homomorphism(b1, b2, h))
    throw Error("NotHomomorphism", "map is not a homomorphism");
  Presheaf p1 = band_to_presheaf(b1);
  Presheaf p2 = band_to_presheaf(b2);
  PresheafMorphism m;
  m.alpha = h;
  m.beta.assign(p1.base.order, -1);
  auto fibers1 = p1.fibers();
  for (int e = 0; e < p1.base.order; ++e) {
    for (int x : fibers1[e]) {
      int img = p2.fiber_of[h[x]];
      if (m.beta[e] < 0) m.beta[e] = img;
      else if (m.beta[e] != img)
        throw Error("NotHomomorphism",
                    "image does not respect the R-relation");
    }
  }
  // beta is a semilattice homomorphism
  for (int e = 0; e < p1.base.order; ++e)
    for (int f = 0; f < p1.base.order; ++f)
      if (m.beta[p1.base.meet_of(e, f)] !=
          p2.base.meet_of(m.beta[e], m.beta[f]))
        throw Error("NotHomomorphism", "induced base map not a homomorphism");
  // alpha commutes with restrictions
  for (int x = 0; x < p1.carrier_size; ++x)
    for (int f = 0; f < p1.base.order; ++f) {
      if (!p1.base.leq(f, p1.fiber_of[x])) continue;
      if (h[p1.restrict_to(x, f)] !=
          p2.restrict_to(h[x], m.beta[f]))
        throw Error("NotHomomorphism",
                    "carrier map does not commute with restrictions");
    }
  return m;
}

OrderCompat order_and_compat(const Presheaf& p) {
  OrderCompat oc;
  const int n = p.carrier_size;
  oc.carrier_size = n;
  oc.leq.assign(static_cast<size_t>(n) * n, 0);
  oc.compat.assign(static_cast<size_t>(n) * n, 0);
  oc.meet.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.base.leq(p.p(x), p.p(y)) && p.restrict_to(y, p.p(x)) == x)
        oc.leq[static_cast<size_t>(x) * n + y] = 1;
    }
  // meets in the <= order
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int best = -1;
      for (int z = 0; z < n; ++z) {
        if (!oc.le(z, x) || !oc.le(z, y)) continue;
        if (best < 0 || oc.le(best, z)) best = z;
      }
      if (best >= 0) {
        // verify it is a greatest lower bound
        for (int z = 0; z < n; ++z)
          if (oc.le(z, x) && oc.le(z, y) && !oc.le(z, best)) best = -2;
      }
      oc.meet[static_cast<size_t>(x) * n + y] = best >= 0 ? best : -1;
      int mv = oc.meet[static_cast<size_t>(x) * n + y];
      if (mv >= 0 && p.p(mv) == p.base.meet_of(p.p(x), p.p(y)))
        oc.compat[static_cast<size_t>(x) * n + y] = 1;
    }
  // cross-checks against the circle product
  auto circ = [&](int x, int y) {
    return p.restrict_to(y, p.base.meet_of(p.p(x), p.p(y)));
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (oc.le(x, y) != (circ(x, y) == x))
        throw Error("InternalTheoremViolation",
                    "order characterization via the product failed");
      if (oc.sim(x, y) != (circ(x, y) == circ(y, x)))
        throw Error("InternalTheoremViolation",
                    "compatibility characterization via the product failed");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (oc.le(x, z) && oc.le(y, z) && !oc.sim(x, y))
          throw Error("InternalTheoremViolation",
                      "common upper bound without compatibility");
        if (oc.le(x, z) && oc.le(y, z) &&
            p.base.leq(p.p(x), p.p(y)) && !oc.le(x, y))
          throw Error("InternalTheoremViolation",
                      "order corollary failed on a triple");
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (oc.sim(x, y) && p.base.leq(p.p(x), p.p(y)) && !oc.le(x, y))
        throw Error("InternalTheoremViolation",
                    "compatible pair with comparable supports not ordered");
  return oc;
}

Presheaf parse_presheaf_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what());
  }
  auto meet = j.at("semilattice").at("meet")
                  .get<std::vector<std::vector<int>>>();
  MeetSemilattice base = validate_semilattice(meet);
  auto fiber_lists = j.at("fibers").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(fiber_lists.size()) != base.order)
    throw Error("ParseError", "fiber list count does not match semilattice");
  int carrier = 0;
  for (auto& f : fiber_lists)
    for (int x : f) carrier = std::max(carrier, x + 1);
  std::vector<int> fiber_of(carrier, -1);
  for (int e = 0; e < base.order; ++e)
    for (int x : fiber_lists[static_cast<size_t>(e)]) {
      if (x < 0 || fiber_of[static_cast<size_t>(x)] != -1)
        throw Error("ParseError", "fibers are not disjoint");
      fiber_of[static_cast<size_t>(x)] = e;
    }
  for (int x = 0; x < carrier; ++x)
    if (fiber_of[static_cast<size_t>(x)] < 0)
      throw Error("ParseError", "carrier ids must be contiguous across fibers");
  std::map<std::pair<int, int>, std::vector<int>> given;
  if (j.contains("restrictions")) {
    for (auto& [key, val] : j["restrictions"].items()) {
      auto gt = key.find('>');
      if (gt == std::string::npos)
        throw Error("ParseError", "restriction key must look like \"e>f\"");
      int e = std::stoi(key.substr(0, gt));
      int f = std::stoi(key.substr(gt + 1));
      auto images = val.get<std::vector<int>>();
      auto& members = fiber_lists[static_cast<size_t>(e)];
      if (images.size() != members.size())
        throw Error("ParseError",
                    "restriction image count does not match fiber size");
      std::vector<int> img(carrier, -1);
      for (size_t i = 0; i < members.size(); ++i)
        img[static_cast<size_t>(members[i])] = images[i];
      given[{e, f}] = img;
    }
  }
  return validate_presheaf(base, fiber_of, given);
}

std::string write_presheaf_json(const Presheaf& p) {
  nlohmann::json j;
  std::vector<std::vector<int>> meet(p.base.order,
                                     std::vector<int>(p.base.order));
  for (int e = 0; e < p.base.order; ++e)
    for (int f = 0; f < p.base.order; ++f) meet[e][f] = p.base.meet_of(e, f);
  j["semilattice"] = {{"order", p.base.order}, {"meet", meet}};
  auto fs = p.fibers();
  j["fibers"] = fs;
  nlohmann::json rj = nlohmann::json::object();
  for (auto& [key, img] : p.rest) {
    auto [e, f] = key;
    if (e == f) continue;
    std::vector<int> images;
    for (int x : fs[e]) images.push_back(img[x]);
    rj[std::to_string(e) + ">" + std::to_string(f)] = images;
  }
  j["restrictions"] = rj;
  return j.dump(2);
}

Presheaf load_presheaf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presheaf_json(buf.str());
}

}  // namespace gis
