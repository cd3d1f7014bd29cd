#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gis/classify.hpp"
#include "gis/enumerate.hpp"
#include "gis/yamada.hpp"
#include "helpers.hpp"

using namespace gis;
using namespace testutil;

namespace {

Presheaf p3() {
  MeetSemilattice base = validate_semilattice({{0, 0}, {0, 1}});
  std::map<std::pair<int, int>, std::vector<int>> given;
  given[{1, 0}] = {-1, -1, 0};
  return validate_presheaf(base, {0, 0, 1}, given);
}

Presheaf singleton_presheaf(const InverseSemigroup& s) {
  MeetSemilattice base = s.e_semilattice();
  std::vector<int> fiber_of(base.order);
  for (int i = 0; i < base.order; ++i) fiber_of[i] = i;
  std::map<std::pair<int, int>, std::vector<int>> given;
  for (int e = 0; e < base.order; ++e)
    for (int f = 0; f < base.order; ++f) {
      if (e == f || !base.leq(f, e)) continue;
      std::vector<int> img(base.order, -1);
      img[e] = f;
      given[{e, f}] = img;
    }
  return validate_presheaf(base, fiber_of, given);
}

// E(I2) presheaf with the bottom fiber doubled, everything else singleton
Presheaf doubled_bottom(const InverseSemigroup& s) {
  MeetSemilattice base = s.e_semilattice();
  int bottom = 0;
  for (int e = 0; e < base.order; ++e)
    if (base.leq(e, bottom)) bottom = e;
  std::vector<int> fiber_of;
  fiber_of.push_back(bottom);
  fiber_of.push_back(bottom);
  for (int e = 0; e < base.order; ++e)
    if (e != bottom) fiber_of.push_back(e);
  const int m = static_cast<int>(fiber_of.size());
  auto members_of = [&](int e) {
    std::vector<int> out;
    for (int x = 0; x < m; ++x)
      if (fiber_of[x] == e) out.push_back(x);
    return out;
  };
  std::map<std::pair<int, int>, std::vector<int>> given;
  for (int e = 0; e < base.order; ++e)
    for (int f = 0; f < base.order; ++f) {
      if (e == f || !base.leq(f, e)) continue;
      std::vector<int> img(m, -1);
      for (int x : members_of(e)) img[x] = members_of(f)[0];
      given[{e, f}] = img;
    }
  return validate_presheaf(base, fiber_of, given);
}

}  // namespace

TEST_CASE("build_right_yamada over SL2 and P3 gives Y3") {
  auto t = make_inverse(sl2());
  auto y = build_right_yamada(t, p3());
  CHECK(y.sg.table == y3().table);
  CHECK(y.elems == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 2}});
}

TEST_CASE("build_right_yamada with singleton fibers reproduces T") {
  auto t = make_inverse(i2());
  auto y = build_right_yamada(t, singleton_presheaf(t));
  CHECK(y.sg.order == 7);
  CHECK(find_isomorphism(y.sg, i2()).has_value());
}

TEST_CASE("build_right_yamada with a doubled fiber over I2") {
  auto t = make_inverse(i2());
  auto y = build_right_yamada(t, doubled_bottom(t));
  CHECK(y.sg.order == 8);  // only d(t)=0 contributes a second point
  CHECK(classify(y.sg).right_generalized_inverse);
  Congruence g = gamma(y.sg);
  auto [q, proj] = quotient(y.sg, g);
  CHECK(find_isomorphism(q, i2()).has_value());
}

TEST_CASE("build_right_yamada guards its preconditions") {
  auto t = make_inverse(i2());
  try {
    build_right_yamada(t, p3());
    FAIL("expected BaseMismatch");
  } catch (const Error& e) {
    CHECK(e.name() == "BaseMismatch");
  }
  // empty a fiber of the SL2 presheaf
  MeetSemilattice base = validate_semilattice({{0, 0}, {0, 1}});
  auto empty_top = validate_presheaf(base, {0, 0}, {});
  try {
    build_right_yamada(make_inverse(sl2()), empty_top);
    FAIL("expected NoGlobalSupport");
  } catch (const Error& e) {
    CHECK(e.name() == "NoGlobalSupport");
  }
}

TEST_CASE("etale structure of the named examples") {
  auto er = etale_structure(rz2());
  CHECK(er.actor.s.order == 1);
  CHECK(er.action.carrier_size == 2);

  auto ey = etale_structure(y3());
  CHECK(ey.actor.s.order == 2);
  CHECK(ey.action.carrier_size == 3);

  // on an inverse semigroup gamma is equality and the action is translation
  auto ei = etale_structure(i2());
  CHECK(ei.actor.s.order == 7);
  auto tr = translation_action(make_inverse(i2()));
  for (int a = 0; a < 7; ++a)
    for (int x = 0; x < 7; ++x) {
      int cls = ei.gamma_class_of[a];
      CHECK(ei.action.apply(cls, x) == tr.apply(a, x));
    }
}

TEST_CASE("etale structure refuses non right g.i. input") {
  try {
    etale_structure(lz2());
    FAIL("expected NotRightGeneralizedInverse");
  } catch (const Error& e) {
    CHECK(e.name() == "NotRightGeneralizedInverse");
  }
}

TEST_CASE("L-cover checks") {
  // identity maps are L-covers
  std::vector<int> id3 = {0, 1, 2};
  CHECK(l_cover_check(y3(), y3(), id3));

  // the natural map onto the gamma quotient is an L-cover
  Congruence g = gamma(y3());
  auto [q, proj] = quotient(y3(), g);
  CHECK(l_cover_check(y3(), q, proj));

  // collapse of RZ2 where L-classes are singletons
  CHECK(l_cover_check(rz2(), make({{0}}), {0, 0}));

  try {
    l_cover_check(y3(), y3(), {0, 2, 1});
    FAIL("expected NotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.name() == "NotHomomorphism");
  }
  try {
    l_cover_check(y3(), y3(), {0, 0, 0});
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    CHECK(e.name() == "NotSurjective");
  }
}

TEST_CASE("natural gamma maps are L-covers across the small corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).right_generalized_inverse) continue;
      Congruence g = gamma(s);
      auto [q, proj] = quotient(s, g);
      CHECK(l_cover_check(s, q, proj));
    }
}

TEST_CASE("kappa decomposition of Y3 recovers SL2 and P3") {
  auto k = kappa_decompose(y3());
  CHECK(k.t.s.order == 2);
  CHECK(find_isomorphism(k.t.s, sl2()).has_value());
  CHECK(k.sheaf.carrier_size == 3);
  auto fibers = k.sheaf.fibers();
  std::vector<size_t> sizes;
  for (auto& f : fibers) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2});
  CHECK(is_homomorphism(y3(), k.yam.sg, k.kappa));
}

TEST_CASE("kappa decomposition of RZ2 has a trivial actor") {
  auto k = kappa_decompose(rz2());
  CHECK(k.t.s.order == 1);
  CHECK(k.sheaf.fibers() == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("kappa is an isomorphism across the small corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).right_generalized_inverse) continue;
      auto k = kappa_decompose(s);
      CHECK(k.yam.sg.order == s.order);
    }
}

TEST_CASE("free roundtrip of Prop 4.6 flavored instances") {
  auto e = make_inverse(sl2());
  CHECK(free_roundtrip_check(e, p3()).ok);
  auto t = make_inverse(i2());
  CHECK(free_roundtrip_check(t, singleton_presheaf(t)).ok);
  CHECK(free_roundtrip_check(t, doubled_bottom(t)).ok);
}

TEST_CASE("free roundtrip across the small corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).right_generalized_inverse) continue;
      auto k = kappa_decompose(s);
      CHECK(free_roundtrip_check(k.t, k.sheaf).ok);
    }
}
