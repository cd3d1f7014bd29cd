#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gis/classify.hpp"
#include "gis/enumerate.hpp"
#include "gis/presheaf.hpp"
#include "helpers.hpp"

using namespace gis;
using namespace testutil;

namespace {

Presheaf p3() {
  MeetSemilattice base = validate_semilattice({{0, 0}, {0, 1}});
  std::map<std::pair<int, int>, std::vector<int>> given;
  given[{1, 0}] = {-1, -1, 0};  // the top point restricts to 0
  return validate_presheaf(base, {0, 0, 1}, given);
}

}  // namespace

TEST_CASE("semilattice validation") {
  CHECK(validate_semilattice({{0}}).order == 1);
  auto sl = validate_semilattice({{0, 0}, {0, 1}});
  CHECK(sl.leq(0, 1));
  CHECK_FALSE(sl.leq(1, 0));
  try {
    validate_semilattice({{0, 1}, {0, 1}});  // right zero, not commutative
    FAIL("expected NotASemilattice");
  } catch (const Error& e) {
    CHECK(e.name() == "NotASemilattice");
  }
}

TEST_CASE("presheaf validation on the small examples") {
  MeetSemilattice one = validate_semilattice({{0}});
  auto single = validate_presheaf(one, {0}, {});
  CHECK(single.carrier_size == 1);
  CHECK(single.global_support());

  auto p = p3();
  CHECK(p.global_support());
  CHECK(p.restrict_to(2, 0) == 0);
  CHECK(p.restrict_to(2, 1) == 2);  // identity restriction
  CHECK(p.fibers() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("composition law violations are caught") {
  // 3-chain 0 < 1 < 2; fibers {4}@0... carrier: {0,1}@2, {2,3}@1, {4,5}@0
  MeetSemilattice chain =
      validate_semilattice({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  std::map<std::pair<int, int>, std::vector<int>> given;
  given[{2, 1}] = {2, 3, -1, -1, -1, -1};
  given[{1, 0}] = {-1, -1, 4, 5, -1, -1};
  // the direct 2 -> 0 map disagrees with the composite through level 1
  given[{2, 0}] = {5, 4, -1, -1, -1, -1};
  try {
    validate_presheaf(chain, {2, 2, 1, 1, 0, 0}, given);
    FAIL("expected CompositionLawViolated");
  } catch (const Error& e) {
    CHECK(e.name() == "CompositionLawViolated");
  }
  // with the consistent direct map everything validates
  given[{2, 0}] = {4, 5, -1, -1, -1, -1};
  CHECK_NOTHROW(validate_presheaf(chain, {2, 2, 1, 1, 0, 0}, given));
}

TEST_CASE("to_band on the named presheaves") {
  // one fiber with two points composes as a right zero semigroup
  MeetSemilattice one = validate_semilattice({{0}});
  auto two_points = validate_presheaf(one, {0, 0}, {});
  CHECK(to_band(two_points).table == rz2().table);

  CHECK(to_band(p3()).table == y3().table);

  // singleton fibers reproduce the base semilattice
  MeetSemilattice sl = validate_semilattice({{0, 0}, {0, 1}});
  auto singles = validate_presheaf(sl, {0, 1}, {{{1, 0}, {-1, 0}}});
  CHECK(to_band(singles).table == sl2().table);
}

TEST_CASE("band_to_presheaf on the named bands") {
  auto pr = band_to_presheaf(rz2());
  CHECK(pr.base.order == 1);
  CHECK(pr.fibers() == std::vector<std::vector<int>>{{0, 1}});

  auto ps = band_to_presheaf(sl2());
  CHECK(ps.base.order == 2);
  for (auto& f : ps.fibers()) CHECK(f.size() == 1);

  auto py = band_to_presheaf(y3());
  auto iso = presheaf_isomorphic(py, p3(), {0, 1, 2}, {0, 1});
  CHECK(iso.ok);
}

TEST_CASE("band_to_presheaf rejects bands that are not right normal") {
  try {
    band_to_presheaf(lz2());
    FAIL("expected NotRightNormalBand");
  } catch (const Error& e) {
    CHECK(e.name() == "NotRightNormalBand");
  }
}

TEST_CASE("round trips on fixtures") {
  for (auto b : {rz2(), sl2(), y3()}) {
    auto r = roundtrip_band(b);
    CHECK(r.ok);
  }
  auto rp = roundtrip_presheaf(p3());
  CHECK(rp.ok);
  CHECK(rp.presheaf_witness.ok);
}

TEST_CASE("round trips across the enumerated right normal bands") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      auto c = classify(s);
      if (!c.is_band || !c.right_normal) continue;
      auto r = roundtrip_band(s);
      CHECK(r.ok);
      CHECK(roundtrip_presheaf(band_to_presheaf(s)).ok);
    }
}

TEST_CASE("R-classes of to_band match fibers") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      auto c = classify(s);
      if (!c.is_band || !c.right_normal) continue;
      auto p = band_to_presheaf(s);
      auto b = to_band(p);
      auto g = green(b);
      for (int x = 0; x < b.order; ++x)
        for (int y = 0; y < b.order; ++y)
          CHECK(g.R.same(x, y) == (p.fiber_of[x] == p.fiber_of[y]));
    }
}

TEST_CASE("morphism transport") {
  std::vector<int> id = {0, 1, 2};
  auto m = morphism_transport(y3(), y3(), id);
  CHECK(m.alpha == id);
  CHECK(m.beta == std::vector<int>{0, 1});

  // collapse Y3 onto its semilattice image inside itself: 0,1 -> 0, 2 -> 2
  std::vector<int> collapse = {0, 0, 2};
  CHECK_NOTHROW(morphism_transport(y3(), y3(), collapse));

  try {
    morphism_transport(y3(), y3(), {0, 2, 1});
    FAIL("expected NotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.name() == "NotHomomorphism");
  }
}

TEST_CASE("order and compatibility calculus on P3") {
  auto oc = order_and_compat(p3());
  CHECK(oc.le(0, 2));   // 0 is the restriction of the top point
  CHECK_FALSE(oc.le(2, 0));
  CHECK_FALSE(oc.le(1, 2));  // the other bottom point is not
  CHECK(oc.sim(1, 1));
  CHECK_FALSE(oc.sim(2, 1));  // 2 o 1 = 1 but 1 o 2 = 0
  CHECK(oc.sim(0, 2));        // comparable elements are compatible
  CHECK(oc.meet[0 * 3 + 2] == 0);
}

TEST_CASE("lemma 2.2 cross-checks hold over enumerated presheaves") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      auto c = classify(s);
      if (!c.is_band || !c.right_normal) continue;
      CHECK_NOTHROW(order_and_compat(band_to_presheaf(s)));
    }
}

TEST_CASE("presheaf JSON round trip") {
  auto p = load_presheaf_file(fixture("p3.json"));
  CHECK(p.fibers() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(p.restrict_to(2, 0) == 0);
  auto q = parse_presheaf_json(write_presheaf_json(p));
  CHECK(q.fiber_of == p.fiber_of);
  CHECK(q.rest == p.rest);
  CHECK(q.base == p.base);
}
