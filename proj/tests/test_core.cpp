#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gis/classify.hpp"
#include "gis/enumerate.hpp"
#include "helpers.hpp"

using namespace gis;
using namespace testutil;

TEST_CASE("validate accepts lawful tables") {
  CHECK(trivial().order == 1);
  CHECK(rz2().at(0, 1) == 1);
  CHECK(rz2().at(1, 0) == 0);
}

TEST_CASE("validate rejects out-of-range entries") {
  CHECK_THROWS_WITH_AS(validate({{0, 1}, {1, 2}}),
                       doctest::Contains("out of range"), Error);
  try {
    validate({{0, 2}, {1, 1}});
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.name() == "NotClosed");
  }
}

TEST_CASE("validate rejects non-associative tables with a witness") {
  // xy = x*y mod effects: [[0,1],[1,0]] is a group; tweak one cell to break it
  try {
    validate({{0, 1}, {0, 0}});
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.name() == "NotAssociative");
    CHECK(std::string(e.what()).find("a=") != std::string::npos);
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(rz2()) == std::vector<int>{0, 1});
  CHECK(idempotents(z2()) == std::vector<int>{0});
  CHECK(idempotents(i2()).size() == 4);
}

TEST_CASE("inverses_of") {
  auto b = rz2();
  for (int e = 0; e < b.order; ++e) {
    auto v = inverses_of(b, e);
    CHECK(std::find(v.begin(), v.end(), e) != v.end());
  }
  CHECK(inverses_of(rz2(), 0) == std::vector<int>{0, 1});
  for (int s = 0; s < 2; ++s) CHECK(inverses_of(sl2(), s) == std::vector{s});
}

TEST_CASE("classification of the named small semigroups") {
  auto c = classify(rz2());
  CHECK(c.is_band);
  CHECK(c.right_normal);
  CHECK(c.right_regular);
  CHECK(c.right_generalized_inverse);
  CHECK_FALSE(c.inverse);

  auto l = classify(lz2());
  CHECK(l.is_band);
  CHECK(l.left_normal);
  CHECK(l.left_generalized_inverse);

  auto i = classify(i2());
  CHECK(i.inverse);
  CHECK(i.generalized_inverse);
  CHECK(i.left_generalized_inverse);
  CHECK(i.right_generalized_inverse);
}

TEST_CASE("classification flags are mutually consistent on the corpus") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      auto c = classify(s);
      if (c.inverse) CHECK(c.orthodox);
      if (c.orthodox) CHECK(c.regular);
      if (c.left_generalized_inverse) CHECK(c.generalized_inverse);
      if (c.right_generalized_inverse) CHECK(c.generalized_inverse);
      if (c.inverse) {
        CHECK(c.left_generalized_inverse);
        CHECK(c.right_generalized_inverse);
      }
      if (c.is_band) {
        // one-sided normality implies normality by identity evaluation
        if (c.left_normal) CHECK(c.normal);
        if (c.right_normal) CHECK(c.normal);
      }
    }
}

TEST_CASE("Green's relations on the small examples") {
  auto g = green(rz2());
  CHECK(g.R.is_full());
  CHECK(g.L.is_equality());

  auto gs = green(sl2());
  CHECK(gs.L.is_equality());
  CHECK(gs.R.is_equality());
  CHECK(gs.H.is_equality());
  CHECK(gs.D.is_equality());
  CHECK(gs.J.is_equality());

  auto gz = green(z2());
  CHECK(gz.L.is_full());
  CHECK(gz.J.is_full());
}

TEST_CASE("Green inclusion chain over the corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      auto g = green(s);
      CHECK(g.H.refines(g.L));
      CHECK(g.H.refines(g.R));
      CHECK(g.L.refines(g.D));
      CHECK(g.R.refines(g.D));
      CHECK(g.D.refines(g.J));
    }
}

TEST_CASE("band identity biconditionals of the Green relations") {
  // right regular iff L is equality; left regular iff R is equality
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      if (!classify(s).is_band) continue;
      auto c = classify(s);
      auto g = green(s);
      CHECK(c.right_regular == g.L.is_equality());
      CHECK(c.left_regular == g.R.is_equality());
    }
}

TEST_CASE("natural order") {
  auto no = natural_order(sl2());
  CHECK(no.leq(0, 1));
  CHECK_FALSE(no.leq(1, 0));

  auto nr = natural_order(rz2());
  CHECK(nr.leq(0, 0));
  CHECK(nr.leq(1, 1));
  CHECK_FALSE(nr.leq(0, 1));
  CHECK_FALSE(nr.leq(1, 0));
}

TEST_CASE("natural order on bands is the idempotent order") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      if (!classify(s).is_band) continue;
      auto no = natural_order(s);
      for (int e = 0; e < s.order; ++e)
        for (int f = 0; f < s.order; ++f)
          CHECK(no.leq(e, f) == (s.at(e, f) == e && s.at(f, e) == e));
    }
}

TEST_CASE("natural order requires a regular semigroup") {
  // x+y (capped) on {0,1,2} with 2 absorbing: 1 has no inverse
  auto s = make({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
  CHECK_FALSE(classify(s).regular);
  try {
    natural_order(s);
    FAIL("expected NotRegular");
  } catch (const Error& e) {
    CHECK(e.name() == "NotRegular");
  }
}

TEST_CASE("local submonoids") {
  auto [t0, c0] = local_submonoid(trivial(), 0);
  CHECK(t0.order == 1);

  auto [r0, rc] = local_submonoid(rz2(), 0);
  CHECK(r0.order == 1);
  CHECK(rc == std::vector<int>{0});

  auto m = i2();
  auto [full, fc] = local_submonoid(m, 5);  // 5 is the identity
  CHECK(full.order == 7);

  try {
    local_submonoid(z2(), 1);
    FAIL("expected NotIdempotent");
  } catch (const Error& e) {
    CHECK(e.name() == "NotIdempotent");
  }
}

TEST_CASE("order compatibility report") {
  auto cs = order_compatibility_report(sl2());
  CHECK(cs.compatible);
  CHECK(cs.locally_inverse);

  auto cr = order_compatibility_report(rz2());
  CHECK(cr.right_compatible);
  CHECK(cr.left_compatible);
  CHECK(cr.compatible);
}

TEST_CASE("order compatibility biconditionals hold over small bands") {
  // the report itself throws InternalTheoremViolation on any mismatch
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n, true)) {
      if (!classify(s).is_band) continue;
      CHECK_NOTHROW(order_compatibility_report(s));
    }
}

TEST_CASE("sgp parsing round trip with comments and labels") {
  auto s = parse_sgp("# a comment\n2\n0 1  # inline\n0 1\nlabels: a b\n");
  CHECK(s.order == 2);
  CHECK(s.labels == std::vector<std::string>{"a", "b"});
  auto again = parse_sgp(write_sgp(s));
  CHECK(again.table == s.table);
  CHECK(again.labels == s.labels);
}

TEST_CASE("json semigroup parsing") {
  auto s = parse_semigroup_json(
      R"({"order": 2, "table": [[0,1],[0,1]], "labels": ["x","y"]})");
  CHECK(s.table == rz2().table);
  CHECK(s.labels[1] == "y");
  CHECK_THROWS_AS(parse_semigroup_json(R"({"order": 3})"), Error);
  // auto-dispatch picks json for brace-led text
  auto t = parse_semigroup_auto(R"(  {"table": [[0]]} )");
  CHECK(t.order == 1);
}

TEST_CASE("every fixture parses and matches its documented class") {
  CHECK(classify(load_semigroup_file(fixture("rz2.sgp"))).right_normal);
  CHECK(classify(load_semigroup_file(fixture("lz2.sgp"))).left_normal);
  auto sl = load_semigroup_file(fixture("sl2.sgp"));
  CHECK(classify(sl).is_band);
  CHECK(classify(sl).left_normal);
  CHECK(classify(sl).right_normal);
  auto y = load_semigroup_file(fixture("y3.sgp"));
  CHECK(classify(y).is_band);
  CHECK(classify(y).right_normal);
  CHECK(classify(load_semigroup_file(fixture("i2.sgp"))).inverse);
  auto m = load_semigroup_file(fixture("m_full2.sgp"));
  CHECK(classify(m).is_band);
  CHECK(classify(m).right_normal);
}

TEST_CASE("embedding and isomorphism search") {
  CHECK(find_isomorphism(rz2(), rz2()).has_value());
  CHECK_FALSE(find_isomorphism(rz2(), lz2()).has_value());
  CHECK_FALSE(find_isomorphism(rz2(), sl2()).has_value());
  // RZ2 sits inside Y3 as {0,1}
  auto emb = find_embedding(rz2(), y3());
  REQUIRE(emb.has_value());
  CHECK(is_homomorphism(rz2(), y3(), *emb));
  CHECK_FALSE(find_embedding(z2(), y3()).has_value());
}

TEST_CASE("direct product and opposite") {
  auto p = direct_product(rz2(), sl2());
  CHECK(p.order == 4);
  CHECK_NOTHROW(validate(p.rows()));
  auto o = opposite(rz2());
  CHECK(find_isomorphism(o, lz2()).has_value());
}

TEST_CASE("partition utilities") {
  auto p = Partition::from_class_of({7, 3, 7, 9});
  CHECK(p.num_classes == 3);
  CHECK(p.same(0, 2));
  CHECK_FALSE(p.same(0, 1));
  CHECK(p.to_string() == "0 2 | 1 | 3");
  CHECK(Partition::meet(p, Partition::equality(4)).is_equality());
  CHECK(Partition::join(p, Partition::full(4)).is_full());
  CHECK(Partition::equality(4).refines(p));
  CHECK(p.refines(Partition::full(4)));
}
