#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gis/classify.hpp"
#include "gis/congruence.hpp"
#include "gis/enumerate.hpp"
#include "helpers.hpp"

using namespace gis;
using namespace testutil;

namespace {
// regular is false here, so gamma and lambda_rho must refuse it
FiniteSemigroup non_regular() {
  return make({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
}
}  // namespace

TEST_CASE("gamma on inverse semigroups is equality") {
  auto g = gamma(i2());
  CHECK(g.partition.is_equality());
}

TEST_CASE("gamma on RZ2 is full") {
  auto g = gamma(rz2());
  CHECK(g.partition.is_full());
  auto [q, proj] = quotient(rz2(), g);
  CHECK(q.order == 1);
}

TEST_CASE("gamma on Y3 has quotient SL2") {
  auto g = gamma(y3());
  CHECK(g.partition.num_classes == 2);
  // 0 and 2 are not gamma-related: V(0) = {0,1} but V(2) = {2}
  CHECK(g.partition.same(0, 1));
  CHECK_FALSE(g.partition.same(0, 2));
  auto [q, proj] = quotient(y3(), g);
  CHECK(find_isomorphism(q, sl2()).has_value());
}

TEST_CASE("gamma refuses non-orthodox input") {
  try {
    gamma(non_regular());
    FAIL("expected NotOrthodox");
  } catch (const Error& e) {
    CHECK(e.name() == "NotOrthodox");
  }
}

TEST_CASE("lambda and rho on the named examples") {
  auto [li, ri] = lambda_rho(i2());
  CHECK(li.partition.is_equality());
  CHECK(ri.partition.is_equality());

  auto [lr, rr] = lambda_rho(rz2());
  CHECK(lr.partition.is_equality());
  CHECK(rr.partition.is_full());

  auto [ll, rl] = lambda_rho(lz2());
  CHECK(ll.partition.is_full());
  CHECK(rl.partition.is_equality());
}

TEST_CASE("lambda_rho refuses non-generalized-inverse input") {
  try {
    lambda_rho(non_regular());
    FAIL("expected NotGeneralizedInverse");
  } catch (const Error& e) {
    CHECK(e.name() == "NotGeneralizedInverse");
  }
}

TEST_CASE("quotients by equality and full congruences") {
  auto s = y3();
  auto [same, p1] = quotient(s, make_congruence(s, Partition::equality(3)));
  CHECK(same.table == s.table);
  auto [one, p2] = quotient(s, make_congruence(s, Partition::full(3)));
  CHECK(one.order == 1);
}

TEST_CASE("congruence closure produces congruences") {
  auto s = y3();
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b) {
      auto p = principal_congruence(s, a, b);
      CHECK(is_congruence(s, p));
      CHECK(p.same(a, b));
    }
}

TEST_CASE("all_congruences counts") {
  CHECK(all_congruences(trivial()).size() == 1);
  CHECK(all_congruences(sl2()).size() == 2);
  CHECK(all_congruences(z2()).size() == 2);
  // every partition of a right zero semigroup is a congruence
  CHECK(all_congruences(rz2()).size() == 2);
  CHECK(all_congruences(i2()).size() > 2);
}

TEST_CASE("all_congruences enforces the order bound") {
  try {
    all_congruences(i2(), 4);
    FAIL("expected OrderBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.name() == "OrderBoundExceeded");
  }
}

TEST_CASE("minimality of gamma, lambda, rho") {
  auto inverse_pred = [](const FiniteSemigroup& q) {
    return classify(q).inverse;
  };
  auto right_pred = [](const FiniteSemigroup& q) {
    return classify(q).right_generalized_inverse;
  };
  CHECK(is_minimum_with(rz2(), gamma(rz2()), inverse_pred));
  auto [lam, rho] = lambda_rho(y3());
  CHECK(is_minimum_with(y3(), lam, right_pred));
  CHECK(is_minimum_with(i2(), make_congruence(i2(), Partition::equality(7)),
                        inverse_pred));
}

TEST_CASE("gamma is the minimum inverse congruence over small orthodox members") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).orthodox) continue;
      CHECK(is_minimum_with(s, gamma(s), [](const FiniteSemigroup& q) {
        return classify(q).inverse;
      }));
    }
}

TEST_CASE("idempotent purity") {
  auto [lam, rho] = lambda_rho(y3());
  CHECK(idempotent_pure(y3(), lam));  // bands are trivially pure
  auto [li, ri] = lambda_rho(i2());
  CHECK(idempotent_pure(i2(), li));
  // the full congruence on I2 merges the identity with non-idempotents
  CHECK_FALSE(idempotent_pure(i2(), make_congruence(i2(),
                                                    Partition::full(7))));
}

TEST_CASE("lambda and rho restrict to L and R on the idempotents") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).generalized_inverse) continue;
      auto [lam, rho] = lambda_rho(s);
      auto g = green(s);
      for (int e : idempotents(s))
        for (int f : idempotents(s)) {
          CHECK(lam.partition.same(e, f) == g.L.same(e, f));
          CHECK(rho.partition.same(e, f) == g.R.same(e, f));
        }
    }
}

TEST_CASE("subdirect embedding on the named examples") {
  auto er = subdirect_embed(rz2());
  CHECK(er.left_quotient.order == 1);   // S/rho, rho full
  CHECK(er.right_quotient.order == 2);  // S/lambda, lambda equality
  CHECK(er.product.order == 2);

  auto ei = subdirect_embed(i2());
  CHECK(ei.product.order == 49);  // diagonal into S x S
  CHECK(ei.map.size() == 7);

  CHECK_NOTHROW(subdirect_embed(y3()));
}

TEST_CASE("subdirect embedding across the small corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semigroups(n)) {
      if (!classify(s).generalized_inverse) continue;
      auto e = subdirect_embed(s);
      CHECK(is_homomorphism(s, e.product, e.map));
      auto [lam, rho] = lambda_rho(s);
      CHECK(Partition::meet(lam.partition, rho.partition).is_equality());
    }
}

TEST_CASE("congruence serialization round trip") {
  Congruence c = gamma(y3());
  auto text = congruence_to_string(c);
  CHECK(text == "0 1 | 2");
  auto p = parse_class_list(text, 3);
  CHECK(p == c.partition);
  CHECK_THROWS_AS(parse_class_list("0 | 5", 3), Error);
  CHECK_THROWS_AS(parse_class_list("0 | 1", 3), Error);  // 2 unassigned
}
