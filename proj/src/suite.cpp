#include "gis/suite.hpp"

#include <chrono>
#include <functional>

#include <nlohmann/json.hpp>

#include "gis/congruence.hpp"
#include "gis/enumerate.hpp"
#include "gis/etale.hpp"
#include "gis/madhavan.hpp"
#include "gis/morita.hpp"
#include "gis/presheaf.hpp"
#include "gis/yamada.hpp"

namespace gis {

Corpus build_corpus(int max_order, bool bands_only) {
  Corpus c;
  for (int n = 1; n <= max_order; ++n) {
    auto all = enumerate_semigroups(n, bands_only);
    for (size_t i = 0; i < all.size(); ++i) {
      CorpusEntry e;
      e.name = "n" + std::to_string(n) + "#" + std::to_string(i);
      e.provenance = "enumerated";
      e.sg = all[i];
      e.cls = classify(all[i]);
      c.members.push_back(std::move(e));
    }
  }
  return c;
}

std::string RunReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["order_cap"] = order_cap;
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["subject"] = c.subject;
    jc["status"] = c.status;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  if (with_timing) j["seconds"] = seconds;
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop1.1", "prop1.2", "thm1.3",  "thm2.1",  "lemma2.2", "prop3.2",
      "prop3.3", "prop4.2", "thm4.5",  "prop4.6", "thm5.1",   "madhavan"};
  return names;
}

namespace {

// Runs one check over every applicable corpus member. The check either
// returns (pass), returns false (skip) or throws (fail with witness).
RunReport sweep(const std::string& suite, int max_order, bool bands_only,
                const std::function<bool(const CorpusEntry&)>& check) {
  RunReport rep;
  rep.suite = suite;
  rep.order_cap = max_order;
  auto t0 = std::chrono::steady_clock::now();
  Corpus corpus = build_corpus(max_order, bands_only);
  for (const auto& e : corpus.members) {
    CheckResult r;
    r.subject = e.name;
    try {
      if (check(e)) {
        r.status = "pass";
        ++rep.passed;
      } else {
        r.status = "skipped";
        ++rep.skipped;
      }
    } catch (const std::exception& ex) {
      r.status = "fail";
      r.witness = ex.what();
      ++rep.failed;
    }
    rep.checks.push_back(std::move(r));
  }
  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error("CheckFailed", what);
}

}  // namespace

RunReport run_suite(const std::string& name, int max_order) {
  if (name == "prop1.1")
    return sweep(name, max_order, true, [](const CorpusEntry& e) {
      if (!e.cls.is_band) return false;
      order_compatibility_report(e.sg);
      return true;
    });
  if (name == "prop1.2")
    return sweep(name, max_order, false, [max_order](const CorpusEntry& e) {
      if (!e.cls.generalized_inverse) return false;
      auto [lam, rho] = lambda_rho(e.sg);
      require(idempotent_pure(e.sg, lam), "lambda is not idempotent pure");
      require(idempotent_pure(e.sg, rho), "rho is not idempotent pure");
      if (max_order <= 4) {
        require(is_minimum_with(e.sg, lam,
                                [](const FiniteSemigroup& q) {
                                  return classify(q)
                                      .right_generalized_inverse;
                                }),
                "lambda is not minimum");
        require(is_minimum_with(e.sg, rho,
                                [](const FiniteSemigroup& q) {
                                  return classify(q).left_generalized_inverse;
                                }),
                "rho is not minimum");
      }
      return true;
    });
  if (name == "thm1.3")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.generalized_inverse) return false;
      subdirect_embed(e.sg);
      return true;
    });
  if (name == "thm2.1")
    return sweep(name, max_order, true, [](const CorpusEntry& e) {
      if (!e.cls.is_band || !e.cls.right_normal) return false;
      auto rb = roundtrip_band(e.sg);
      require(rb.ok, rb.counterexample.c_str());
      auto rp = roundtrip_presheaf(band_to_presheaf(e.sg));
      require(rp.ok, rp.counterexample.c_str());
      return true;
    });
  if (name == "lemma2.2")
    return sweep(name, max_order, true, [](const CorpusEntry& e) {
      if (!e.cls.is_band || !e.cls.right_normal) return false;
      order_and_compat(band_to_presheaf(e.sg));
      return true;
    });
  if (name == "prop3.2")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.inverse) return false;
      InverseSemigroup t = make_inverse(e.sg);
      EtaleAction a = translation_action(t);
      EtaleAction back = presheaf_action_to_etale(etale_to_presheaf_action(a));
      require(back.support == a.support && back.act == a.act,
              "conversion round trip changed the action");
      return true;
    });
  if (name == "prop3.3")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.inverse) return false;
      InverseSemigroup t = make_inverse(e.sg);
      EtaleAction target = translation_action(t);
      Presheaf a = presheaf_of(target);
      FreeEtale f = free_etale(t, a);
      if (f.action.carrier_size > 12) return false;
      std::vector<int> beta(a.carrier_size);
      for (int i = 0; i < a.carrier_size; ++i) beta[i] = i;
      auto up = universal_property_check(t, a, target, beta);
      require(up.uniqueness_checked ? up.unique : true,
              "mediating morphism is not unique");
      return true;
    });
  if (name == "prop4.2")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.right_generalized_inverse) return false;
      etale_structure(e.sg);
      return true;
    });
  if (name == "thm4.5")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.right_generalized_inverse) return false;
      kappa_decompose(e.sg);
      return true;
    });
  if (name == "prop4.6")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.right_generalized_inverse) return false;
      auto k = kappa_decompose(e.sg);
      auto out = free_roundtrip_check(k.t, k.sheaf);
      require(out.ok, out.counterexample.c_str());
      return true;
    });
  if (name == "thm5.1")
    return sweep(name, max_order, false, [](const CorpusEntry& e) {
      if (!e.cls.generalized_inverse) return false;
      auto form = yamada_form(e.sg);
      auto rep = theta_iso_check(form.ys);
      require(rep.iso, rep.counterexample.c_str());
      return true;
    });
  if (name == "madhavan") {
    // the corpus here is every (X, rho) with |X| <= 3, not the semigroups
    RunReport rep;
    rep.suite = name;
    rep.order_cap = 3;
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> raw(n, 0);
      std::function<void(int, int)> parts = [&](int i, int next) {
        if (i == n) {
          Partition rho = Partition::from_class_of(raw);
          CheckResult r;
          r.subject = "X" + std::to_string(n) + " rho " + rho.to_string();
          try {
            auto m = build_m_rho(n, rho);
            require(classify(m.sg).right_generalized_inverse,
                    "not right generalized inverse");
            require(idempotent_characterization_check(m),
                    "idempotent characterization mismatch");
            r.status = "pass";
            ++rep.passed;
          } catch (const std::exception& ex) {
            r.status = "fail";
            r.witness = ex.what();
            ++rep.failed;
          }
          rep.checks.push_back(std::move(r));
          return;
        }
        for (int c = 0; c < next; ++c) {
          raw[i] = c;
          parts(i + 1, next);
        }
        raw[i] = next;
        parts(i + 1, next + 1);
      };
      parts(0, 0);
    }
    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
  }
  throw Error("UnknownSuite", "no suite named '" + name + "'");
}

}  // namespace gis
