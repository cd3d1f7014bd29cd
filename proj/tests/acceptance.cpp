// Acceptance sweep: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gis/classify.hpp"
#include "gis/enumerate.hpp"
#include "gis/madhavan.hpp"
#include "gis/morita.hpp"
#include "gis/suite.hpp"
#include "helpers.hpp"

namespace {

int criteria_failed = 0;

void report(int number, const std::string& title, bool ok, double seconds,
            const std::string& detail) {
  std::ostringstream line;
  line << "[" << number << "/8] " << title << ": "
       << (ok ? "pass" : "FAIL") << " (" << detail << ", " << std::fixed
       << std::setprecision(1) << seconds << "s)";
  std::cout << line.str() << "\n";
  if (!ok) ++criteria_failed;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

// Runs named suites, all of which must pass with no failures.
void suite_criterion(int number, const std::string& title,
                     const std::vector<std::string>& suites, int order,
                     double time_budget = 0.0) {
  Timer timer;
  int passed = 0, failed = 0;
  std::string first_witness;
  try {
    for (const auto& name : suites) {
      auto rep = gis::run_suite(name, order);
      passed += rep.passed;
      failed += rep.failed;
      if (first_witness.empty())
        for (const auto& c : rep.checks)
          if (c.status == "fail") {
            first_witness = c.subject + ": " + c.witness;
            break;
          }
    }
  } catch (const std::exception& e) {
    ++failed;
    first_witness = e.what();
  }
  double secs = timer.seconds();
  bool ok = failed == 0;
  std::string detail = std::to_string(passed) + " checks";
  if (!first_witness.empty()) detail += "; " + first_witness;
  if (time_budget > 0.0 && secs > time_budget) {
    ok = false;
    detail += "; over the " + std::to_string(static_cast<int>(time_budget)) +
              "s budget";
  }
  report(number, title, ok, secs, detail);
}

// Criterion 5 adds the shipped Yamada fixture on top of the thm5.1 sweep.
bool fixture_theta_check(std::string* detail) {
  std::ifstream in(testutil::fixture("yamada5.json"));
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = nlohmann::json::parse(buf.str(), nullptr, true, true);
  auto t = gis::make_inverse(gis::parse_semigroup_json(doc.at("T").dump()));
  auto x = gis::parse_presheaf_json(doc.at("X").dump());
  auto y = gis::parse_presheaf_json(doc.at("Y").dump());
  auto ys = gis::build_yamada(t, x, y);
  auto rep = gis::theta_iso_check(ys);
  if (!rep.iso || rep.tensor_classes != ys.sg.order) {
    *detail = "fixture yamada5: " + rep.counterexample;
    return false;
  }
  return true;
}

void criterion5() {
  Timer timer;
  int passed = 0, failed = 0;
  std::string witness;
  try {
    auto rep = gis::run_suite("thm5.1", 5);
    passed = rep.passed;
    failed = rep.failed;
    for (const auto& c : rep.checks)
      if (c.status == "fail") {
        witness = c.subject + ": " + c.witness;
        break;
      }
    std::string fx;
    if (fixture_theta_check(&fx)) {
      ++passed;
    } else {
      ++failed;
      if (witness.empty()) witness = fx;
    }
  } catch (const std::exception& e) {
    ++failed;
    witness = e.what();
  }
  double secs = timer.seconds();
  bool ok = failed == 0;
  std::string detail = std::to_string(passed) + " checks";
  if (!witness.empty()) detail += "; " + witness;
  if (secs > 120.0) {
    ok = false;
    detail += "; over the 120s budget";
  }
  report(5, "theta isomorphism onto the Morita semigroup (order <= 5)", ok,
         secs, detail);
}

void criterion6() {
  Timer timer;
  bool ok = true;
  std::string detail = "fixed cases + all rho on |X| <= 3";
  try {
    auto rep = gis::run_suite("madhavan", 3);
    ok = rep.failed == 0;
    if (!ok)
      for (const auto& c : rep.checks)
        if (c.status == "fail") {
          detail = c.subject + ": " + c.witness;
          break;
        }
    // the two pinned cases from the criterion text, checked directly
    auto m_eq = gis::build_m_rho(2, gis::Partition::equality(2));
    auto m_full = gis::build_m_rho(2, gis::Partition::full(2));
    bool pinned =
        m_eq.sg.order == 7 && gis::classify(m_eq.sg).inverse &&
        gis::find_isomorphism(m_eq.sg, testutil::i2()).has_value() &&
        m_full.sg.order == 3 && gis::classify(m_full.sg).is_band &&
        gis::classify(m_full.sg).right_normal;
    if (!pinned) {
      ok = false;
      detail = "pinned M_rho cases on two points disagree";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(6, "Madhavan partial function semigroups", ok, timer.seconds(),
         detail);
}

void criterion8() {
  Timer timer;
  bool ok = true;
  std::string detail;
  try {
    for (int n = 1; n <= 3; ++n) {
      size_t fast = gis::enumerate_semigroups(n).size();
      size_t slow = gis::naive_enumerate(n).size();
      if (fast != slow) {
        ok = false;
        detail = "order " + std::to_string(n) + ": " + std::to_string(fast) +
                 " vs " + std::to_string(slow);
        break;
      }
    }
    if (ok) detail = "counts agree at orders 1..3";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(8, "pruned enumeration matches the naive oracle", ok,
         timer.seconds(), detail);
}

}  // namespace

int main() {
  suite_criterion(1, "presheaf/band round trips (right normal bands <= 5)",
                  {"thm2.1"}, 5, 60.0);
  suite_criterion(2, "band identity biconditionals (bands <= 4)",
                  {"prop1.1"}, 4);
  suite_criterion(3, "lambda/rho congruences and subdirect embedding "
                     "(order <= 5)",
                  {"prop1.2", "thm1.3"}, 5);
  suite_criterion(4, "free etale structure and kappa isomorphism "
                     "(order <= 5)",
                  {"prop4.2", "thm4.5", "prop4.6"}, 5);
  criterion5();
  criterion6();
  suite_criterion(7, "etale/presheaf action conversions and universal "
                     "property (carriers <= 12)",
                  {"prop3.2", "prop3.3"}, 5);
  criterion8();
  if (criteria_failed > 0) {
    std::cout << criteria_failed << " acceptance criteria failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
