// Command-line workbench for finite generalized inverse semigroups.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gis/classify.hpp"
#include "gis/congruence.hpp"
#include "gis/enumerate.hpp"
#include "gis/etale.hpp"
#include "gis/madhavan.hpp"
#include "gis/morita.hpp"
#include "gis/presheaf.hpp"
#include "gis/suite.hpp"
#include "gis/yamada.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gis::Error("FileError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json table_json(const gis::FiniteSemigroup& s) {
  ordered_json j;
  j["order"] = s.order;
  j["table"] = ordered_json::array();
  for (int a = 0; a < s.order; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < s.order; ++b) row.push_back(s.at(a, b));
    j["table"].push_back(row);
  }
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

ordered_json classification_json(const gis::Classification& c) {
  ordered_json j;
  j["regular"] = c.regular;
  j["orthodox"] = c.orthodox;
  j["inverse"] = c.inverse;
  j["band"] = c.is_band;
  j["normal"] = c.normal;
  j["left_normal"] = c.left_normal;
  j["right_normal"] = c.right_normal;
  j["left_regular"] = c.left_regular;
  j["right_regular"] = c.right_regular;
  j["generalized_inverse"] = c.generalized_inverse;
  j["left_generalized_inverse"] = c.left_generalized_inverse;
  j["right_generalized_inverse"] = c.right_generalized_inverse;
  return j;
}

int run_classify(const std::string& file, bool json) {
  auto s = gis::load_semigroup_file(file);
  auto c = gis::classify(s);
  if (json)
    std::cout << classification_json(c).dump(2) << "\n";
  else
    std::cout << c.describe() << "\n";
  return 0;
}

int run_green(const std::string& file, bool json) {
  auto s = gis::load_semigroup_file(file);
  auto g = gis::green(s);
  if (json) {
    ordered_json j;
    j["L"] = g.L.to_string();
    j["R"] = g.R.to_string();
    j["H"] = g.H.to_string();
    j["D"] = g.D.to_string();
    j["J"] = g.J.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "L: " << g.L.to_string() << "\n"
              << "R: " << g.R.to_string() << "\n"
              << "H: " << g.H.to_string() << "\n"
              << "D: " << g.D.to_string() << "\n"
              << "J: " << g.J.to_string() << "\n";
  }
  return 0;
}

int run_quotient(const std::string& rel, const std::string& file, bool json) {
  auto s = gis::load_semigroup_file(file);
  gis::Congruence c;
  if (rel == "gamma") c = gis::gamma(s);
  else {
    auto [lam, rho] = gis::lambda_rho(s);
    c = rel == "lambda" ? lam : rho;
  }
  auto [q, proj] = gis::quotient(s, c);
  if (json) {
    ordered_json j;
    j["relation"] = rel;
    j["classes"] = gis::congruence_to_string(c);
    j["projection"] = proj;
    j["quotient"] = table_json(q);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classes: " << gis::congruence_to_string(c) << "\n"
              << gis::write_sgp(q);
  }
  return 0;
}

// {"T": semigroup, "X": presheaf} -> right Yamada T * X
// {"T": semigroup, "X": presheaf, "Y": presheaf} -> full Yamada triples
int run_yamada_build(const std::string& file, bool json) {
  auto doc = nlohmann::json::parse(slurp(file), nullptr, true, true);
  auto t = gis::make_inverse(gis::parse_semigroup_json(doc.at("T").dump()));
  auto x = gis::parse_presheaf_json(doc.at("X").dump());
  if (doc.contains("Y")) {
    auto y = gis::parse_presheaf_json(doc.at("Y").dump());
    auto ys = gis::build_yamada(t, x, y);
    std::vector<std::string> legend;
    for (auto& [xv, tv, yv] : ys.elems)
      legend.push_back("(" + std::to_string(xv) + "," + std::to_string(tv) +
                       "," + std::to_string(yv) + ")");
    if (json) {
      ordered_json j = table_json(ys.sg);
      j["elements"] = legend;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << gis::write_sgp(ys.sg);
      for (size_t i = 0; i < legend.size(); ++i)
        std::cout << "# " << i << " = " << legend[i] << "\n";
    }
    return 0;
  }
  auto ry = gis::build_right_yamada(t, x);
  std::vector<std::string> legend;
  for (auto& [tv, xv] : ry.elems)
    legend.push_back("(" + std::to_string(tv) + "," + std::to_string(xv) +
                     ")");
  if (json) {
    ordered_json j = table_json(ry.sg);
    j["elements"] = legend;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gis::write_sgp(ry.sg);
    for (size_t i = 0; i < legend.size(); ++i)
      std::cout << "# " << i << " = " << legend[i] << "\n";
  }
  return 0;
}

int run_yamada_decompose(const std::string& file, bool json) {
  auto s = gis::load_semigroup_file(file);
  auto cls = gis::classify(s);
  if (cls.right_generalized_inverse) {
    auto k = gis::kappa_decompose(s);
    if (json) {
      ordered_json j;
      j["kind"] = "right";
      j["T"] = table_json(k.t.s);
      j["fibers"] = k.yam.sheaf.fibers();
      j["kappa"] = k.kappa;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "T = S/gamma:\n" << gis::write_sgp(k.t.s) << "kappa:";
      for (int v : k.kappa) std::cout << ' ' << v;
      std::cout << "\n";
    }
    return 0;
  }
  auto form = gis::yamada_form(s);
  if (json) {
    ordered_json j;
    j["kind"] = "full";
    j["T"] = table_json(form.ys.t.s);
    j["X_fibers"] = form.ys.x.fibers();
    j["Y_fibers"] = form.ys.y.fibers();
    j["iso"] = form.iso;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "T = S/gamma:\n" << gis::write_sgp(form.ys.t.s) << "iso:";
    for (int v : form.iso) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

int run_tensor_verify(const std::string& file, bool json) {
  auto doc = nlohmann::json::parse(slurp(file), nullptr, true, true);
  auto t = gis::make_inverse(gis::parse_semigroup_json(doc.at("T").dump()));
  auto x = gis::parse_presheaf_json(doc.at("X").dump());
  auto y = gis::parse_presheaf_json(doc.at("Y").dump());
  auto ys = gis::build_yamada(t, x, y);
  auto ctx = gis::morita_context(ys);
  auto rep = gis::theta_iso_check(ys);
  if (json) {
    ordered_json j;
    j["yamada_order"] = ys.sg.order;
    j["tensor_classes"] = rep.tensor_classes;
    j["theta_iso"] = rep.iso;
    if (!rep.iso) j["counterexample"] = rep.counterexample;
    ordered_json reps = ordered_json::array();
    for (auto& [q, p] : ctx.ten.rep) reps.push_back({q, p});
    j["class_representatives"] = reps;
    j["product"] = table_json(ctx.product);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "yamada order: " << ys.sg.order
              << "\ntensor classes: " << rep.tensor_classes
              << "\ntheta iso: " << (rep.iso ? "yes" : "no") << "\n";
    if (!rep.iso) std::cout << "counterexample: " << rep.counterexample
                            << "\n";
  }
  return rep.iso ? 0 : 1;
}

int run_madhavan(int size, const std::string& partition, bool json) {
  gis::Partition rho = partition.empty()
                           ? gis::Partition::equality(size)
                           : gis::parse_class_list(partition, size);
  auto m = gis::build_m_rho(size, rho);
  if (json) {
    ordered_json j = table_json(m.sg);
    j["rho"] = rho.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gis::write_sgp(m.sg)
              << "# composition ab applies a first\n";
    for (size_t i = 0; i < m.elems.size(); ++i)
      std::cout << "# " << i << " = " << m.elems[i].to_string() << "\n";
  }
  return 0;
}

int run_enumerate(int order, const std::string& klass, bool json) {
  bool bands_only = klass == "band" || klass == "right_normal_band";
  auto keep = [&](const gis::FiniteSemigroup& s) {
    if (klass.empty()) return true;
    auto c = gis::classify(s);
    if (klass == "band") return c.is_band;
    if (klass == "right_normal_band") return c.is_band && c.right_normal;
    if (klass == "inverse") return c.inverse;
    if (klass == "gi") return c.generalized_inverse;
    if (klass == "rgi") return c.right_generalized_inverse;
    if (klass == "lgi") return c.left_generalized_inverse;
    throw gis::Error("UnknownClass", "no class filter named '" + klass + "'");
  };
  auto members = gis::enumerate_filtered(order, keep, bands_only);
  if (json) {
    ordered_json j;
    j["order"] = order;
    j["class"] = klass;
    j["count"] = members.size();
    j["members"] = ordered_json::array();
    for (const auto& s : members) j["members"].push_back(table_json(s));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << members.size() << " semigroup(s) of order " << order;
    if (!klass.empty()) std::cout << " in class " << klass;
    std::cout << ", up to isomorphism\n";
  }
  return 0;
}

int run_suite_cmd(const std::string& name, int order, bool json) {
  auto rep = gis::run_suite(name, order);
  if (json)
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.suite << ": " << rep.passed << " passed, " << rep.failed
              << " failed, " << rep.skipped << " skipped\n";
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite generalized inverse semigroups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, rel = "gamma", partition, klass, suite_name;
  int size = 2, order = 3;

  auto* c_classify = app.add_subcommand("classify", "band-variety flags");
  c_classify->add_option("file", file)->required();

  auto* c_green = app.add_subcommand("green", "Green's relations");
  c_green->add_option("file", file)->required();

  auto* c_quot = app.add_subcommand("quotient", "congruence quotient");
  c_quot->add_option("--rel", rel)
      ->check(CLI::IsMember({"gamma", "lambda", "rho"}));
  c_quot->add_option("file", file)->required();

  auto* c_yam = app.add_subcommand("yamada", "Yamada constructions");
  c_yam->require_subcommand(1);
  auto* c_build = c_yam->add_subcommand("build", "from {T, X[, Y]} JSON");
  c_build->add_option("file", file)->required();
  auto* c_dec = c_yam->add_subcommand("decompose", "into Yamada coordinates");
  c_dec->add_option("file", file)->required();

  auto* c_tensor = app.add_subcommand("tensor", "tensor products");
  c_tensor->require_subcommand(1);
  auto* c_verify =
      c_tensor->add_subcommand("verify", "theta iso from {T, X, Y} JSON");
  c_verify->add_option("file", file)->required();

  auto* c_mad = app.add_subcommand("madhavan", "M_rho(X) build");
  c_mad->add_option("--size", size, "|X|")->required();
  c_mad->add_option("--partition", partition,
                    "rho as 0-based classes, e.g. \"0 1 | 2\"");

  auto* c_enum = app.add_subcommand("enumerate", "corpus enumeration");
  c_enum->add_option("--order", order)->required();
  c_enum->add_option("--class", klass,
                     "band, right_normal_band, inverse, gi, rgi or lgi");

  auto* c_suite = app.add_subcommand("suite", "property suites");
  c_suite->add_option("name", suite_name)->required();
  c_suite->add_option("--order", order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_classify) return run_classify(file, json);
    if (*c_green) return run_green(file, json);
    if (*c_quot) return run_quotient(rel, file, json);
    if (*c_build) return run_yamada_build(file, json);
    if (*c_dec) return run_yamada_decompose(file, json);
    if (*c_verify) return run_tensor_verify(file, json);
    if (*c_mad) return run_madhavan(size, partition, json);
    if (*c_enum) return run_enumerate(order, klass, json);
    if (*c_suite) return run_suite_cmd(suite_name, order, json);
  } catch (const gis::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JsonError: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
