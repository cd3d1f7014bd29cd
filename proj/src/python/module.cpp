#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gis/classify.hpp"
#include "gis/congruence.hpp"
#include "gis/enumerate.hpp"
#include "gis/madhavan.hpp"
#include "gis/morita.hpp"
#include "gis/presheaf.hpp"
#include "gis/suite.hpp"
#include "gis/yamada.hpp"

namespace py = pybind11;

namespace {

py::dict classification_dict(const gis::Classification& c) {
  py::dict d;
  d["regular"] = c.regular;
  d["orthodox"] = c.orthodox;
  d["inverse"] = c.inverse;
  d["is_band"] = c.is_band;
  d["normal"] = c.normal;
  d["left_normal"] = c.left_normal;
  d["right_normal"] = c.right_normal;
  d["left_regular"] = c.left_regular;
  d["right_regular"] = c.right_regular;
  d["generalized_inverse"] = c.generalized_inverse;
  d["left_generalized_inverse"] = c.left_generalized_inverse;
  d["right_generalized_inverse"] = c.right_generalized_inverse;
  d["description"] = c.describe();
  return d;
}

py::dict presheaf_dict(const gis::Presheaf& p) {
  py::dict d;
  d["base"] = gis::MeetSemilattice(p.base).as_semigroup().rows();
  d["fiber_of"] = p.fiber_of;
  py::dict rest;
  for (const auto& [key, img] : p.rest)
    rest[py::str(std::to_string(key.first) + ">" +
                 std::to_string(key.second))] = img;
  d["restrictions"] = rest;
  return d;
}

gis::Congruence named_congruence(const gis::FiniteSemigroup& s,
                                 const std::string& rel) {
  if (rel == "gamma") return gis::gamma(s);
  auto [lam, rho] = gis::lambda_rho(s);
  if (rel == "lambda") return lam;
  if (rel == "rho") return rho;
  throw gis::Error("ParseError", "unknown relation '" + rel +
                                     "' (expected gamma, lambda or rho)");
}

}  // namespace

PYBIND11_MODULE(_gis, m) {
  m.doc() = "generalized inverse semigroup workbench core";

  static py::exception<gis::Error> gis_error(m, "GisError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gis::Error& e) {
      gis_error((e.name() + ": " + e.what()).c_str());
    }
  });

  py::class_<gis::FiniteSemigroup>(m, "Semigroup")
      .def(py::init([](const std::vector<std::vector<int>>& rows,
                       std::vector<std::string> labels) {
             return gis::validate(rows, std::move(labels));
           }),
           py::arg("rows"), py::arg("labels") = std::vector<std::string>{})
      .def_readonly("order", &gis::FiniteSemigroup::order)
      .def_readonly("labels", &gis::FiniteSemigroup::labels)
      .def("rows", &gis::FiniteSemigroup::rows)
      .def("at",
           [](const gis::FiniteSemigroup& s, int a, int b) {
             if (a < 0 || b < 0 || a >= s.order || b >= s.order)
               throw py::index_error("element id out of range");
             return s.at(a, b);
           })
      .def("__len__",
           [](const gis::FiniteSemigroup& s) { return s.order; })
      .def("__repr__", [](const gis::FiniteSemigroup& s) {
        return "<Semigroup of order " + std::to_string(s.order) + ">";
      });

  m.def("classify",
        [](const gis::FiniteSemigroup& s) {
          return classification_dict(gis::classify(s));
        },
        py::arg("s"));

  m.def("green",
        [](const gis::FiniteSemigroup& s) {
          auto g = gis::green(s);
          py::dict d;
          d["L"] = g.L.classes();
          d["R"] = g.R.classes();
          d["H"] = g.H.classes();
          d["D"] = g.D.classes();
          d["J"] = g.J.classes();
          return d;
        },
        py::arg("s"));

  m.def("idempotents", &gis::idempotents, py::arg("s"));
  m.def("inverses_of", &gis::inverses_of, py::arg("s"), py::arg("a"));

  m.def("natural_order",
        [](const gis::FiniteSemigroup& s) {
          auto o = gis::natural_order(s);
          std::vector<std::vector<bool>> rows(
              o.order, std::vector<bool>(o.order));
          for (int a = 0; a < o.order; ++a)
            for (int b = 0; b < o.order; ++b) rows[a][b] = o.leq(a, b);
          return rows;
        },
        py::arg("s"));

  m.def("congruence_classes",
        [](const gis::FiniteSemigroup& s, const std::string& rel) {
          return named_congruence(s, rel).partition.classes();
        },
        py::arg("s"), py::arg("rel"));

  m.def("quotient",
        [](const gis::FiniteSemigroup& s, const std::string& rel) {
          return gis::quotient(s, named_congruence(s, rel));
        },
        py::arg("s"), py::arg("rel"),
        "Quotient by gamma, lambda or rho; returns (semigroup, projection).");

  m.def("subdirect_embed",
        [](const gis::FiniteSemigroup& s) {
          auto e = gis::subdirect_embed(s);
          py::dict d;
          d["left_quotient"] = e.left_quotient;
          d["right_quotient"] = e.right_quotient;
          d["product"] = e.product;
          d["map"] = e.map;
          return d;
        },
        py::arg("s"));

  m.def("band_to_presheaf",
        [](const gis::FiniteSemigroup& b) {
          return presheaf_dict(gis::band_to_presheaf(b));
        },
        py::arg("band"));

  m.def("roundtrip_band",
        [](const gis::FiniteSemigroup& b) {
          auto r = gis::roundtrip_band(b);
          return py::make_tuple(r.ok, r.counterexample);
        },
        py::arg("band"));

  m.def("kappa_decompose",
        [](const gis::FiniteSemigroup& s) {
          auto k = gis::kappa_decompose(s);
          py::dict d;
          d["gamma_quotient"] = k.t.s;
          d["presheaf"] = presheaf_dict(k.sheaf);
          d["yamada"] = k.yam.sg;
          d["kappa"] = k.kappa;
          return d;
        },
        py::arg("s"));

  m.def("yamada_form",
        [](const gis::FiniteSemigroup& s) {
          auto form = gis::yamada_form(s);
          auto rep = gis::theta_iso_check(form.ys);
          py::dict d;
          d["yamada"] = form.ys.sg;
          d["iso"] = form.iso;
          d["actor"] = form.ys.t.s;
          d["theta_iso"] = rep.iso;
          d["tensor_classes"] = rep.tensor_classes;
          return d;
        },
        py::arg("s"));

  m.def("build_m_rho",
        [](int x_size, const std::vector<int>& class_of) {
          auto m_rho = gis::build_m_rho(
              x_size, gis::Partition::from_class_of(class_of));
          std::vector<std::string> names;
          for (const auto& f : m_rho.elems) names.push_back(f.to_string());
          return py::make_tuple(m_rho.sg, names);
        },
        py::arg("x_size"), py::arg("class_of"));

  m.def("enumerate_semigroups",
        [](int order, bool bands_only) {
          return gis::enumerate_semigroups(order, bands_only);
        },
        py::arg("order"), py::arg("bands_only") = false);

  m.def("find_embedding", &gis::find_embedding, py::arg("a"), py::arg("b"));
  m.def("find_isomorphism", &gis::find_isomorphism, py::arg("a"),
        py::arg("b"));

  m.def("suite_names", [] { return gis::suite_names(); });
  m.def("run_suite_json",
        [](const std::string& name, int max_order) {
          return gis::run_suite(name, max_order).to_json();
        },
        py::arg("name"), py::arg("max_order") = 4);

  m.def("parse_sgp", &gis::parse_sgp, py::arg("text"));
  m.def("write_sgp", &gis::write_sgp, py::arg("s"));
  m.def("load_semigroup", &gis::load_semigroup_file, py::arg("path"));
}
