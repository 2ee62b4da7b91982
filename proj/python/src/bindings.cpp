#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "coxpart/ball.hpp"
#include "coxpart/cache.hpp"
#include "coxpart/enumeration.hpp"
#include "coxpart/error.hpp"
#include "coxpart/graph.hpp"
#include "coxpart/partitions.hpp"
#include "coxpart/perm_a.hpp"
#include "coxpart/perm_b.hpp"

namespace py = pybind11;
using namespace coxpart;

namespace {

std::size_t d_r(const Ball& b, ElementId x) { return static_cast<std::size_t>(popcount(b.right_descents(x))); }

ElementId id_of(const Ball& b, const std::string& word) { return b.id_of_word(parse_word_labels(word, b.rank())); }

py::dict decomposition_a(const perm::DecompositionA& d) {
  py::dict out;
  out["left"] = d.left;
  out["right"] = d.right;
  out["w_left"] = d.w_left;
  out["u_left"] = d.u_left;
  out["v_left"] = d.v_left;
  out["w_right"] = d.w_right;
  out["u_right"] = d.u_right;
  out["v_right"] = d.v_right;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bipartitions and weak-order intervals of Coxeter groups";

  static py::exception<Error> error(m, "CoxpartError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("ENGINE_VERSION") = kEngineVersion;

  py::class_<Ball>(m, "Ball")
      .def(py::init([](const std::string& group, std::size_t radius, std::size_t element_cap) {
             return Ball::build(parse_graph(group), radius, element_cap);
           }),
           py::arg("group"), py::arg("radius"), py::arg("element_cap") = Ball::kDefaultElementCap,
           py::call_guard<py::gil_scoped_release>())
      .def_static(
          "cached",
          [](const std::string& group, std::size_t radius, std::optional<std::filesystem::path> cache_dir) {
            return cached_ball(parse_graph(group), radius, cache_dir);
          },
          py::arg("group"), py::arg("radius"), py::arg("cache_dir") = std::nullopt,
          py::call_guard<py::gil_scoped_release>())
      .def("__len__", &Ball::size)
      .def_property_readonly("radius", &Ball::radius)
      .def_property_readonly("rank", &Ball::rank)
      .def_property_readonly("graph", [](const Ball& b) { return b.graph().canonical(); })
      .def("id", &id_of, py::arg("word"))
      .def("word", py::overload_cast<const Ball&, ElementId>(&word_text), py::arg("id"))
      .def("length", [](const Ball& b, ElementId id) { return b.length(id); }, py::arg("id"))
      .def("right_descents", &d_r, py::arg("id"))
      .def("left_descents", [](const Ball& b, ElementId id) { return popcount(b.left_descents(id)); }, py::arg("id"))
      .def("bip_genfun", [](const Ball& b, unsigned workers) { return bip_genfun(b, workers).coeffs; },
           py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>())
      .def("pirr_genfun", [](const Ball& b, unsigned workers) { return pirr_genfun(b, workers).coeffs; },
           py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>())
      .def("growth_series", [](const Ball& b) { return growth_series(b).coeffs; })
      .def(
          "bipartitions",
          [](const Ball& b, ElementId w) {
            std::vector<std::tuple<ElementId, ElementId, bool>> out;
            for (const auto& x : bipartitions(b, w)) out.emplace_back(x.u, x.v, x.proper);
            return out;
          },
          py::arg("id"))
      .def("diameters", &diameters, py::arg("id"))
      .def("interval", [](const Ball& b, ElementId w) { return interval(b, w).members; }, py::arg("id"))
      .def("atoms", [](const Ball& b, ElementId w) { return atoms(b, interval(b, w)); }, py::arg("id"))
      .def("coatoms", [](const Ball& b, ElementId w) { return coatoms(b, interval(b, w)); }, py::arg("id"))
      .def("is_partition_irreducible", &is_partition_irreducible, py::arg("id"))
      .def(
          "verify",
          [](const Ball& b, int conjecture, unsigned workers) {
            py::gil_scoped_release release;
            return verify_conjecture(b, conjecture, workers).to_json(false);
          },
          py::arg("conjecture"), py::arg("workers") = 1);

  m.def("format_poly", [](const std::vector<std::uint64_t>& c) { return format_poly(GenPoly{c}); }, py::arg("coeffs"));

  auto perm = m.def_submodule("perm", "one-line and signed permutations");
  perm.def("invs", &perm::invs, py::arg("word"));
  perm.def("standardize", &perm::standardize, py::arg("word"));
  perm.def("descents", &perm::descents, py::arg("perm"));
  perm.def("dec", &perm::dec_A, py::arg("perm"));
  perm.def("bipartitions", &perm::bipartitions_A, py::arg("perm"));
  perm.def(
      "decompose",
      [](const perm::Perm& w, const perm::Perm& u, const perm::Perm& v) {
        return decomposition_a(perm::decompose_A(w, u, v));
      },
      py::arg("w"), py::arg("u"), py::arg("v"));

  auto signed_full = [](const perm::SignedPerm& s) { return s.full(); };
  auto as_signed = [](const std::vector<int>& letters) {
    return letters.size() % 2 == 0 && !letters.empty() && letters.front() == -letters.back()
               ? perm::SignedPerm::from_full(letters)
               : perm::SignedPerm(letters);
  };
  perm.def("invs_b", [=](const std::vector<int>& s) { return perm::invs_B(as_signed(s)); }, py::arg("signed"));
  perm.def(
      "descents_b", [=](const std::vector<int>& s) { return perm::descents_B(as_signed(s)); }, py::arg("signed"));
  perm.def(
      "parse_signed", [=](const std::string& text) { return signed_full(perm::parse_signed(text)); },
      py::arg("text"));
  perm.def(
      "bipartitions_b",
      [=](const std::vector<int>& s) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& [u, v] : perm::bipartitions_B(as_signed(s))) out.emplace_back(u.full(), v.full());
        return out;
      },
      py::arg("signed"));
  perm.def(
      "decompose_b",
      [=](const std::vector<int>& w, const std::vector<int>& u, const std::vector<int>& v) {
        const auto sw = as_signed(w), su = as_signed(u), sv = as_signed(v);
        py::dict out;
        if (perm::n_in_positive_position(sw)) {
          const auto d = perm::decompose_B(sw, su, sv);
          out["left"] = d.left;
          out["forgotten"] = d.forgotten;
          out["right"] = d.right;
          out["w_left"] = d.w_left.full();
          out["u_left"] = d.u_left.full();
          out["v_left"] = d.v_left.full();
          out["w_right"] = d.w_right;
          out["u_right"] = d.u_right;
          out["v_right"] = d.v_right;
        } else {
          const auto d = perm::decompose_B_negative(sw, su, sv);
          out["left"] = d.left;
          out["forgotten"] = d.forgotten;
          out["right"] = d.right;
          out["w_left"] = d.w_left;
          out["u_left"] = d.u_left;
          out["v_left"] = d.v_left;
          out["w_right"] = d.w_right.full();
          out["u_right"] = d.u_right.full();
          out["v_right"] = d.v_right.full();
        }
        return out;
      },
      py::arg("w"), py::arg("u"), py::arg("v"));
}
