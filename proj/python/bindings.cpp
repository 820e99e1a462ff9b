// Thin bindings: structured values cross the boundary as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cquiver/alpha.hpp"
#include "cquiver/binomial.hpp"
#include "cquiver/equivariant.hpp"
#include "cquiver/ext.hpp"
#include "cquiver/interval.hpp"
#include "cquiver/io.hpp"

namespace py = pybind11;
using namespace cquiver;

namespace {

DiscreteInterval lattice_interval(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi) {
  return DiscreteInterval(lo.value_or(DiscreteInterval::kNegInf),
                          hi.value_or(DiscreteInterval::kPosInf));
}

template <typename T>
std::vector<std::string> dump_all(const std::vector<T>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& x : items) out.push_back(to_json(x).dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_cquiver, m) {
  m.doc() = "Rigid interval representations of periodic type-A quivers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FiberAnomaly>(m, "FiberAnomaly", PyExc_RuntimeError);

  m.def("interval_ext",
        [](std::optional<std::int64_t> ilo, std::optional<std::int64_t> ihi,
           std::optional<std::int64_t> jlo, std::optional<std::int64_t> jhi) {
          return interval_ext(lattice_interval(ilo, ihi), lattice_interval(jlo, jhi));
        });
  m.def("hom_ext_dims", [](const std::string& a, const std::string& b) {
    const auto he = hom_ext_dims(rep_from_json(parse_json(a)), rep_from_json(parse_json(b)));
    return std::make_pair(he.hom, he.ext);
  });
  m.def("is_compatible", [](const std::string& a, const std::string& b) {
    return is_compatible(interval_from_json(parse_json(a)), interval_from_json(parse_json(b)));
  });

  m.def("enumerate_maximal_rigid",
        [](int period, int jobs) {
          std::vector<OrbitSet> sets;
          {
            py::gil_scoped_release release;
            sets = enumerate_maximal_rigid(period, jobs);
          }
          return dump_all(sets);
        },
        py::arg("period"), py::arg("jobs") = 1);
  m.def("equivariant_count_formula", [](int period) { return equivariant_count_formula(period).str(); });
  m.def("star", [](const std::string& s) { return to_json(star(orbit_set_from_json(parse_json(s)))).dump(); });
  m.def("fold_to_cyclic", [](const std::string& s, int p) {
    return to_json(fold_to_cyclic(orbit_set_from_json(parse_json(s)), p)).dump();
  });

  m.def("enumerate_alpha",
        [](int n, int jobs) {
          std::vector<AlphaRep> reps;
          {
            py::gil_scoped_release release;
            reps = enumerate_alpha(n, jobs);
          }
          return dump_all(reps);
        },
        py::arg("n"), py::arg("jobs") = 1);
  m.def("count_alpha",
        [](int n, const std::string& mode, int jobs) {
          if (mode != "formula" && mode != "enumerate") {
            throw std::invalid_argument("mode must be 'formula' or 'enumerate'");
          }
          py::gil_scoped_release release;
          return count_alpha(n, mode == "formula" ? CountMode::Formula : CountMode::Enumerate, jobs)
              .str();
        },
        py::arg("n"), py::arg("mode") = "formula", py::arg("jobs") = 1);
  m.def("check_alpha", [](const std::string& text) {
    const auto rep = alpha_rep_from_json(parse_json(text));
    const auto v = validate_type_alpha(rep);
    py::dict out;
    out["valid"] = v.ok;
    out["violation"] = v.ok ? py::none() : py::cast(v.violation);
    out["gap"] = v.gap ? py::cast(*v.gap) : py::none();
    out["rigid"] = v.ok ? py::cast(alpha_is_rigid(rep)) : py::none();
    return out;
  });
  m.def("tau", [](const std::string& text) {
    return to_json(tau(alpha_rep_from_json(parse_json(text)))).dump();
  });
}
