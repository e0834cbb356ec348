#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "cyclecert/enumerative.hpp"
#include "cyclecert/injectivity.hpp"
#include "cyclecert/strata_g1.hpp"
#include "cyclecert/twisted.hpp"

namespace py = pybind11;
namespace cc = cyclecert;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

py::object parse_json(const std::string& text) { return json_to_py(nlohmann::json::parse(text)); }

cc::SystemSource source_from(const std::string& s) {
  if (s == "displayed") return cc::SystemSource::DisplayedEquations;
  if (s == "table") return cc::SystemSource::TableDerived;
  throw std::invalid_argument("source must be 'displayed' or 'table'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification toolkit: divisor-class kernels, enumerative degrees, "
            "genus-1 strata and twisted canonical divisors";

  m.def(
      "theta_degree",
      [](int g, const std::vector<std::int64_t>& mult) {
        return py::cast(cc::theta_degree(g, mult).str());
      },
      py::arg("g"), py::arg("multipliers"),
      "g! times the product of squared multipliers, as a decimal string");

  m.def(
      "verify_injectivity",
      [](int g, int n, const std::string& source) {
        return parse_json(cc::certificate_json(cc::verify_injectivity(g, n, source_from(source))));
      },
      py::arg("g"), py::arg("n"), py::arg("source") = "displayed",
      "kernel certificate for the boundary-class system, as a dict");

  m.def(
      "diff_systems",
      [](int g, int n) { return parse_json(cc::diff_report_json(cc::diff_systems(g, n))); },
      py::arg("g"), py::arg("n"),
      "per-coefficient comparison of the displayed and table-derived rows");

  m.def(
      "fiber_count",
      [](std::int64_t p, const std::vector<std::int64_t>& f, std::int64_t d1, std::int64_t d2,
         std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, int k) {
        cc::FiberOracle oracle({p, f}, d1, d2);
        return oracle.fiber_count(cc::TargetSpec::pair(ax, ay, bx, by), k);
      },
      py::arg("p"), py::arg("f"), py::arg("d1"), py::arg("d2"), py::arg("ax"), py::arg("ay"),
      py::arg("bx"), py::arg("by"), py::arg("k"),
      "rational fiber count over d1*[A-inf]+d2*[B-inf] at extension degree k");

  m.def(
      "verify_finite_degree",
      [](std::int64_t p, const std::vector<std::int64_t>& f, std::int64_t d1, std::int64_t d2,
         int samples, int kmax, std::uint64_t seed, int jobs) {
        return parse_json(
            cc::fiber_report_json(cc::verify_finite_degree({p, f}, d1, d2, samples, kmax, seed, jobs)));
      },
      py::arg("p"), py::arg("f"), py::arg("d1"), py::arg("d2"), py::arg("samples") = 12,
      py::arg("kmax") = 4, py::arg("seed") = 20240915ull, py::arg("jobs") = 1);

  m.def(
      "ec_division_count",
      [](std::int64_t p, int k, std::int64_t a, std::int64_t b, std::int64_t d) {
        cc::EllipticCurve e = cc::EllipticCurve::over({p, a, b}, k);
        return cc::ec_division_count(e, d, cc::ECPoint::at_infinity());
      },
      py::arg("p"), py::arg("k"), py::arg("a"), py::arg("b"), py::arg("d"),
      "number of points P with d*P = O on y^2 = x^3 + ax + b over F_{p^k}");

  m.def(
      "count_x",
      [](std::int64_t p, int k, std::int64_t a, std::int64_t b,
         const std::vector<std::vector<std::int64_t>>& signatures) {
        std::vector<cc::Signature> sigs(signatures.begin(), signatures.end());
        int n = static_cast<int>(sigs.at(0).size()) + static_cast<int>(sigs.size()) - 1;
        cc::StrataQuery q = cc::StrataQuery::make(n, sigs);
        cc::EllipticCurve e = cc::EllipticCurve::over({p, a, b}, k);
        return cc::count_x(e, q);
      },
      py::arg("p"), py::arg("k"), py::arg("a"), py::arg("b"), py::arg("signatures"),
      "exact number of marked tuples satisfying every stratum condition");

  m.def(
      "check_twisted_graph",
      [](const std::string& json_text) {
        cc::TwistInput in = cc::twist_input_from_json(json_text);
        cc::TwistReport rep = cc::run_twist_checks(
            in.graph, in.has_levels ? &in.levels : nullptr,
            in.has_residues ? &in.residues : nullptr, in.has_poles ? &in.poles : nullptr);
        return parse_json(cc::twist_report_json(rep));
      },
      py::arg("graph_json"),
      "axiom, level-order and residue-condition verdicts for a dual graph");
}
