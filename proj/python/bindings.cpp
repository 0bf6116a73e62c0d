#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcmquad/arith.hpp"
#include "lcmquad/constants.hpp"
#include "lcmquad/equidist.hpp"
#include "lcmquad/error.hpp"
#include "lcmquad/lcm.hpp"
#include "lcmquad/poly.hpp"

namespace py = pybind11;
using namespace lcmquad;

namespace {

QuadPoly to_poly(const py::object& obj) {
  if (py::isinstance<QuadPoly>(obj)) return obj.cast<QuadPoly>();
  if (py::isinstance<py::str>(obj)) return parse_poly(obj.cast<std::string>());
  auto t = obj.cast<std::tuple<i64, i64, i64>>();
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

SieveOptions options(unsigned workers) {
  SieveOptions o;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_lcmquad, m) {
  m.doc() = "lcm of consecutive values of quadratic polynomials";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<QuadPoly>(m, "QuadPoly")
      .def(py::init<i64, i64, i64>(), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("a", &QuadPoly::a)
      .def_property_readonly("b", &QuadPoly::b)
      .def_property_readonly("c", &QuadPoly::c)
      .def_property_readonly("discriminant", &QuadPoly::discriminant)
      .def("__call__", [](const QuadPoly& f, i64 x) { return static_cast<i64>(f(x)); })
      .def("__eq__", [](const QuadPoly& f, const QuadPoly& g) { return f == g; })
      .def("__repr__", [](const QuadPoly& f) { return "QuadPoly(" + f.to_string() + ")"; });

  py::class_<PolyProfile>(m, "PolyProfile")
      .def_readonly("D", &PolyProfile::D)
      .def_readonly("d", &PolyProfile::d)
      .def_readonly("sq", &PolyProfile::sq)
      .def_readonly("q", &PolyProfile::q)
      .def_readonly("lred", &PolyProfile::lred)
      .def_readonly("content", &PolyProfile::content)
      .def_readonly("shift", &PolyProfile::shift)
      .def_readonly("sign_flipped", &PolyProfile::sign_flipped)
      .def_property_readonly("klass", [](const PolyProfile& p) { return to_string(p.klass); })
      .def_property_readonly("irreducible", &PolyProfile::irreducible);

  py::class_<BfBreakdown>(m, "BfBreakdown")
      .def_readonly("C0", &BfBreakdown::C0)
      .def_readonly("Cd", &BfBreakdown::Cd)
      .def_readonly("Cf", &BfBreakdown::Cf)
      .def_readonly("B", &BfBreakdown::B)
      .def_readonly("d", &BfBreakdown::d)
      .def_readonly("q", &BfBreakdown::q)
      .def_property_readonly("max_tail_bound", &max_tail_bound)
      .def_property_readonly("terms", [](const BfBreakdown& b) {
        py::list out;
        for (const auto& t : b.terms) {
          out.append(py::make_tuple(t.series, t.index, t.value, t.tail_bound));
        }
        return out;
      });

  py::class_<LcmResult>(m, "LcmResult")
      .def_readonly("n", &LcmResult::n)
      .def_readonly("log_lcm", &LcmResult::log_lcm)
      .def_readonly("residual_count", &LcmResult::residual_count)
      .def_property_readonly("n_log_n", &LcmResult::n_log_n);

  py::class_<TSums>(m, "TSums")
      .def_readonly("T1", &TSums::T1)
      .def_readonly("T2", &TSums::T2)
      .def_readonly("prime_bound", &TSums::prime_bound);

  m.def("classify", [](const py::object& f) { return classify(to_poly(f)); }, py::arg("f"));
  m.def("B_f", [](const py::object& f) { return B_f(to_poly(f)); }, py::arg("f"));
  m.def(
      "log_lcm",
      [](const py::object& f, u64 n, unsigned workers) {
        const QuadPoly g = to_poly(f);
        py::gil_scoped_release release;
        return log_lcm(g, n, options(workers));
      },
      py::arg("f"), py::arg("n"), py::arg("workers") = 1);
  m.def(
      "log_lcm_ladder",
      [](const py::object& f, const std::vector<u64>& ns, unsigned workers) {
        const QuadPoly g = to_poly(f);
        py::gil_scoped_release release;
        return log_lcm_ladder(g, ns, options(workers));
      },
      py::arg("f"), py::arg("ns"), py::arg("workers") = 1);
  m.def(
      "beta_map",
      [](const py::object& f, u64 n) {
        const ExponentMap map = beta_map(to_poly(f), n);
        py::dict out;
        for (const auto& e : map.entries) out[py::int_(e.p)] = e.beta;
        for (u64 q : map.residual_primes) out[py::int_(q)] = 1;
        return out;
      },
      py::arg("f"), py::arg("n"), "prime -> exponent of L_n(f), residual primes included");
  m.def(
      "lcm_exact",
      [](const py::object& f, u64 n) {
        const auto r = lcm_bigint_oracle(to_poly(f), n);
        return py::int_(py::str(*r.exact_value));
      },
      py::arg("f"), py::arg("n"));
  m.def(
      "error_term",
      [](const py::object& f, u64 n, unsigned workers) {
        const QuadPoly g = to_poly(f);
        return error_term(g, n, B_f(g).B, options(workers));
      },
      py::arg("f"), py::arg("n"), py::arg("workers") = 1);
  m.def(
      "solution_count", [](const py::object& f, u64 p, int k) { return solution_count(to_poly(f), p, k); },
      py::arg("f"), py::arg("p"), py::arg("k"));
  m.def("kronecker", &kronecker, py::arg("d"), py::arg("m"));
  m.def("ap_constant", &ap_constant, py::arg("a"), py::arg("b"));
  m.def("reducible_constant", &reducible_constant, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("d"));
  m.def(
      "log_lcm_reducible",
      [](const py::object& f, u64 n) { return log_lcm_reducible(to_poly(f), n).log_lcm; },
      py::arg("f"), py::arg("n"));
  m.def(
      "root_samples",
      [](const py::object& f, u64 x, std::optional<std::pair<u64, u64>> progression) {
        std::optional<Progression> prog;
        if (progression) prog = Progression{progression->first, progression->second};
        py::list out;
        for (const auto& s : root_samples(to_poly(f), x, prog)) {
          out.append(py::make_tuple(s.p, s.nu, s.frac));
        }
        return out;
      },
      py::arg("f"), py::arg("x"), py::arg("progression") = py::none(),
      "list of (p, nu, nu / p)");
  m.def(
      "star_discrepancy", [](const std::vector<double>& fracs) { return star_discrepancy(fracs); },
      py::arg("fracs"));
  m.def(
      "t_sums", [](const py::object& f, u64 n) { return t_sums(to_poly(f), n); }, py::arg("f"),
      py::arg("n"));
  m.def(
      "pairing_check", [](const py::object& f, u64 x) { return pairing_check(to_poly(f), x); },
      py::arg("f"), py::arg("x"));
}
