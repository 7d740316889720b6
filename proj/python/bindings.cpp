#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordlat/bounds.hpp"
#include "ordlat/cli.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/textio.hpp"

namespace py = pybind11;
using namespace ordlat;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

Element to_element(const AlgebraSpec& alg, const py::handle& h) {
  if (py::isinstance<Element>(h)) return h.cast<Element>();
  if (py::isinstance<py::str>(h)) return parse_element(alg, h.cast<std::string>());
  std::vector<Rational> c;
  for (const auto& x : h) c.push_back(parse_rational(py::str(x).cast<std::string>()));
  return Element(alg, std::move(c));
}

ModuleLattice make_lattice(const AlgebraSpec& alg, const py::iterable& rows) {
  std::vector<Vector> basis;
  for (const auto& row : rows) {
    Vector v;
    for (const auto& e : row) v.push_back(to_element(alg, e));
    basis.push_back(std::move(v));
  }
  return ModuleLattice(alg, std::move(basis));
}

Vector to_vector(const AlgebraSpec& alg, const py::iterable& row) {
  Vector v;
  for (const auto& e : row) v.push_back(to_element(alg, e));
  return v;
}

py::dict reduction_dict(const ReductionReport& r) {
  py::dict d;
  d["kind"] = to_string(r.kind);
  d["lattice"] = r.basis;
  d["basis"] = r.basis.basis();
  d["ratios"] = fractions(r.ratios);
  d["verdict"] = r.verdict;
  py::list log;
  for (const auto& op : r.log) log.append(op.to_string());
  d["log"] = log;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ordlat, m) {
  m.doc() = "Exact reduction and enumeration for lattices over orders in division algebras";

  static py::exception<Error> base(m, "OrdlatError");
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  static py::exception<ScaleLimitExceeded> scale_exc(m, "ScaleLimitExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const ScaleLimitExceeded& e) {
      py::set_error(scale_exc, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<AlgebraSpec>(m, "Algebra")
      .def_property_readonly("name", &AlgebraSpec::name)
      .def_property_readonly("rank", &AlgebraSpec::rank)
      .def_property_readonly("n", &AlgebraSpec::n)
      .def_property_readonly("m", &AlgebraSpec::m)
      .def_property_readonly("disc", &AlgebraSpec::disc_abs)
      .def_property_readonly("euclidean_minimum", [](const AlgebraSpec& a) { return fraction(a.euclidean_minimum()); })
      .def_property_readonly("torsion_units", &AlgebraSpec::torsion_units)
      .def("one", &AlgebraSpec::one)
      .def("zero", &AlgebraSpec::zero)
      .def("element", [](const AlgebraSpec& a, const py::object& x) { return to_element(a, x); })
      .def("__repr__", [](const AlgebraSpec& a) { return "Algebra('" + a.name() + "')"; });

  m.def("algebra", &AlgebraSpec::by_name, py::return_value_policy::reference, py::arg("name"));
  m.def("catalog", [] {
    py::list out;
    for (const auto* a : AlgebraSpec::catalog()) out.append(py::cast(a, py::return_value_policy::reference));
    return out;
  });

  py::class_<Element>(m, "Element")
      .def_property_readonly("coords", [](const Element& e) { return fractions(e.coords()); })
      .def_property_readonly("algebra", &Element::algebra, py::return_value_policy::reference)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("conj", [](const Element& e) { return conj(e); })
      .def("nrd", [](const Element& e) { return fraction(reduced_norm(e)); })
      .def("trd", [](const Element& e) { return fraction(reduced_trace(e)); })
      .def("is_unit", [](const Element& e) { return is_unit(e); })
      .def("__str__", [](const Element& e) { return to_string(e); })
      .def("__repr__", [](const Element& e) { return "Element(" + to_string(e) + ")"; });

  m.def("euclidean_divide", [](const Element& a, const Element& b) {
    DivResult r = euclidean_divide(a, b);
    return py::make_tuple(r.q, r.r);
  });
  m.def("right_gcd", [](const Element& a, const Element& b) { return right_gcd(a, b); });

  py::class_<AlphaForm>(m, "Form")
      .def_static("trace", &AlphaForm::trace, py::arg("alpha"))
      .def_static("trace_one", &AlphaForm::trace_one, py::arg("algebra"))
      .def_static("plain", &AlphaForm::plain, py::arg("algebra"))
      .def_property_readonly("is_plain", &AlphaForm::is_plain)
      .def("__repr__", [](const AlphaForm& f) { return "Form(" + f.describe() + ", " + to_string(f.alpha()) + ")"; });

  py::class_<ModuleLattice>(m, "Lattice")
      .def(py::init([](const AlgebraSpec& a, const py::iterable& r) { return make_lattice(a, r); }), py::arg("algebra"),
           py::arg("rows"))
      .def_property_readonly("rank", &ModuleLattice::rank)
      .def_property_readonly("ambient", &ModuleLattice::ambient)
      .def_property_readonly("algebra", &ModuleLattice::algebra, py::return_value_policy::reference)
      .def_property_readonly("basis", [](const ModuleLattice& l) { return l.basis(); })
      .def("contains", [](const ModuleLattice& l, const py::iterable& v) { return l.contains(to_vector(l.algebra(), v)); })
      .def("__repr__", [](const ModuleLattice& l) {
        return "Lattice(" + l.algebra().name() + ", d=" + std::to_string(l.rank()) + ", D=" + std::to_string(l.ambient()) + ")";
      });

  m.def("identity_lattice", &identity_lattice);
  m.def("tightness_lattice", &tightness_lattice);
  m.def("same_lattice", &same_lattice);
  m.def("qnorm", [](const py::iterable& v, const AlphaForm& f) { return fraction(qnorm(to_vector(f.algebra(), v), f)); });
  m.def("det_alpha", [](const ModuleLattice& l, const AlphaForm& f) { return fraction(det_alpha(l, f)); });
  m.def("dual", [](const ModuleLattice& l, const AlphaForm& f) { return dual_alpha(l, f).lattice; });

  m.def("shortest_vector", [](const ModuleLattice& l, const AlphaForm& f) {
    LatticeVector v = shortest_vector(l, f);
    return py::make_tuple(fraction(v.norm), v.vec, v.coeffs);
  });
  m.def("closest_vector", [](const ModuleLattice& l, const AlphaForm& f, const py::iterable& t) {
    LatticeVector v = closest_vector(l, f, to_vector(l.algebra(), t));
    return py::make_tuple(fraction(v.norm), v.vec);
  });
  m.def("nearest_plane", [](const ModuleLattice& l, const AlphaForm& f, const py::iterable& t) {
    PlaneResult p = nearest_plane(l, f, to_vector(l.algebra(), t));
    return py::make_tuple(fraction(p.vector.norm), p.vector.vec);
  });
  m.def("successive_minima", [](const ModuleLattice& l, const AlphaForm& f) { return fractions(successive_minima(l, f).lambdas_sq); });
  m.def("minkowski_reduce", [](const ModuleLattice& l, const AlphaForm& f) { return reduction_dict(minkowski_reduce(l, f)); });
  m.def("hkz_reduce", [](const ModuleLattice& l, const AlphaForm& f) { return reduction_dict(hkz_reduce(l, f)); });
  m.def("bkz_reduce", [](const ModuleLattice& l, const AlphaForm& f, int beta) { return reduction_dict(bkz_reduce(l, f, beta)); });
  m.def("is_minkowski_reduced", &is_minkowski_reduced);
  m.def("is_hkz_reduced", &is_hkz_reduced);
  m.def("is_bkz_reduced", &is_bkz_reduced);

  m.def("rho", [](const AlphaForm& f) { return rho(f).to_string(); });
  m.def("minkowski_delta_sq", [](int k, const AlphaForm& f) { return minkowski_delta_sq(k, make_context(f)).to_string(); });
  m.def("hermite_invariant", [](const ModuleLattice& l, const AlphaForm& f) { return hermite_invariant(l, f).approx(); });

  m.def(
      "unit_reducibility_search",
      [](const AlgebraSpec& a, long v_bound, long x_norm_bound, long unit_bound) -> py::object {
        UnitSearchOptions o;
        o.v_bound = v_bound;
        o.x_norm_bound = x_norm_bound;
        o.unit_bound = unit_bound;
        UnitSearchResult r = unit_reducibility_search(a, o);
        if (!r.counterexample) return py::none();
        const Counterexample& c = *r.counterexample;
        py::dict d;
        d["v"] = c.v;
        d["x"] = c.x;
        d["trace_v"] = fraction(c.trace_v);
        d["trace_uvu"] = fraction(c.trace_up);
        d["trace_down"] = fraction(c.trace_down);
        d["trace_xvx"] = fraction(c.trace_x);
        d["nrd_x"] = fraction(c.nrd_x);
        return d;
      },
      py::arg("algebra"), py::arg("v_bound") = 10, py::arg("x_norm_bound") = 10, py::arg("unit_bound") = 6);

  m.def("format_lattice", &format_lattice);
  m.def("parse_lattice", [](const std::string& text) {
    LatticeFile f = parse_lattice(text);
    return py::make_tuple(f.lattice, f.form);
  });

  m.def(
      "run",
      [](const std::string& command, const py::dict& options) {
        RunConfig cfg;
        cfg.command = command;
        for (const auto& [k, v] : options) {
          std::string key = k.cast<std::string>();
          std::string val = py::str(v).cast<std::string>();
          if (key == "algebra" || key == "field") cfg.algebra = val;
          else if (key == "alpha") cfg.alpha = val;
          else if (key == "form") cfg.form = val;
          else if (key == "kind") cfg.kind = val;
          else if (key == "beta") cfg.beta = std::stoi(val);
          else if (key == "d") cfg.d = std::stoul(val);
          else if (key == "D") cfg.D = std::stoul(val);
          else if (key == "coeff_bound") cfg.coeff_bound = std::stol(val);
          else if (key == "seed") cfg.seed = std::stoull(val);
          else if (key == "count") cfg.count = std::stoul(val);
          else if (key == "limit") cfg.limit = std::stoul(val);
          else if (key == "in") cfg.in = val;
          else if (key == "target") cfg.target = val;
          else throw ParseError("unknown option '" + key + "'");
        }
        std::ostringstream report, summary;
        int code = run(cfg, report, summary);
        return py::make_tuple(code, report.str(), summary.str());
      },
      py::arg("command"), py::arg("options") = py::dict());
}
