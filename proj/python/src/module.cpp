#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "boxed_bertrand/arith.hpp"
#include "boxed_bertrand/chord_census.hpp"
#include "boxed_bertrand/continuum.hpp"
#include "boxed_bertrand/errors.hpp"
#include "boxed_bertrand/exact_geometry.hpp"
#include "boxed_bertrand/full_chord.hpp"
#include "boxed_bertrand/grid_circle.hpp"
#include "boxed_bertrand/lattice.hpp"

namespace py = pybind11;
namespace bb = boxed_bertrand;

namespace {

py::int_ to_py(bb::Count c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(bb::to_string(c).c_str(), nullptr, 10));
}

bb::CensusMode parse_mode(const std::string& mode) {
  if (mode == "fast") return bb::CensusMode::kFast;
  if (mode == "naive") return bb::CensusMode::kNaive;
  throw bb::InvalidArgument("mode must be 'fast' or 'naive'");
}

bb::ArcFilter parse_filter(const std::string& filter) {
  if (filter == "all") return bb::ArcFilter::kAll;
  if (filter == "vertical") return bb::ArcFilter::kVertical;
  if (filter == "horizontal") return bb::ArcFilter::kHorizontal;
  throw bb::InvalidArgument("filter must be 'all', 'vertical' or 'horizontal'");
}

py::dict census_dict(const bb::ChordCensus& c) {
  py::dict d;
  d["n"] = c.n;
  d["circle_size"] = c.circle_size;
  d["long_pairs"] = to_py(c.long_pairs);
  d["total_pairs"] = to_py(c.total_pairs);
  d["ratio"] = bb::to_string(c.ratio, 25);
  d["ratio_offdiag"] = bb::to_string(c.ratio_offdiag, 25);
  d["threshold"] = std::to_string(c.threshold.p()) + "/" + std::to_string(c.threshold.q());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact box-circle geometry and discrete Bertrand chord counts";

  auto invalid = py::register_exception<bb::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<bb::ResolutionMismatch>(m, "ResolutionMismatch", invalid.ptr());
  py::register_exception<bb::InvalidChord>(m, "InvalidChord", invalid.ptr());
  py::register_exception<bb::CapExceeded>(m, "CapExceeded", invalid.ptr());
  py::register_exception<bb::ToleranceUnreachable>(m, "ToleranceUnreachable", PyExc_RuntimeError);

  py::class_<bb::GridBox>(m, "GridBox")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t>(), py::arg("i"), py::arg("j"), py::arg("n"))
      .def_property_readonly("i", &bb::GridBox::i)
      .def_property_readonly("j", &bb::GridBox::j)
      .def_property_readonly("n", &bb::GridBox::n)
      .def("__eq__", [](const bb::GridBox& a, const bb::GridBox& b) { return a == b; })
      .def("__hash__", [](const bb::GridBox& b) { return std::hash<bb::GridBox>{}(b); })
      .def("__iter__", [](const bb::GridBox& b) { return py::iter(py::make_tuple(b.i(), b.j(), b.n())); })
      .def("__repr__", [](const bb::GridBox& b) {
        return "GridBox(" + std::to_string(b.i()) + ", " + std::to_string(b.j()) + ", " +
               std::to_string(b.n()) + ")";
      });

  py::class_<bb::Threshold>(m, "Threshold")
      .def(py::init<>())
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("p"), py::arg("q") = 1)
      .def_property_readonly("p", &bb::Threshold::p)
      .def_property_readonly("q", &bb::Threshold::q)
      .def("length", &bb::Threshold::length)
      .def_static("parse", &bb::parse_threshold);

  m.def("min_sq_dist_origin", [](const bb::GridBox& b) { return bb::min_sq_dist_origin(b).num; });
  m.def("max_sq_dist_origin", [](const bb::GridBox& b) { return bb::max_sq_dist_origin(b).num; });
  m.def("intersects_unit_circle", &bb::intersects_unit_circle);
  m.def("is_exceptional", &bb::is_exceptional);
  m.def("max_sq_gap", [](const bb::GridBox& a, const bb::GridBox& b) { return bb::max_sq_gap(a, b).num; });
  m.def("is_long_pair", &bb::is_long_pair, py::arg("a"), py::arg("b"), py::arg("threshold") = bb::Threshold());

  m.def("r2", &bb::r2, py::arg("m"));
  m.def("tau", &bb::tau, py::arg("m"));
  m.def("circle_size_formula", &bb::circle_size_formula, py::arg("n"));
  m.def("disc_count", &bb::disc_count, py::arg("n"));

  m.def(
      "enumerate_circle",
      [](std::int64_t n) {
        const auto ring = bb::enumerate_circle(n);
        py::list out;
        for (const auto& e : ring.entries()) {
          py::dict d;
          d["i"] = e.box.i();
          d["j"] = e.box.j();
          d["angle_entry"] = e.entry_angle;
          d["vertical"] = e.vertical;
          d["horizontal"] = e.horizontal;
          d["enters_at_vertex"] = e.enters_at_vertex;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("n"), "Boxes of C(n) in counter-clockwise order with their class flags.");

  m.def(
      "arc_count",
      [](std::int64_t n, double alpha, double beta, const std::string& filter) {
        return bb::arc_count(n, {alpha, beta}, parse_filter(filter));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("filter") = "all");

  m.def(
      "angular_histogram",
      [](std::int64_t n, std::size_t bins) {
        py::list out;
        for (const auto& b : bb::angular_histogram(bb::enumerate_circle(n), bins)) {
          out.append(py::dict(py::arg("bin") = b.bin, py::arg("lo") = b.lo, py::arg("hi") = b.hi,
                              py::arg("count") = b.count, py::arg("expected") = b.expected));
        }
        return out;
      },
      py::arg("n"), py::arg("bins"));

  m.def(
      "count_long_pairs",
      [](std::int64_t n, const bb::Threshold& t, const std::string& mode, unsigned threads) {
        const auto ring = bb::enumerate_circle(n);
        bb::CountOptions opts;
        opts.threads = threads;
        const bool fast = parse_mode(mode) == bb::CensusMode::kFast;
        bb::Count c = 0;
        {
          py::gil_scoped_release release;
          c = fast ? bb::count_long_pairs_fast(ring, t, opts) : bb::count_long_pairs_naive(ring, t, opts);
        }
        return to_py(c);
      },
      py::arg("n"), py::arg("threshold") = bb::Threshold(), py::arg("mode") = "fast", py::arg("threads") = 0);

  m.def(
      "bertrand_ratio",
      [](std::int64_t n, const bb::Threshold& t, const std::string& mode) {
        return census_dict(bb::bertrand_ratio(n, t, parse_mode(mode)));
      },
      py::arg("n"), py::arg("threshold") = bb::Threshold(), py::arg("mode") = "fast");

  m.def(
      "full_chord",
      [](const bb::GridBox& a, const bb::GridBox& b) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& c : bb::full_chord(a, b).boxes) out.emplace_back(c.i(), c.j());
        return out;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "count_distinct_full_chords",
      [](std::int64_t n, std::int64_t cap) {
        const auto c = bb::count_distinct_full_chords(n, cap);
        return py::dict(py::arg("n") = c.n, py::arg("distinct") = c.distinct,
                        py::arg("pairs") = c.unordered_pairs, py::arg("ratio") = c.ratio);
      },
      py::arg("n"), py::arg("cap") = bb::kDefaultFullChordCap);

  m.def("closed_form_target", [](int digits) { return bb::to_string(bb::closed_form_target(), digits); },
        py::arg("digits") = 30);
  m.def("constant_table", [] {
    py::dict out;
    for (const auto& c : bb::constant_table()) out[py::str(c.name)] = bb::to_string(c.value, 30);
    return out;
  });
  m.def("density_f", &bb::density_f, py::arg("phi"));

  m.def(
      "simulate_solution",
      [](int id, std::uint64_t samples, std::uint64_t seed, unsigned threads, double apex_angle) {
        bb::SimOptions opts;
        opts.threads = threads;
        opts.apex_angle = apex_angle;
        bb::SimEstimate est;
        {
          py::gil_scoped_release release;
          est = bb::simulate_solution(id, samples, seed, opts);
        }
        return py::dict(py::arg("id") = est.solution_id, py::arg("samples") = est.samples,
                        py::arg("seed") = est.seed, py::arg("hits") = est.hits,
                        py::arg("estimate") = est.estimate, py::arg("std_error") = est.std_error,
                        py::arg("rng") = est.rng);
      },
      py::arg("id"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0, py::arg("apex_angle") = 0.0);
  m.def("analytic_solution_value", &bb::analytic_solution_value, py::arg("id"));

  m.def(
      "referee_integral",
      [](double tol, int subdivisions) {
        const auto q = bb::referee_integral(tol, subdivisions);
        return py::dict(py::arg("value") = q.value, py::arg("error_estimate") = q.error_estimate,
                        py::arg("order") = q.order, py::arg("cells") = q.cells);
      },
      py::arg("tol") = 1e-10, py::arg("subdivisions") = 1);
  m.def(
      "antipodal_integral",
      [](const std::function<double(double)>& density, double tol) {
        const auto q = bb::antipodal_integral(density, tol);
        return py::dict(py::arg("value") = q.value, py::arg("error_estimate") = q.error_estimate,
                        py::arg("order") = q.order, py::arg("cells") = q.cells);
      },
      py::arg("density"), py::arg("tol") = 1e-10);
}
