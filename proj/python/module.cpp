#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syndetica/induced.hpp"
#include "syndetica/io.hpp"
#include "syndetica/largeness.hpp"
#include "syndetica/return_set.hpp"
#include "syndetica/symbolic.hpp"
#include "syndetica/systems.hpp"
#include "syndetica/verify.hpp"
#include "syndetica/window.hpp"

namespace py = pybind11;
using namespace syndetica;

namespace {

py::object optional_to_py(const std::optional<std::int64_t>& v) {
    if (!v) return py::none();
    return py::int_(*v);
}

}  // namespace

PYBIND11_MODULE(_syndetica, m) {
    m.doc() = "exact finite-window workbench for integer-set largeness, "
              "polynomial return sets, and subshift constructions";

    py::register_exception<insufficient_window_error>(m, "InsufficientWindowError");
    py::register_exception<coverage_error>(m, "CoverageError");

    py::class_<Interval>(m, "Interval")
        .def(py::init<std::int64_t, std::int64_t>())
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("span", &Interval::span);

    py::class_<Box>(m, "Box")
        .def(py::init<std::int64_t, std::int64_t, std::int64_t, std::int64_t>())
        .def_readonly("mlo", &Box::mlo)
        .def_readonly("mhi", &Box::mhi)
        .def_readonly("nlo", &Box::nlo)
        .def_readonly("nhi", &Box::nhi)
        .def("area", &Box::area);

    py::class_<Window1D>(m, "Window1D")
        .def(py::init<std::int64_t, std::int64_t>())
        .def_static("full", &Window1D::full)
        .def_static("from_elements", &Window1D::from_elements)
        .def_static("from_predicate",
                    [](std::int64_t lo, std::int64_t hi,
                       const std::function<bool(std::int64_t)>& pred) {
                        return Window1D::from_predicate(lo, hi, pred);
                    })
        .def("lo", &Window1D::lo)
        .def("hi", &Window1D::hi)
        .def("span", &Window1D::span)
        .def("contains", &Window1D::contains)
        .def("set", &Window1D::set, py::arg("n"), py::arg("value") = true)
        .def("count", &Window1D::count)
        .def("elements", &Window1D::elements)
        .def("shifted", &Window1D::shifted)
        .def("restricted", &Window1D::restricted)
        .def("complemented", &Window1D::complemented)
        .def("__eq__", [](const Window1D& a, const Window1D& b) { return a == b; })
        .def("__len__", &Window1D::count)
        .def("to_json", [](const Window1D& w) { return io::to_json(w).dump(); });

    m.def("union_of", &union_of);
    m.def("intersect", &intersect);
    m.def("minus", &minus);

    py::class_<Window2D>(m, "Window2D")
        .def(py::init<Box>())
        .def_static("full", &Window2D::full)
        .def("box", &Window2D::box)
        .def("contains", &Window2D::contains)
        .def("set", &Window2D::set, py::arg("m"), py::arg("n"),
             py::arg("value") = true)
        .def("count", &Window2D::count)
        .def("elements", &Window2D::elements)
        .def("__eq__", [](const Window2D& a, const Window2D& b) { return a == b; })
        .def("to_json", [](const Window2D& w) { return io::to_json(w).dump(); })
        .def("to_pbm", [](const Window2D& w) { return py::bytes(io::to_pbm(w)); });

    py::class_<IntPoly>(m, "IntPoly")
        .def(py::init<std::vector<std::int64_t>>())
        .def("eval", &IntPoly::eval)
        .def("degree", &IntPoly::degree)
        .def("__str__", &IntPoly::to_string);

    py::class_<PolyFamily>(m, "PolyFamily")
        .def(py::init<std::vector<IntPoly>>())
        .def_static("parse", &io::parse_poly_family)
        .def_static("linear", &PolyFamily::linear)
        .def("d", &PolyFamily::d)
        .def("__str__", &PolyFamily::to_string);

    m.def("parse_poly", &io::parse_poly);

    // largeness
    m.def("syndetic_gap", [](const Window1D& s, std::int64_t lo, std::int64_t hi) {
        return optional_to_py(syndetic_gap(s, {lo, hi}));
    });
    m.def("run_starts", &run_starts);
    py::class_<TsProfile>(m, "TsProfile")
        .def_readonly("n_max", &TsProfile::n_max)
        .def("gap_for",
             [](const TsProfile& p, std::int64_t n) {
                 return optional_to_py(p.gap_for(n));
             })
        .def("all_finite", &TsProfile::all_finite);
    m.def("thickly_syndetic_profile",
          [](const Window1D& s, std::int64_t n_max, std::int64_t lo,
             std::int64_t hi) {
              return thickly_syndetic_profile(s, n_max, {lo, hi});
          });
    m.def("piecewise_syndetic_witness",
          [](const Window1D& s, std::int64_t gap, std::int64_t stretch) {
              return optional_to_py(piecewise_syndetic_witness(s, gap, stretch));
          });
    m.def("syndetic_gap_2d", [](const Window2D& s, const Box& core) {
        return optional_to_py(syndetic_gap_2d(s, core));
    });
    m.def("block_starts", &block_starts);

    // generation and return sets
    py::class_<TsSchedule>(m, "TsSchedule")
        .def(py::init<std::vector<std::int64_t>>())
        .def_static("geometric", &TsSchedule::geometric)
        .def_static("default_schedule", &TsSchedule::default_schedule)
        .def("periods", &TsSchedule::periods)
        .def("member", &TsSchedule::member)
        .def("__str__", &TsSchedule::to_string);
    m.def("ts_generate", &ts_generate);
    m.def("required_base_window", &required_base_window);
    m.def("return_set", &return_set);
    m.def("return_set_harness",
          [](const TsSchedule& sched, const PolyFamily& polys, const Box& box,
             std::int64_t m_max, std::int64_t n_max) {
              return io::to_json(
                         return_set_harness(sched, polys, box, m_max, n_max))
                  .dump();
          });

    // symbolic dynamics
    py::class_<Word>(m, "Word")
        .def_static("parse", &Word::from_string)
        .def_static("zeros", &Word::zeros)
        .def("__len__", [](const Word& w) { return w.size(); })
        .def("__str__", &Word::to_string)
        .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
        .def("concat", &Word::concat)
        .def("repeated", &Word::repeated);

    py::enum_<Sidedness>(m, "Sidedness")
        .value("one_sided", Sidedness::one_sided)
        .value("two_sided", Sidedness::two_sided);

    py::class_<SeqWindow>(m, "SeqWindow")
        .def_static("parse", &SeqWindow::from_string, py::arg("text"),
                    py::arg("side"), py::arg("lo"))
        .def_static("constant", &SeqWindow::constant)
        .def("lo", &SeqWindow::lo)
        .def("hi", &SeqWindow::hi)
        .def("at", &SeqWindow::at)
        .def("shifted", &SeqWindow::shifted)
        .def("restricted", &SeqWindow::restricted)
        .def("slice", &SeqWindow::slice)
        .def("__str__", &SeqWindow::to_string);

    m.def("occurrences", &occurrences);
    py::class_<MetricValue>(m, "MetricValue")
        .def_property_readonly("exact", &MetricValue::exact)
        .def_property_readonly("first_diff",
                               [](const MetricValue& v) {
                                   return optional_to_py(v.first_diff);
                               })
        .def_readonly("agreement_radius", &MetricValue::agreement_radius)
        .def("value", &MetricValue::value);
    m.def("metric", &metric);
    m.def("hitting_offsets", &hitting_offsets);
    m.def("language", [](const SeqWindow& s, std::int64_t k) {
        std::vector<std::string> out;
        for (const Word& w : language(s, k)) out.push_back(w.to_string());
        return out;
    });
    m.def("multiple_recurrence_scan", &multiple_recurrence_scan);

    // constructions
    m.def("bebutov_indicator", &bebutov_indicator);
    m.def("squares_indicator", &squares_indicator);
    py::class_<BlockHierarchy>(m, "BlockHierarchy")
        .def_static("build",
                    [](std::int64_t depth) { return BlockHierarchy::build(depth); })
        .def("depth", &BlockHierarchy::depth)
        .def("level", &BlockHierarchy::level)
        .def("length", &BlockHierarchy::length)
        .def("gap_exponent", &BlockHierarchy::gap_exponent)
        .def("prefix", &BlockHierarchy::prefix);

    // induced system
    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<std::int64_t, std::int64_t>())
        .def_readonly("t_power", &GroupElement::t_power)
        .def_readonly("shift_power", &GroupElement::shift_power);

    py::class_<TruncPoint>(m, "TruncPoint")
        .def_static("poly_orbit", &TruncPoint::poly_orbit)
        .def_static("diagonal", &TruncPoint::diagonal)
        .def("arity", &TruncPoint::arity)
        .def("acted", &TruncPoint::acted)
        .def("sym", &TruncPoint::sym)
        .def("slot_window", &TruncPoint::slot_window)
        .def("agreement_radii", &TruncPoint::agreement_radii)
        .def("agrees_with", &TruncPoint::agrees_with)
        .def("same_truncation", &TruncPoint::same_truncation)
        .def("returns_at", &TruncPoint::returns_at);

    py::class_<BridgeResult>(m, "BridgeResult")
        .def_readonly("hitting", &BridgeResult::hitting)
        .def_readonly("returns", &BridgeResult::returns)
        .def_readonly("differing_cells", &BridgeResult::differing_cells)
        .def_readonly("equal", &BridgeResult::equal);
    m.def("bridge", &bridge);
    m.def("linear_shift_check", &linear_shift_check);

    py::enum_<RecurrenceVerdict>(m, "RecurrenceVerdict")
        .value("recurrent", RecurrenceVerdict::recurrent)
        .value("not_recurrent", RecurrenceVerdict::not_recurrent)
        .value("inconclusive", RecurrenceVerdict::inconclusive);
    py::class_<RecurrenceResult>(m, "RecurrenceResult")
        .def_readonly("verdict", &RecurrenceResult::verdict)
        .def_property_readonly("witness",
                               [](const RecurrenceResult& r) -> py::object {
                                   if (!r.witness) return py::none();
                                   return py::cast(*r.witness);
                               })
        .def_readonly("note", &RecurrenceResult::note);
    m.def("joint_recurrence_probe", &joint_recurrence_probe);

    py::class_<ConvergenceStep>(m, "ConvergenceStep")
        .def_readonly("radii", &ConvergenceStep::radii)
        .def_readonly("min_radius", &ConvergenceStep::min_radius)
        .def_readonly("center_radius", &ConvergenceStep::center_radius);
    m.def("convergence_probe", &convergence_probe);

    // acceptance suites
    m.def("run_criterion", [](int index, std::uint64_t seed) {
        const auto r = verify::run_criterion(index, seed);
        return verify::report_json("criterion", seed, {r}).dump();
    });
    m.def("run_suite", [](const std::string& suite, std::uint64_t seed) {
        return verify::report_json(suite, seed, verify::run_suite(suite, seed))
            .dump();
    });

    m.attr("__version__") = "1.0.0";
}
