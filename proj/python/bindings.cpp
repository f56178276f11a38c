// Python bindings for the baseline evaluation core.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bleval/aggregate.hpp"
#include "bleval/coverage.hpp"
#include "bleval/geometry.hpp"
#include "bleval/ingest.hpp"
#include "bleval/model.hpp"
#include "bleval/page_metrics.hpp"
#include "bleval/perturb.hpp"
#include "bleval/tolerance.hpp"

namespace py = pybind11;
using namespace bleval;

namespace {

std::string point_repr(const Point& p) {
    std::ostringstream out;
    out << "Point(" << p.x << ", " << p.y << ")";
    return out.str();
}

std::string chain_repr(const PolyChain& c) {
    std::ostringstream out;
    out << "PolyChain(" << c.size() << " vertices, (" << c.front().x << ", "
        << c.front().y << ") .. (" << c.back().x << ", " << c.back().y << "))";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_bleval, m) {
    m.doc() = "Tolerance-aware R/P/F evaluation of baseline detection results";

    py::class_<Point>(m, "Point")
        .def(py::init<int, int>(), py::arg("x"), py::arg("y"))
        .def(py::init([](std::pair<int, int> xy) {
                 return Point{xy.first, xy.second};
             }),
             py::arg("xy"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def(py::self == py::self)
        .def("__repr__", &point_repr);
    py::implicitly_convertible<py::tuple, Point>();

    py::class_<PolyChain>(m, "PolyChain")
        .def(py::init<std::vector<Point>>(), py::arg("points"))
        .def_property_readonly("vertices", &PolyChain::vertices)
        .def("__len__", &PolyChain::size)
        .def(py::self == py::self)
        .def("__repr__", &chain_repr);

    py::class_<Page>(m, "Page")
        .def(py::init<>())
        .def(py::init([](std::vector<PolyChain> gt, std::vector<PolyChain> hyp,
                         std::string id) {
                 return Page{std::move(gt), std::move(hyp), std::move(id)};
             }),
             py::arg("gt_chains"), py::arg("hyp_chains"), py::arg("id") = "")
        .def_readwrite("gt_chains", &Page::gt_chains)
        .def_readwrite("hyp_chains", &Page::hyp_chains)
        .def_readwrite("id", &Page::id);

    py::class_<EvalConfig>(m, "EvalConfig")
        .def(py::init<>())
        .def_readwrite("tolerance_fraction", &EvalConfig::tolerance_fraction)
        .def_readwrite("default_distance", &EvalConfig::default_distance)
        .def_readwrite("fixed_tolerance", &EvalConfig::fixed_tolerance)
        .def_readwrite("transition_factor", &EvalConfig::transition_factor)
        .def("validate", &EvalConfig::validate);

    py::class_<ToleranceSet>(m, "ToleranceSet")
        .def(py::init<>())
        .def_readwrite("values", &ToleranceSet::values)
        .def_readwrite("inter_line_mean", &ToleranceSet::inter_line_mean);

    py::class_<AlignedPair>(m, "AlignedPair")
        .def_readonly("gt_index", &AlignedPair::gt_index)
        .def_readonly("hyp_index", &AlignedPair::hyp_index)
        .def_readonly("coverage", &AlignedPair::coverage);

    py::class_<PageEval>(m, "PageEval")
        .def_readonly("id", &PageEval::id)
        .def_readonly("r_value", &PageEval::r_value)
        .def_readonly("p_value", &PageEval::p_value)
        .def_readonly("f_value", &PageEval::f_value)
        .def_readonly("gt_count", &PageEval::gt_count)
        .def_readonly("hyp_count", &PageEval::hyp_count)
        .def_readonly("alignment", &PageEval::alignment)
        .def_readonly("per_gt_coverage", &PageEval::per_gt_coverage);

    py::class_<Orientation>(m, "Orientation")
        .def(py::init([](double alpha) { return Orientation{alpha}; }),
             py::arg("alpha"))
        .def_readonly("alpha", &Orientation::alpha);

    py::class_<CorpusEval>(m, "CorpusEval")
        .def_readonly("pages", &CorpusEval::pages)
        .def_readonly("mean_r", &CorpusEval::mean_r)
        .def_readonly("mean_p", &CorpusEval::mean_p)
        .def_readonly("f_of_means", &CorpusEval::f_of_means)
        .def_readonly("mean_f", &CorpusEval::mean_f)
        .def_readonly("total_gt", &CorpusEval::total_gt)
        .def_readonly("total_hyp", &CorpusEval::total_hyp)
        .def_readwrite("config", &CorpusEval::config);

    py::class_<ParseStats>(m, "ParseStats")
        .def(py::init<>())
        .def_readonly("textlines_without_baseline",
                      &ParseStats::textlines_without_baseline);

    m.def("make_chain", &make_chain, py::arg("raw_points"));
    m.def("normalize_chain", &normalize_chain, py::arg("chain"));
    m.def("estimate_orientation", &estimate_orientation, py::arg("chain"));

    m.def("eligible_vertices", &eligible_vertices, py::arg("g"),
          py::arg("others"), py::arg("alpha"));
    m.def("min_distance", &min_distance, py::arg("g"), py::arg("eligible"),
          py::arg("alpha"));
    m.def("compute_tolerances", &compute_tolerances, py::arg("gt"),
          py::arg("config") = EvalConfig{});

    m.def("cov", &cov, py::arg("p"), py::arg("q"), py::arg("t"),
          py::arg("transition_factor") = 3.0);
    m.def("cov_s", &cov_s, py::arg("p"), py::arg("chain_set"), py::arg("t"),
          py::arg("transition_factor") = 3.0);

    m.def("r_value",
          py::overload_cast<const std::vector<PolyChain>&,
                            const std::vector<PolyChain>&, const ToleranceSet&,
                            double>(&r_value),
          py::arg("gt"), py::arg("hyp"), py::arg("tol"),
          py::arg("transition_factor") = 3.0);
    m.def("coverage_matrix", &coverage_matrix, py::arg("gt"), py::arg("hyp"),
          py::arg("tol"), py::arg("transition_factor") = 3.0);
    m.def("greedy_align", &greedy_align, py::arg("matrix"));
    m.def("p_value", &p_value, py::arg("alignment"), py::arg("hyp_count"));
    m.def("f_value", &f_value, py::arg("r"), py::arg("p"));
    m.def("evaluate_page", &evaluate_page, py::arg("page"),
          py::arg("config") = EvalConfig{});

    m.def("aggregate", &aggregate, py::arg("pages"));
    m.def("to_json_report", &to_json_report, py::arg("corpus"));
    m.def("to_csv_report", &to_csv_report, py::arg("corpus"));
    m.def("write_reports", &write_reports, py::arg("corpus"),
          py::arg("json_path"), py::arg("csv_path"));

    m.def(
        "parse_page_xml",
        [](const std::string& text) { return parse_page_xml(text); },
        py::arg("document_text"));
    m.def(
        "parse_plain",
        [](const std::string& text) { return parse_plain(text); },
        py::arg("document_text"));
    m.def("to_plain", &to_plain, py::arg("chains"));

    m.def("split_chain", &split_chain, py::arg("chain"), py::arg("fraction"));
    m.def("jitter_chain", &jitter_chain, py::arg("chain"), py::arg("amplitude"),
          py::arg("seed"));
    m.def("merge_chains", &merge_chains, py::arg("a"), py::arg("b"));

#ifdef BLEVAL_VERSION
    m.attr("__version__") = BLEVAL_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
