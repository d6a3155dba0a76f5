// Python bindings. Samples are (n, m) float arrays: one row per function.

#include "fbox/boxplot.hpp"
#include "fbox/depth1d.hpp"
#include "fbox/experiments.hpp"
#include "fbox/fdepth.hpp"
#include "fbox/gpsim.hpp"
#include "fbox/ranking.hpp"
#include "fbox/svg.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

namespace py = pybind11;
using namespace fbox;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

FunctionalSample to_sample(const Array& values, const std::optional<std::vector<double>>& weights) {
    if (values.ndim() != 2) {
        throw ValidationError("expected a 2-d array (functions x grid points)");
    }
    const auto n = static_cast<std::size_t>(values.shape(0));
    const auto m = static_cast<std::size_t>(values.shape(1));
    std::vector<double> v(values.data(), values.data() + n * m);
    Grid g = Grid::equispaced(m);
    if (weights) {
        g = Grid(std::vector<double>(g.points().begin(), g.points().end()), *weights);
    }
    return FunctionalSample(std::move(g), n, std::move(v));
}

Array to_array(const FunctionalSample& s) {
    Array out({s.size(), s.points()});
    std::copy(s.values().begin(), s.values().end(), out.mutable_data());
    return out;
}

BoxplotOptions make_options(const std::string& depth, const std::string& base, const std::string& refine, double tau,
                            double factor, const std::string& anchor) {
    BoxplotOptions o;
    o.depth = parse_functional_depth(depth);
    o.base = parse_univariate_depth(base);
    o.refinement = parse_refinement(refine);
    o.tau = tau;
    o.factor = factor;
    o.anchor = parse_whisker_anchor(anchor);
    o.validate();
    return o;
}

py::dict band_dict(const Band& b) {
    py::dict d;
    d["lower"] = std::vector<double>(b.lower().begin(), b.lower().end());
    d["upper"] = std::vector<double>(b.upper().begin(), b.upper().end());
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Functional depths and depth-based functional boxplots";
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("halfspace_depth", [](double u, std::vector<double> q) { return halfspace_depth(u, UnivariateSample(std::move(q))); },
          py::arg("u"), py::arg("sample"));
    m.def("simplicial_depth", [](double u, std::vector<double> q) { return simplicial_depth(u, UnivariateSample(std::move(q))); },
          py::arg("u"), py::arg("sample"));

    m.def(
        "depths",
        [](const Array& values, const std::string& depth, const std::string& base,
           const std::optional<std::vector<double>>& weights) {
            return compute_depths(to_sample(values, weights), parse_functional_depth(depth), parse_univariate_depth(base))
                .values;
        },
        py::arg("values"), py::arg("depth") = "infimal", py::arg("base") = "halfspace", py::arg("weights") = py::none(),
        "Depth of every row within the sample.");

    m.def(
        "rank",
        [](const Array& values, const std::string& depth, const std::string& base, const std::string& refine) {
            const auto r = rank_sample(to_sample(values, std::nullopt), parse_functional_depth(depth),
                                       parse_univariate_depth(base), parse_refinement(refine));
            py::dict d;
            d["depth"] = r.depth.values;
            d["scores"] = r.scores;
            d["order"] = r.order;
            d["ranks"] = r.ranks;
            return d;
        },
        py::arg("values"), py::arg("depth") = "infimal", py::arg("base") = "halfspace", py::arg("refine") = "none",
        "Rows ordered deepest first, with 1-based ranks.");

    m.def(
        "boxplot",
        [](const Array& values, const std::string& depth, const std::string& base, const std::string& refine, double tau,
           double factor, const std::string& anchor) {
            const auto bp = build_boxplot(to_sample(values, std::nullopt), make_options(depth, base, refine, tau, factor, anchor));
            py::dict d;
            d["median_index"] = bp.median_index;
            d["central_indices"] = bp.central_indices;
            d["outliers"] = bp.outliers;
            d["outlyingness"] = bp.outlyingness;
            d["central"] = band_dict(bp.central);
            d["whiskers"] = band_dict(bp.whiskers);
            return d;
        },
        py::arg("values"), py::arg("depth") = "infimal", py::arg("base") = "halfspace", py::arg("refine") = "none",
        py::arg("tau") = 0.5, py::arg("factor") = 4.0, py::arg("anchor") = "median");

    m.def(
        "band_convexity_violations",
        [](const Array& values, const std::string& depth, const std::string& base, const std::string& refine, double tau) {
            return check_band_convexity(to_sample(values, std::nullopt), make_options(depth, base, refine, tau, 4.0, "median"));
        },
        py::arg("values"), py::arg("depth") = "infimal", py::arg("base") = "halfspace", py::arg("refine") = "none",
        py::arg("tau") = 0.5, "Rows shallower than every central row yet inside the central band.");

    m.def(
        "render_svg",
        [](const Array& values, const std::string& depth, const std::string& base, const std::string& refine, double tau,
           double factor) {
            const auto s = to_sample(values, std::nullopt);
            return render_boxplot_svg(s, build_boxplot(s, make_options(depth, base, refine, tau, factor, "median")));
        },
        py::arg("values"), py::arg("depth") = "infimal", py::arg("base") = "halfspace", py::arg("refine") = "none",
        py::arg("tau") = 0.5, py::arg("factor") = 4.0);

    m.def(
        "sample_gp",
        [](std::size_t n, double log_h, std::size_t grid_size, std::uint64_t seed) {
            return to_array(sample_gp(GPModel{std::exp(log_h), Grid::equispaced(grid_size)}, n, seed));
        },
        py::arg("n"), py::arg("log_h"), py::arg("grid_size") = 101, py::arg("seed") = 1);

    m.def(
        "motivating_example",
        [](std::uint64_t seed) {
            const auto ex = generate_motivating_example(seed);
            std::vector<std::string> labels;
            for (auto l : ex.labels) {
                labels.emplace_back(to_string(l));
            }
            return py::make_tuple(to_array(ex.sample), labels);
        },
        py::arg("seed") = 1, "Base curves, local outliers and global outliers with their labels.");

    m.def(
        "run_study",
        [](std::vector<std::size_t> ns, std::vector<double> log_hs, std::size_t runs, std::size_t n_test,
           std::size_t grid_size, std::uint64_t seed, std::size_t threads, const std::string& anchor) {
            ExperimentConfig cfg;
            cfg.ns = std::move(ns);
            cfg.log_hs = std::move(log_hs);
            cfg.runs = runs;
            cfg.n_test = n_test;
            cfg.grid_size = grid_size;
            cfg.seed = seed;
            cfg.threads = threads;
            cfg.anchor = parse_whisker_anchor(anchor);
            ExperimentReport rep;
            {
                py::gil_scoped_release release;
                rep = run_table_study(cfg);
            }
            py::list cells;
            for (const auto& c : rep.cells) {
                py::dict d;
                d["variant"] = c.variant;
                d["n"] = c.n;
                d["log_h"] = c.log_h;
                for (auto s : all_statistics) {
                    d[py::str(std::string(to_string(s)))] = py::make_tuple(c[s].mean, c[s].sd);
                }
                cells.append(d);
            }
            return cells;
        },
        py::arg("ns") = std::vector<std::size_t>{50, 500}, py::arg("log_hs") = std::vector<double>{-4, -2, 0, 2},
        py::arg("runs") = 50, py::arg("n_test") = 2000, py::arg("grid_size") = 101, py::arg("seed") = 20240601,
        py::arg("threads") = 1, py::arg("anchor") = "midline",
        "Monte-Carlo study; each cell maps statistic names to (mean, sd).");
}
