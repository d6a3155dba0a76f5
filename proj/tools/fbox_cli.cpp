// Command-line front end: depths, boxplots and the Monte-Carlo study.

#include "fbox/boxplot.hpp"
#include "fbox/experiments.hpp"
#include "fbox/io.hpp"
#include "fbox/svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fbox;

constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

struct DepthFlags {
    std::string depth = "infimal";
    std::string base = "halfspace";
    std::string refine = "none";
    std::string weights;
};

void add_depth_flags(CLI::App* cmd, DepthFlags& f) {
    cmd->add_option("--depth", f.depth, "Functional depth")
        ->check(CLI::IsMember({"integrated", "infimal", "band", "mbd"}))
        ->capture_default_str();
    cmd->add_option("--base", f.base, "One-dimensional depth")
        ->check(CLI::IsMember({"halfspace", "simplicial"}))
        ->capture_default_str();
    cmd->add_option("--refine", f.refine, "Tie-breaking refinement")
        ->check(CLI::IsMember({"none", "erl", "area"}))
        ->capture_default_str();
    cmd->add_option("--weights", f.weights, "JSON file with grid weights {\"weights\": [...]}");
}

Dataset load(const std::string& input, const DepthFlags& f) {
    std::optional<std::vector<double>> w;
    if (!f.weights.empty()) {
        w = read_weights_json(f.weights);
    }
    return read_dataset_csv(input, w);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    fn(out);
}

std::size_t resolve_threads(std::size_t flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char* env = std::getenv("FBOX_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        throw ValidationError("FBOX_THREADS must be a positive integer");
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Functional depths and depth-based functional boxplots"};
    app.require_subcommand(1);

    // depth
    DepthFlags depth_flags;
    std::string depth_input, depth_out;
    auto* depth_cmd = app.add_subcommand("depth", "Depth, rank and refinement score of every function");
    depth_cmd->add_option("input", depth_input, "Dataset CSV (t,f1,...,fn)")->required();
    add_depth_flags(depth_cmd, depth_flags);
    depth_cmd->add_option("--out", depth_out, "Output CSV (default stdout)");

    // boxplot
    DepthFlags box_flags;
    std::string box_input, out_svg, out_json, style_file, anchor = "median", whisker_style = "band";
    double tau = 0.5, factor = 4.0;
    auto* box_cmd = app.add_subcommand("boxplot", "Functional boxplot with outlier detection");
    box_cmd->add_option("input", box_input, "Dataset CSV (t,f1,...,fn)")->required();
    add_depth_flags(box_cmd, box_flags);
    box_cmd->add_option("--tau", tau, "Central region fraction")->capture_default_str();
    box_cmd->add_option("--factor", factor, "Whisker inflation factor")->capture_default_str();
    box_cmd->add_option("--anchor", anchor, "Inflate around the median or the band midline (fence rule)")
        ->check(CLI::IsMember({"median", "midline", "fence"}))
        ->capture_default_str();
    box_cmd->add_option("--whiskers", whisker_style, "Draw the inflated band or the envelope of curves inside it")
        ->check(CLI::IsMember({"band", "envelope"}))
        ->capture_default_str();
    box_cmd->add_option("--style", style_file, "key=value styling file");
    box_cmd->add_option("--out-svg", out_svg, "SVG figure");
    box_cmd->add_option("--out-json", out_json, "JSON report (default stdout when no SVG is requested)");

    // simulate
    std::vector<std::size_t> sim_ns;
    std::vector<double> sim_logh;
    std::vector<std::string> sim_variants;
    std::optional<std::size_t> sim_runs, sim_ntest, sim_grid;
    std::uint64_t sim_seed = ExperimentConfig{}.seed;
    std::size_t sim_threads = 0;
    std::string profile = "desk", sim_out = "study", sim_anchor;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo study on Gaussian process samples");
    sim_cmd->add_option("--profile", profile, "desk or full")->check(CLI::IsMember({"desk", "full"}))->capture_default_str();
    sim_cmd->add_option("--n", sim_ns, "Sample sizes (overrides profile)");
    sim_cmd->add_option("--logh", sim_logh, "log bandwidths (overrides profile)");
    sim_cmd->add_option("--variants", sim_variants, "integrated, infimal, erl, area, mbd");
    sim_cmd->add_option("--runs", sim_runs, "Runs per cell");
    sim_cmd->add_option("--n-test", sim_ntest, "Test sample size");
    sim_cmd->add_option("--grid", sim_grid, "Grid size");
    sim_cmd->add_option("--seed", sim_seed, "Base seed")->capture_default_str();
    sim_cmd->add_option("--anchor", sim_anchor, "Whisker anchor (default: the profile's)")
        ->check(CLI::IsMember({"median", "midline", "fence"}));
    sim_cmd->add_option("--threads", sim_threads, "Worker threads (default FBOX_THREADS or 1)");
    sim_cmd->add_option("--out", sim_out, "Output directory")->capture_default_str();

    // example
    std::uint64_t ex_seed = 1;
    std::string ex_out, ex_labels;
    auto* ex_cmd = app.add_subcommand("example", "Write the local/global outlier example dataset");
    ex_cmd->add_option("--seed", ex_seed, "Seed")->capture_default_str();
    ex_cmd->add_option("--out", ex_out, "Dataset CSV (default stdout)");
    ex_cmd->add_option("--labels", ex_labels, "CSV with the label of every function");

    // witness
    std::size_t wit_support = 3, wit_den = 4;
    auto* wit_cmd = app.add_subcommand("md-witness", "Search small lattice distributions violating the median "
                                                     "condition for simplicial depth");
    wit_cmd->add_option("--support", wit_support, "Lattice size (<= 5)")->capture_default_str();
    wit_cmd->add_option("--denominator", wit_den, "Weights are multiples of 1/denominator")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*depth_cmd) {
            const auto kind = parse_functional_depth(depth_flags.depth);
            const auto refine = parse_refinement(depth_flags.refine);
            if (kind == FunctionalDepth::band && refine != Refinement::none) {
                throw ValidationError("band depth cannot be combined with --refine");
            }
            const Dataset data = load(depth_input, depth_flags);
            if (refine != Refinement::none && data.sample.size() < 2) {
                throw ValidationError("refinements need at least 2 functions");
            }
            const auto ranking = rank_sample(data.sample, kind, parse_univariate_depth(depth_flags.base), refine);
            with_output(depth_out, [&](std::ostream& os) { write_depth_csv(os, ranking); });
        } else if (*box_cmd) {
            BoxplotOptions opt;
            opt.depth = parse_functional_depth(box_flags.depth);
            opt.base = parse_univariate_depth(box_flags.base);
            opt.refinement = parse_refinement(box_flags.refine);
            opt.tau = tau;
            opt.factor = factor;
            opt.anchor = parse_whisker_anchor(anchor);
            opt.validate();
            PlotStyle style;
            if (!style_file.empty()) {
                apply_style_file(style, style_file);
            }
            style.whiskers = whisker_style == "envelope" ? WhiskerStyle::envelope : WhiskerStyle::band;
            const Dataset data = load(box_input, box_flags);
            const Boxplot bp = build_boxplot(data.sample, opt);
            if (!out_svg.empty()) {
                with_output(out_svg, [&](std::ostream& os) { os << render_boxplot_svg(data.sample, bp, style, data.coordinates); });
            }
            if (!out_json.empty() || out_svg.empty()) {
                with_output(out_json, [&](std::ostream& os) { write_boxplot_json(os, bp); });
            }
        } else if (*sim_cmd) {
            ExperimentConfig cfg = profile == "full" ? ExperimentConfig::full() : ExperimentConfig::desk();
            if (!sim_ns.empty()) {
                cfg.ns = sim_ns;
            }
            if (!sim_logh.empty()) {
                cfg.log_hs = sim_logh;
            }
            if (!sim_variants.empty()) {
                cfg.variants.clear();
                for (const auto& v : sim_variants) {
                    cfg.variants.push_back(parse_variant(v));
                }
            }
            if (sim_runs) {
                cfg.runs = *sim_runs;
            }
            if (sim_ntest) {
                cfg.n_test = *sim_ntest;
            }
            if (sim_grid) {
                cfg.grid_size = *sim_grid;
            }
            if (!sim_anchor.empty()) {
                cfg.anchor = parse_whisker_anchor(sim_anchor);
            }
            cfg.seed = sim_seed;
            cfg.threads = resolve_threads(sim_threads);
            cfg.validate();

            const auto start = std::chrono::steady_clock::now();
            const ExperimentReport report = run_table_study(cfg);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

            std::filesystem::create_directories(sim_out);
            const std::filesystem::path dir(sim_out);
            with_output((dir / "report.csv").string(), [&](std::ostream& os) { write_report_csv(os, report); });
            with_output((dir / "report.json").string(), [&](std::ostream& os) { write_report_json(os, report); });
            with_output((dir / "tables.txt").string(), [&](std::ostream& os) { write_report_tables(os, report); });
            write_report_tables(std::cout, report);
            std::cerr << "study finished in " << format_number(elapsed.count()) << " s, results in " << sim_out << '\n';
        } else if (*ex_cmd) {
            const LabeledSample ex = generate_motivating_example(ex_seed);
            with_output(ex_out, [&](std::ostream& os) { write_dataset_csv(os, ex.sample); });
            if (!ex_labels.empty()) {
                with_output(ex_labels, [&](std::ostream& os) {
                    os << "index,label\n";
                    for (std::size_t i = 0; i < ex.labels.size(); ++i) {
                        os << i << ',' << to_string(ex.labels[i]) << '\n';
                    }
                });
            }
        } else if (*wit_cmd) {
            const auto w = find_simplicial_md_witness(wit_support, wit_den);
            if (!w) {
                std::cout << "no witness\n";
            } else {
                std::cout << "witness:";
                for (double v : *w) {
                    std::cout << ' ' << format_number(v);
                }
                std::cout << '\n';
            }
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return 0;
}
