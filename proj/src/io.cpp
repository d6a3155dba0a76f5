#include "fbox/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace fbox {

using json = nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

double rounded(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    return std::stod(format_number(v));
}

json number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return rounded(v);
}

json numbers(std::span<const double> vs) {
    json arr = json::array();
    for (double v : vs) {
        arr.push_back(number(v));
    }
    return arr;
}

} // namespace

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    if (s == "-0") {
        s = "0";
    }
    return s;
}

Dataset read_dataset_csv(std::istream& in, const std::optional<std::vector<double>>& weights) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
        ++lineno;
        if (!trim(line).empty()) {
            break;
        }
    }
    if (trim(line).empty()) {
        throw ParseError("empty dataset file");
    }
    const auto header = split(line);
    if (header.size() < 2) {
        fail(lineno, "header needs a coordinate column and at least one function column");
    }
    for (std::size_t c = 1; c < header.size(); ++c) {
        names.emplace_back(header[c]);
    }
    const std::size_t n = names.size();

    std::vector<double> coords;
    std::vector<std::vector<double>> columns(n); // per function
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != n + 1) {
            fail(lineno, "expected " + std::to_string(n + 1) + " cells, found " + std::to_string(cells.size()));
        }
        const auto t = parse_double(cells[0]);
        if (!t || !std::isfinite(*t)) {
            fail(lineno, "coordinate '" + std::string(cells[0]) + "' is not a finite number");
        }
        if (!coords.empty() && !(coords.back() < *t)) {
            fail(lineno, "coordinate column not strictly increasing");
        }
        coords.push_back(*t);
        for (std::size_t c = 0; c < n; ++c) {
            const auto v = parse_double(cells[c + 1]);
            if (!v || !std::isfinite(*v)) {
                fail(lineno, "value '" + std::string(cells[c + 1]) + "' in column " + std::to_string(c + 2) +
                                 " is not a finite number");
            }
            columns[c].push_back(*v);
        }
    }
    if (coords.size() < 2) {
        throw ParseError("dataset needs at least 2 grid points");
    }

    const double lo = coords.front();
    const double span = coords.back() - lo;
    std::vector<double> pts(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) {
        pts[j] = (coords[j] - lo) / span;
    }
    pts.front() = 0.0;
    pts.back() = 1.0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
        if (!(pts[j - 1] < pts[j])) {
            throw ParseError("coordinates too close to map onto [0,1] distinctly");
        }
    }
    Grid grid = weights ? Grid(std::move(pts), *weights) : Grid(std::move(pts));
    FunctionalSample sample(std::move(grid), columns);
    return {std::move(sample), std::move(coords), std::move(names)};
}

Dataset read_dataset_csv(const std::string& path, const std::optional<std::vector<double>>& weights) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_dataset_csv(in, weights);
}

std::vector<double> read_weights_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    try {
        const json doc = json::parse(in);
        return doc.at("weights").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_dataset_csv(std::ostream& out, const FunctionalSample& sample, const std::vector<std::string>& names) {
    out << "t";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        out << ',' << (i < names.size() ? names[i] : "f" + std::to_string(i + 1));
    }
    out << '\n';
    const auto t = sample.grid().points();
    for (std::size_t j = 0; j < sample.points(); ++j) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", t[j]);
        out << buf;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", sample(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_depth_csv(std::ostream& out, const DepthRanking& ranking) {
    out << "index,depth,rank,refinement_score\n";
    for (std::size_t i = 0; i < ranking.depth.values.size(); ++i) {
        out << i << ',' << format_number(ranking.depth.values[i]) << ',' << format_number(ranking.ranks[i]) << ',';
        if (!ranking.scores.empty()) {
            out << format_number(ranking.scores[i]);
        }
        out << '\n';
    }
}

DepthRanking read_depth_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || trim(line) != "index,depth,rank,refinement_score") {
        fail(lineno, "unexpected depth CSV header");
    }
    DepthVector depth{FunctionalDepth::integrated, UnivariateDepth::halfspace, {}};
    std::vector<double> scores;
    bool has_scores = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != 4) {
            fail(lineno, "expected 4 cells");
        }
        const auto d = parse_double(cells[1]);
        if (!d) {
            fail(lineno, "depth is not a number");
        }
        depth.values.push_back(*d);
        if (!cells[3].empty()) {
            const auto s = parse_double(cells[3]);
            if (!s) {
                fail(lineno, "refinement score is not a number");
            }
            scores.push_back(*s);
            has_scores = true;
        }
    }
    if (has_scores) {
        if (scores.size() != depth.values.size()) {
            throw ParseError("refinement scores present on some rows only");
        }
        return rank_by_depth(std::move(depth), Refinement::erl, std::move(scores));
    }
    return rank_by_depth(std::move(depth));
}

void write_boxplot_json(std::ostream& out, const Boxplot& bp) {
    json doc;
    doc["depth"] = depth_label(bp.ranking.depth.kind, bp.ranking.depth.base);
    doc["refinement"] = std::string(to_string(bp.options.refinement));
    doc["tau"] = bp.options.tau;
    doc["factor"] = bp.options.factor;
    doc["whisker_anchor"] = std::string(to_string(bp.options.anchor));
    doc["n"] = bp.ranking.depth.values.size();
    doc["median_index"] = bp.median_index;
    doc["central_size"] = bp.central_indices.size();
    doc["central_indices"] = bp.central_indices;
    doc["outlier_indices"] = bp.outliers;
    doc["outlyingness"] = numbers(bp.outlyingness);
    doc["depth_values"] = numbers(bp.ranking.depth.values);
    doc["ranks"] = numbers(bp.ranking.ranks);
    if (!bp.ranking.scores.empty()) {
        doc["refinement_scores"] = numbers(bp.ranking.scores);
    }
    doc["grid"] = numbers(bp.central.grid().points());
    doc["central"] = {{"lower", numbers(bp.central.lower())}, {"upper", numbers(bp.central.upper())}};
    doc["whiskers"] = {{"lower", numbers(bp.whiskers.lower())}, {"upper", numbers(bp.whiskers.upper())}};
    out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
    out << "variant,n,log_h,statistic,mean,sd\n";
    for (const auto& cell : report.cells) {
        for (auto stat : all_statistics) {
            const Summary& s = cell[stat];
            out << cell.variant << ',' << cell.n << ',' << format_number(cell.log_h) << ',' << to_string(stat) << ','
                << format_number(s.mean) << ',' << format_number(s.sd) << '\n';
        }
    }
}

void write_report_json(std::ostream& out, const ExperimentReport& report) {
    const auto& c = report.config;
    json doc;
    json variants = json::array();
    for (const auto& v : c.variants) {
        variants.push_back({{"name", v.name},
                            {"depth", depth_label(v.depth, v.base)},
                            {"refinement", std::string(to_string(v.refinement))}});
    }
    doc["config"] = {{"variants", variants}, {"n", c.ns},        {"log_h", c.log_hs},
                     {"runs", c.runs},       {"n_test", c.n_test}, {"grid_size", c.grid_size},
                     {"seed", c.seed},       {"tau", c.tau},       {"factor", c.factor},
                     {"whisker_anchor", std::string(to_string(c.anchor))}};
    json cells = json::array();
    for (const auto& cell : report.cells) {
        json stats;
        for (auto stat : all_statistics) {
            stats[std::string(to_string(stat))] = {{"mean", number(cell[stat].mean)}, {"sd", number(cell[stat].sd)}};
        }
        cells.push_back({{"variant", cell.variant}, {"n", cell.n}, {"log_h", cell.log_h}, {"statistics", stats}});
    }
    doc["cells"] = cells;
    out << doc.dump(2) << '\n';
}

void write_report_tables(std::ostream& out, const ExperimentReport& report) {
    const auto& c = report.config;
    auto cell_text = [](const Summary& s) {
        if (std::isnan(s.mean)) {
            return std::string("-");
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f (%.3f)", s.mean, s.sd);
        return std::string(buf);
    };
    const char* titles[] = {"Percentage of sample functions inside the 50% central region",
                            "Percentage of sample functions inside the whiskers band",
                            "Mean width of the central region",
                            "Percentage of test functions inside the central region"};
    for (auto stat : all_statistics) {
        if (stat == Statistic::test_coverage && c.n_test == 0) {
            continue;
        }
        out << titles[static_cast<std::size_t>(stat)] << " (mean, sd in brackets)\n";
        std::ostringstream head;
        head << std::left << std::setw(12) << "depth" << std::setw(7) << "n";
        for (double lh : c.log_hs) {
            head << std::setw(20) << ("log(h) = " + format_number(lh));
        }
        const std::string header = head.str();
        out << header << '\n' << std::string(header.size(), '-') << '\n';
        for (const auto& v : c.variants) {
            for (auto n : c.ns) {
                out << std::left << std::setw(12) << v.name << std::setw(7) << n;
                for (double lh : c.log_hs) {
                    out << std::setw(20) << cell_text(report.cell(v.name, n, lh)[stat]);
                }
                out << '\n';
            }
        }
        out << '\n';
    }
}

} // namespace fbox
