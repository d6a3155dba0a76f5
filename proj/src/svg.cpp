#include "fbox/svg.hpp"

#include "fbox/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace fbox {

namespace {

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return {};
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

/// Roughly `count` round tick values covering [lo, hi].
std::vector<double> ticks(double lo, double hi, int count) {
    const double span = hi - lo;
    if (!(span > 0.0)) {
        return {lo};
    }
    const double raw = span / count;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double f : {1.0, 2.0, 5.0, 10.0}) {
        if (f * mag >= raw) {
            step = f * mag;
            break;
        }
    }
    std::vector<double> out;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) {
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    return out;
}

struct Frame {
    double x0, x1, y0, y1;          // data range
    double left, right, top, bottom; // pixel box
    double px(double x) const { return left + (x - x0) / (x1 - x0) * (right - left); }
    double py(double y) const { return bottom - (y - y0) / (y1 - y0) * (bottom - top); }
};

std::string polyline(const Frame& f, std::span<const double> xs, std::span<const double> ys) {
    std::string pts;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j) {
            pts += ' ';
        }
        pts += fmt2(f.px(xs[j])) + "," + fmt2(f.py(ys[j]));
    }
    return pts;
}

} // namespace

void apply_style(PlotStyle& style, std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("style line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        auto number = [&] {
            try {
                return std::stod(value);
            } catch (const std::exception&) {
                throw ParseError("style line " + std::to_string(lineno) + ": '" + value + "' is not a number");
            }
        };
        if (key == "width") {
            style.width = static_cast<int>(number());
        } else if (key == "height") {
            style.height = static_cast<int>(number());
        } else if (key == "background") {
            style.background = value;
        } else if (key == "sample_color") {
            style.sample_color = value;
        } else if (key == "central_fill") {
            style.central_fill = value;
        } else if (key == "median_color") {
            style.median_color = value;
        } else if (key == "whisker_color") {
            style.whisker_color = value;
        } else if (key == "outlier_color") {
            style.outlier_color = value;
        } else if (key == "sample_stroke") {
            style.sample_stroke = number();
        } else if (key == "median_stroke") {
            style.median_stroke = number();
        } else if (key == "whisker_stroke") {
            style.whisker_stroke = number();
        } else if (key == "outlier_stroke") {
            style.outlier_stroke = number();
        } else if (key == "whiskers") {
            if (value == "band") {
                style.whiskers = WhiskerStyle::band;
            } else if (value == "envelope") {
                style.whiskers = WhiskerStyle::envelope;
            } else {
                throw ParseError("style line " + std::to_string(lineno) + ": whiskers must be band or envelope");
            }
        } else if (key == "title") {
            style.title = value;
        } else {
            throw ParseError("style line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (style.width < 100 || style.height < 100) {
        throw ValidationError("figure must be at least 100x100 pixels");
    }
}

void apply_style_file(PlotStyle& style, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    apply_style(style, in);
}

std::string render_boxplot_svg(const FunctionalSample& sample, const Boxplot& bp, const PlotStyle& style,
                               std::span<const double> coordinates) {
    const std::size_t m = sample.points();
    const std::vector<double> xs = coordinates.empty()
                                       ? std::vector<double>(sample.grid().points().begin(), sample.grid().points().end())
                                       : std::vector<double>(coordinates.begin(), coordinates.end());
    detail::check_length(xs.size(), m, "coordinates");

    // whisker lines: either the inflated band or the envelope of curves inside it
    std::vector<double> wlo(bp.whiskers.lower().begin(), bp.whiskers.lower().end());
    std::vector<double> whi(bp.whiskers.upper().begin(), bp.whiskers.upper().end());
    if (style.whiskers == WhiskerStyle::envelope) {
        std::vector<std::size_t> inside;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            if (contains(bp.whiskers, sample.row(i))) {
                inside.push_back(i);
            }
        }
        const Band env = band_of(sample, inside);
        wlo.assign(env.lower().begin(), env.lower().end());
        whi.assign(env.upper().begin(), env.upper().end());
    }

    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -ylo;
    for (double v : sample.values()) {
        ylo = std::min(ylo, v);
        yhi = std::max(yhi, v);
    }
    const double pad = 0.05 * std::max(yhi - ylo, 1e-9);
    ylo -= pad;
    yhi += pad;
    if (!(yhi > ylo)) {
        yhi = ylo + 1.0;
    }

    Frame f{xs.front(), xs.back(), ylo, yhi, 70.0, style.width - 150.0, 40.0, style.height - 50.0};
    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width << "\" height=\""
      << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
    s << "<defs><clipPath id=\"plot\"><rect x=\"" << fmt2(f.left) << "\" y=\"" << fmt2(f.top) << "\" width=\""
      << fmt2(f.right - f.left) << "\" height=\"" << fmt2(f.bottom - f.top) << "\"/></clipPath></defs>\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"" << escape(style.background) << "\"/>\n";
    if (!style.title.empty()) {
        s << "<text x=\"" << fmt2(0.5 * (f.left + f.right)) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          << "font-size=\"16\">" << escape(style.title) << "</text>\n";
    }

    // axes and ticks
    s << "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
    s << "<line x1=\"" << fmt2(f.left) << "\" y1=\"" << fmt2(f.bottom) << "\" x2=\"" << fmt2(f.right) << "\" y2=\""
      << fmt2(f.bottom) << "\"/>\n";
    s << "<line x1=\"" << fmt2(f.left) << "\" y1=\"" << fmt2(f.top) << "\" x2=\"" << fmt2(f.left) << "\" y2=\""
      << fmt2(f.bottom) << "\"/>\n";
    s << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
    for (double x : ticks(f.x0, f.x1, 5)) {
        const double px = f.px(x);
        s << "<line x1=\"" << fmt2(px) << "\" y1=\"" << fmt2(f.bottom) << "\" x2=\"" << fmt2(px) << "\" y2=\""
          << fmt2(f.bottom + 5) << "\" stroke=\"#000000\"/>";
        s << "<text x=\"" << fmt2(px) << "\" y=\"" << fmt2(f.bottom + 18) << "\" text-anchor=\"middle\">"
          << format_number(x) << "</text>\n";
    }
    for (double y : ticks(f.y0, f.y1, 6)) {
        const double py = f.py(y);
        s << "<line x1=\"" << fmt2(f.left - 5) << "\" y1=\"" << fmt2(py) << "\" x2=\"" << fmt2(f.left) << "\" y2=\""
          << fmt2(py) << "\" stroke=\"#000000\"/>";
        s << "<text x=\"" << fmt2(f.left - 8) << "\" y=\"" << fmt2(py + 4) << "\" text-anchor=\"end\">"
          << format_number(y) << "</text>\n";
    }
    s << "</g>\n";

    s << "<g clip-path=\"url(#plot)\">\n";
    // central region polygon: upper envelope left to right, lower right to left
    {
        std::string pts = polyline(f, xs, bp.central.upper());
        for (std::size_t j = m; j-- > 0;) {
            pts += ' ' + fmt2(f.px(xs[j])) + "," + fmt2(f.py(bp.central.lower()[j]));
        }
        s << "<polygon points=\"" << pts << "\" fill=\"" << escape(style.central_fill) << "\" stroke=\"none\"/>\n";
    }
    const std::set<std::size_t> outliers(bp.outliers.begin(), bp.outliers.end());
    s << "<g fill=\"none\" stroke=\"" << escape(style.sample_color) << "\" stroke-width=\"" << fmt2(style.sample_stroke)
      << "\">\n";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (!outliers.count(i)) {
            s << "<polyline points=\"" << polyline(f, xs, sample.row(i)) << "\"/>\n";
        }
    }
    s << "</g>\n";
    s << "<g fill=\"none\" stroke=\"" << escape(style.whisker_color) << "\" stroke-width=\""
      << fmt2(style.whisker_stroke) << "\">\n";
    s << "<polyline points=\"" << polyline(f, xs, wlo) << "\"/>\n";
    s << "<polyline points=\"" << polyline(f, xs, whi) << "\"/>\n";
    s << "</g>\n";
    s << "<polyline points=\"" << polyline(f, xs, sample.row(bp.median_index)) << "\" fill=\"none\" stroke=\""
      << escape(style.median_color) << "\" stroke-width=\"" << fmt2(style.median_stroke) << "\"/>\n";
    s << "<g fill=\"none\" stroke=\"" << escape(style.outlier_color) << "\" stroke-width=\""
      << fmt2(style.outlier_stroke) << "\">\n";
    for (auto i : bp.outliers) {
        s << "<polyline points=\"" << polyline(f, xs, sample.row(i)) << "\"/>\n";
    }
    s << "</g>\n</g>\n";

    // legend
    struct Entry {
        std::string label;
        std::string color;
        double stroke;
        bool filled;
    };
    const Entry entries[] = {{"sample", style.sample_color, style.sample_stroke, false},
                             {"central region", style.central_fill, 0.0, true},
                             {"median", style.median_color, style.median_stroke, false},
                             {"whiskers", style.whisker_color, style.whisker_stroke, false},
                             {"outliers (" + std::to_string(bp.outliers.size()) + ")", style.outlier_color,
                              style.outlier_stroke, false}};
    const double lx = f.right + 15.0;
    double ly = f.top + 10.0;
    s << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const auto& e : entries) {
        if (e.filled) {
            s << "<rect x=\"" << fmt2(lx) << "\" y=\"" << fmt2(ly - 6) << "\" width=\"24\" height=\"12\" fill=\""
              << escape(e.color) << "\"/>";
        } else {
            s << "<line x1=\"" << fmt2(lx) << "\" y1=\"" << fmt2(ly) << "\" x2=\"" << fmt2(lx + 24) << "\" y2=\""
              << fmt2(ly) << "\" stroke=\"" << escape(e.color) << "\" stroke-width=\"" << fmt2(e.stroke) << "\"/>";
        }
        s << "<text x=\"" << fmt2(lx + 30) << "\" y=\"" << fmt2(ly + 4) << "\">" << escape(e.label) << "</text>\n";
        ly += 22.0;
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

} // namespace fbox
