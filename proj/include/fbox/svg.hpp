#ifndef FBOX_SVG_HPP
#define FBOX_SVG_HPP

#include "fbox/boxplot.hpp"
#include "fbox/grid.hpp"

#include <istream>
#include <span>
#include <string>

namespace fbox {

/// How the whiskers are drawn.
enum class WhiskerStyle {
    /// Boundary of the inflated band itself.
    band,
    /// Envelope of the sample functions that lie inside the inflated band.
    envelope,
};

/// Figure styling; defaults follow the usual boxplot palette
/// (gray curves, beige box, orange median and whiskers, blue outliers).
struct PlotStyle {
    int width = 800;
    int height = 500;
    std::string background = "#ffffff";
    std::string sample_color = "#b3b3b3";
    std::string central_fill = "#f5deb3";
    std::string median_color = "#ff8c00";
    std::string whisker_color = "#ff8c00";
    std::string outlier_color = "#1f4fa3";
    double sample_stroke = 0.7;
    double median_stroke = 3.0;
    double whisker_stroke = 2.5;
    double outlier_stroke = 2.0;
    WhiskerStyle whiskers = WhiskerStyle::band;
    std::string title;
};

/// Apply `key=value` lines (blank lines and `#` comments ignored).
void apply_style(PlotStyle& style, std::istream& in);
void apply_style_file(PlotStyle& style, const std::string& path);

/**
 * Render the boxplot as an SVG 1.1 document. `coordinates` label the x axis
 * (the grid points when empty). Output is a pure function of the inputs.
 */
std::string render_boxplot_svg(const FunctionalSample& sample, const Boxplot& boxplot, const PlotStyle& style = {},
                               std::span<const double> coordinates = {});

} // namespace fbox

#endif
