#ifndef FBOX_IO_HPP
#define FBOX_IO_HPP

#include "fbox/boxplot.hpp"
#include "fbox/experiments.hpp"
#include "fbox/grid.hpp"
#include "fbox/ranking.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

/**
 * @file io.hpp
 *
 * @brief Dataset CSV ingestion and CSV/JSON/text writers for depths, boxplots
 * and study reports.
 *
 * Dataset CSV: a header `t,f1,...,fn`, then one line per grid point with the
 * grid coordinate followed by the n function values. The coordinate column
 * must be strictly increasing; it is mapped affinely onto [0,1] for the grid
 * and kept verbatim for plotting. Weights may be supplied in a JSON sidecar
 * `{"weights": [w1, ..., wm]}`.
 */

namespace fbox {

/// Malformed input file; the message names the offending line.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

struct Dataset {
    FunctionalSample sample;
    /// Coordinates as written in the file.
    std::vector<double> coordinates;
    /// Function column names from the header.
    std::vector<std::string> names;
};

Dataset read_dataset_csv(std::istream& in, const std::optional<std::vector<double>>& weights = std::nullopt);
Dataset read_dataset_csv(const std::string& path, const std::optional<std::vector<double>>& weights = std::nullopt);
std::vector<double> read_weights_json(const std::string& path);

void write_dataset_csv(std::ostream& out, const FunctionalSample& sample,
                       const std::vector<std::string>& names = {});

/// Six significant digits, locale independent.
std::string format_number(double v);

/// Columns: index, depth, rank, refinement_score (empty without refinement).
void write_depth_csv(std::ostream& out, const DepthRanking& ranking);

/// Reads back the depth CSV written above.
DepthRanking read_depth_csv(std::istream& in);

void write_boxplot_json(std::ostream& out, const Boxplot& boxplot);

/// One row per cell and statistic: variant,n,log_h,statistic,mean,sd.
void write_report_csv(std::ostream& out, const ExperimentReport& report);
void write_report_json(std::ostream& out, const ExperimentReport& report);
/// Mean with standard deviation in brackets, one table per statistic.
void write_report_tables(std::ostream& out, const ExperimentReport& report);

} // namespace fbox

#endif
