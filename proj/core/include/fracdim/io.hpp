#pragma once

#include <iosfwd>
#include <optional>

#include "fracdim/boxcount.hpp"
#include "fracdim/dataset.hpp"
#include "fracdim/fit.hpp"

namespace fracdim {

/// Options for reading delimited point files: one point per non-empty line,
/// delimiter-separated decimal reals, optional single header line.
struct IngestOptions {
  char delimiter = ',';
  bool has_header = false;
  std::optional<int> expected_dim;
};

/// Parses a point file. The dimension is inferred from the first data row
/// (or checked against expected_dim). Throws ParseError with a 1-based line
/// number on ragged or non-numeric rows, DomainError on empty input or a
/// dimension mismatch.
RawDataset read_points(std::istream& in, const IngestOptions& opts = {});

/// Writes one point per line with enough digits for exact binary round-trip
/// (read_points recovers the dataset bit-for-bit). LF line endings.
void write_points(const RawDataset& data, std::ostream& out, char delimiter = ',');

enum class PlotFormat { Csv, Tsv };

/// Writes the per-level table -- header "j,r,log2_r,S,log2_S", one row per
/// level ascending -- then, when an estimate is attached, `#`-prefixed
/// trailer lines carrying d2, r_squared, fit_range, and algorithm, so the
/// file stays loadable by standard plotting tools. Byte-deterministic for a
/// fixed input; S is exact, other numbers carry 6 significant digits.
void write_plot(const BoxCountPlot& plot, std::ostream& out, PlotFormat format = PlotFormat::Csv,
                const D2Estimate* estimate = nullptr);

}  // namespace fracdim
