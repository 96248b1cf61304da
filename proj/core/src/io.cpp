#include "fracdim/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

void check_delimiter(char d) {
  if (std::isdigit(static_cast<unsigned char>(d)) || d == '+' || d == '-' || d == '.' ||
      d == '\n' || d == '\r')
    throw DomainError(std::string("invalid delimiter '") + d + "'");
}

std::string_view trim(std::string_view field, char delimiter) {
  auto is_pad = [&](char c) { return (c == ' ' || c == '\t') && c != delimiter; };
  while (!field.empty() && is_pad(field.front())) field.remove_prefix(1);
  while (!field.empty() && is_pad(field.back())) field.remove_suffix(1);
  return field;
}

double parse_field(std::string_view field, std::size_t line, std::size_t column) {
  if (field.empty()) throw ParseError("empty field", line, column);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError("field '" + std::string(field) + "' is not a number", line, column);
  if (!std::isfinite(value))
    throw ParseError("field '" + std::string(field) + "' is not finite", line, column);
  return value;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);  // shortest representation that round-trips
}

std::string format_sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

RawDataset read_points(std::istream& in, const IngestOptions& opts) {
  check_delimiter(opts.delimiter);

  RawDataset out;
  std::string line;
  std::size_t lineno = 0;
  int dim = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && opts.has_header) continue;
    if (line.empty()) continue;

    const std::string_view row = line;
    int fields = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t end = row.find(opts.delimiter, start);
      const auto field = trim(row.substr(start, end - start), opts.delimiter);
      ++fields;
      if (dim != 0 && fields > dim)
        throw ParseError("expected " + std::to_string(dim) + " fields", lineno);
      out.coords.push_back(parse_field(field, lineno, static_cast<std::size_t>(fields)));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }

    if (dim == 0) {
      dim = fields;
      if (opts.expected_dim && dim != *opts.expected_dim)
        throw DomainError("expected " + std::to_string(*opts.expected_dim) +
                          "-dimensional points, file has " + std::to_string(dim));
    } else if (fields != dim) {
      throw ParseError("expected " + std::to_string(dim) + " fields, got " +
                       std::to_string(fields), lineno);
    }
  }

  if (out.coords.empty()) throw DomainError("empty dataset");
  out.dim = dim;
  return out;
}

void write_points(const RawDataset& data, std::ostream& out, char delimiter) {
  check_delimiter(delimiter);
  const std::size_t n = data.size();
  std::string row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    const auto p = data.point(i);
    for (int d = 0; d < data.dim; ++d) {
      if (d > 0) row += delimiter;
      row += format_double(p[d]);
    }
    row += '\n';
    out << row;
  }
}

void write_plot(const BoxCountPlot& plot, std::ostream& out, PlotFormat format,
                const D2Estimate* estimate) {
  const char sep = format == PlotFormat::Csv ? ',' : '\t';
  out << "j" << sep << "r" << sep << "log2_r" << sep << "S" << sep << "log2_S" << '\n';
  for (const auto& rec : plot.records) {
    out << rec.level << sep << format_sig6(rec.radius) << sep
        << format_sig6(-static_cast<double>(rec.level)) << sep << rec.sum_squared << sep
        << format_sig6(std::log2(static_cast<double>(rec.sum_squared))) << '\n';
  }
  if (estimate) {
    out << "# d2 = " << format_sig6(estimate->d2) << '\n';
    out << "# r_squared = " << format_sig6(estimate->r_squared) << '\n';
    out << "# fit_range = " << estimate->range.j_min << ".." << estimate->range.j_max << '\n';
    out << "# algorithm = " << to_string(estimate->algorithm) << '\n';
  }
}

}  // namespace fracdim
