#include "fdepth/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "fdepth/errors.hpp"

namespace fdepth {

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t row_number) {
  std::vector<double> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    const std::size_t stop = (end == std::string::npos) ? line.size() : end;
    const char* first = line.data() + start;
    const char* last = line.data() + stop;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("row " + std::to_string(row_number) + ": field '" +
                       std::string(first, last) + "' is not a number");
    }
    if (!std::isfinite(value)) {
      throw ParseError("row " + std::to_string(row_number) +
                       ": non-finite value");
    }
    fields.push_back(value);
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  return fields;
}

}  // namespace

FunctionalSample read_sample_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      if (in.peek() == std::ifstream::traits_type::eof()) {
        break;  // tolerate a trailing newline
      }
      throw ParseError("row " + std::to_string(line_number) + ": empty line");
    }
    std::vector<double> fields = parse_row(line, line_number);
    if (!rows.empty() && fields.size() != rows.front().size()) {
      throw ParseError("row " + std::to_string(line_number) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(fields));
  }
  if (rows.size() < 2) {
    throw ParseError("'" + path.string() +
                     "': need a grid row plus at least one curve row");
  }

  Grid grid = make_grid(rows.front());
  const auto n = static_cast<Eigen::Index>(rows.size() - 1);
  const auto point_count = static_cast<Eigen::Index>(rows.front().size());
  CurveMatrix values(n, point_count);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index s = 0; s < point_count; ++s) {
      values(i, s) = rows[static_cast<std::size_t>(i) + 1]
                         [static_cast<std::size_t>(s)];
    }
  }
  return make_sample(std::move(values), std::move(grid));
}

void write_sample_csv(const std::filesystem::path& path,
                      const FunctionalSample& sample) {
  std::ostringstream out;
  for (Eigen::Index s = 0; s < sample.grid.size(); ++s) {
    if (s > 0) {
      out << ',';
    }
    out << format_double(sample.grid.points(s));
  }
  out << '\n';
  for (Eigen::Index i = 0; i < sample.curve_count(); ++i) {
    for (Eigen::Index s = 0; s < sample.point_count(); ++s) {
      if (s > 0) {
        out << ',';
      }
      out << format_double(sample.values(i, s));
    }
    out << '\n';
  }
  atomic_write(path, out.str());
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  fs::create_directories(dir, ec);  // ok if it already exists
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ParseError("cannot write '" + tmp.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      throw ParseError("write failed for '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    throw ParseError("cannot move '" + tmp.string() + "' to '" + path.string() +
                     "': " + ec.message());
  }
}

}  // namespace fdepth
