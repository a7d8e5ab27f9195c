#pragma once

#include <string>
#include <vector>

#include "gqs/basis.hpp"
#include "gqs/error.hpp"

namespace gqs::cli {

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Numeric columns of a comma-separated file with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// Parses CSV text whose header must equal `expected` (after trimming).
Table parse_table(const std::string& text, const std::vector<std::string>& expected);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// Hermite samples from an `x,y,p` file.
struct HermiteInput {
  std::vector<double> x;
  HermiteData data;
};

HermiteInput parse_hermite_csv(const std::string& text);
HermiteInput read_hermite_csv(const std::string& path);

/// Comma-separated reals, e.g. "-1" or "0,0.5,1".
std::vector<double> parse_list(const std::string& text);

std::string format_number(double v);

}  // namespace gqs::cli
