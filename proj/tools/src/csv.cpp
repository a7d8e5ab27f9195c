#include "gqs_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gqs::cli {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_real(const std::string& field, std::size_t line) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (!field.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    std::ostringstream os;
    os << "line " << line << ": '" << field << "' is not a finite number";
    throw ValidationError(os.str());
  }
  return v;
}

}  // namespace

Table parse_table(const std::string& text, const std::vector<std::string>& expected) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  Table table;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (table.header.empty()) {
      if (fields != expected) {
        std::ostringstream os;
        os << "line " << number << ": expected header '";
        for (std::size_t k = 0; k < expected.size(); ++k) os << (k ? "," : "") << expected[k];
        os << "'";
        throw ValidationError(os.str());
      }
      table.header = std::move(fields);
      table.columns.resize(expected.size());
      continue;
    }
    if (fields.size() != expected.size()) {
      std::ostringstream os;
      os << "line " << number << ": expected " << expected.size() << " fields, got "
         << fields.size();
      throw ValidationError(os.str());
    }
    for (std::size_t k = 0; k < fields.size(); ++k) {
      table.columns[k].push_back(parse_real(fields[k], number));
    }
  }
  if (table.header.empty()) throw ValidationError("CSV input is empty");
  return table;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

HermiteInput parse_hermite_csv(const std::string& text) {
  Table t = parse_table(text, {"x", "y", "p"});
  if (t.rows() < 2) throw ValidationError("Hermite data needs at least two rows");
  HermiteInput input;
  input.x = std::move(t.columns[0]);
  input.data.y = std::move(t.columns[1]);
  input.data.p = std::move(t.columns[2]);
  return input;
}

HermiteInput read_hermite_csv(const std::string& path) {
  return parse_hermite_csv(read_file(path));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& field : split(text)) values.push_back(parse_real(field, 1));
  return values;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace gqs::cli
