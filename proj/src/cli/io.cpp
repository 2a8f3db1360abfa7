#include "io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gljunction/error.hpp"

namespace gljunction::cli {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
  }
  return fields;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<Column>& columns) {
  std::ofstream out = open_out(path);
  std::size_t rows = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "," : "") << columns[c].name;
    if (c == 0) rows = columns[c].values.size();
    if (columns[c].values.size() != rows) throw GridMismatch("csv columns differ in length");
  }
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << format_double(columns[c].values[r]);
    }
    out << '\n';
  }
}

std::vector<Column> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument(path.string() + ": empty table");
  std::vector<Column> table;
  for (auto& name : split(line)) table.push_back({name, {}});

  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line);
    if (fields.size() != table.size()) {
      throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(table.size()) + " fields");
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(fields[c].c_str(), &end);
      if (fields[c].empty() || *end != '\0' || errno == ERANGE) {
        throw InvalidArgument(path.string() + ":" + std::to_string(lineno) + ": bad number '" +
                              fields[c] + "'");
      }
      table[c].values.push_back(v);
    }
  }
  return table;
}

const Column& column(const std::vector<Column>& table, const std::string& name) {
  for (const Column& c : table) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("table has no column '" + name + "'");
}

void write_dat(const std::filesystem::path& path, const std::string& comment,
               const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw GridMismatch("dat columns differ in length");
  std::ofstream out = open_out(path);
  out << "# " << comment << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << format_double(x[i]) << ' ' << format_double(y[i]) << '\n';
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out = open_out(path);
  out << doc.dump(2) << '\n';
}

}  // namespace gljunction::cli
