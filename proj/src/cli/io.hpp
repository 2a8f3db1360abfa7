#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace gljunction::cli {

using Json = nlohmann::ordered_json;

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Comma-separated table with a header row, values printed with %.17g.
void write_csv(const std::filesystem::path& path, const std::vector<Column>& columns);

/// Reads a header-row CSV; every field must parse as a number.
std::vector<Column> read_csv(const std::filesystem::path& path);

/// Column by name; throws InvalidArgument when absent.
const Column& column(const std::vector<Column>& table, const std::string& name);

/// Two whitespace-separated columns for gnuplot, one comment line on top.
void write_dat(const std::filesystem::path& path, const std::string& comment,
               const std::vector<double>& x, const std::vector<double>& y);

void write_json(const std::filesystem::path& path, const Json& doc);

std::string format_double(double value);

}  // namespace gljunction::cli
