#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ineqlab::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv };

/// Result of a command: scalar fields plus an optional table.
struct Report {
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::string rows_key = "rows";
  /// When set and the table is empty, text output is this field alone.
  std::optional<std::string> primary;
  int exit_code = 0;

  void add_row(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

/// JSON with 17 significant digits per number and non-finite numbers as
/// the strings "inf", "-inf", "nan".
std::string to_json_text(const Json& value);

void render(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace ineqlab::cli
