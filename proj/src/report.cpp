#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <ostream>

namespace ineqlab::cli {
namespace {

std::string number_17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void write_json(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        write_json(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        write_json(v[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? number_17(d) : "\"" + number_17(d) + "\"";
      break;
    }
    default:
      out += v.dump();
  }
}

std::string text_cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::string: return v.get<std::string>();
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isnan(d)) return "nan";
      if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
      return fmt::format("{}", d);
    }
    case Json::value_t::null: return "";
    case Json::value_t::array:
    case Json::value_t::object: return to_json_text(v);
    default: return v.dump();
  }
}

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_number_float()) {
    s = number_17(v.get<double>());
  } else if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    s = "";
  } else if (v.is_structured()) {
    s = to_json_text(v);
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }
  return s;
}

void write_csv_line(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

std::string to_json_text(const Json& value) {
  std::string s;
  write_json(value, s);
  return s;
}

void render(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: {
      Json doc = report.meta;
      if (!report.columns.empty()) {
        Json rows = Json::array();
        for (const auto& row : report.rows) {
          Json obj = Json::object();
          for (std::size_t i = 0; i < report.columns.size() && i < row.size(); ++i) obj[report.columns[i]] = row[i];
          rows.push_back(std::move(obj));
        }
        doc[report.rows_key] = std::move(rows);
      }
      out << to_json_text(doc) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      if (!report.columns.empty()) {
        std::vector<std::string> header;
        for (const auto& c : report.columns) header.push_back(csv_cell(Json(c)));
        write_csv_line(header, out);
        for (const auto& row : report.rows) {
          std::vector<std::string> cells;
          for (const auto& v : row) cells.push_back(csv_cell(v));
          write_csv_line(cells, out);
        }
      } else {
        out << "key,value\n";
        for (const auto& [k, v] : report.meta.items()) write_csv_line({csv_cell(Json(k)), csv_cell(v)}, out);
      }
      break;
    }
    case OutputFormat::Text: {
      if (report.primary && report.rows.empty()) {
        out << text_cell(report.meta.at(*report.primary)) << '\n';
        break;
      }
      std::size_t key_width = 0;
      for (const auto& [k, v] : report.meta.items()) key_width = std::max(key_width, k.size());
      for (const auto& [k, v] : report.meta.items()) {
        out << fmt::format("{:<{}}  {}\n", k + ":", key_width + 1, text_cell(v));
      }
      if (report.columns.empty()) break;
      if (!report.meta.empty()) out << '\n';
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(report.columns.size());
      for (std::size_t i = 0; i < report.columns.size(); ++i) width[i] = report.columns[i].size();
      for (const auto& row : report.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
          line.push_back(text_cell(row[i]));
          width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) s += "  ";
          s += fmt::format("{:>{}}", line[i], width[i]);
        }
        out << s << '\n';
      };
      emit(report.columns);
      for (const auto& line : cells) emit(line);
      break;
    }
  }
}

}  // namespace ineqlab::cli
