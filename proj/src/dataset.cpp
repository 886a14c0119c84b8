// Copyright 2026 The pcakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcakit/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "pcakit/errors.hpp"

namespace pcakit {

namespace {

std::string read_whole_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on '" + path.string() + "'");
  }
  return std::move(buf).str();
}

// Records of raw fields, quotes resolved. Quoted fields may hold commas,
// escaped quotes ("") and newlines.
std::vector<std::vector<std::string>> parse_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;

  std::size_t i = 0;
  if (text.size() >= 3 && text[0] == '\xef' && text[1] == '\xbb' &&
      text[2] == '\xbf') {
    i = 3;  // UTF-8 byte-order mark
  }

  auto end_record = [&]() {
    fields.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(fields));
    fields.clear();
  };

  while (i < text.size()) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        continue;
      }
      field += ch;
      ++i;
      continue;
    }
    switch (ch) {
      case '"':
        in_quotes = true;
        ++i;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        ++i;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') {
          end_record();
          i += 2;
        } else {
          field += ch;
          ++i;
        }
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += ch;
        ++i;
        break;
    }
  }
  if (in_quotes) {
    throw ParseError("unterminated quoted field at end of file");
  }
  if (!field.empty() || !fields.empty()) {
    end_record();
  }
  return records;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string join_names(std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  return out;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name, const char* op) {
  std::size_t found = header.size();
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] != name) continue;
    if (found != header.size()) {
      throw SchemaError(std::string(op) + ": column '" + name +
                        "' appears more than once in the header");
    }
    found = j;
  }
  if (found == header.size()) {
    throw SchemaError(std::string(op) + ": no column '" + name +
                      "', available: " + join_names(header));
  }
  return found;
}

double parse_cell(std::string_view raw, std::size_t row,
                  const std::string& column) {
  const std::string_view cell = trim(raw);
  const std::string where =
      "row " + std::to_string(row) + ", column '" + column + "'";
  if (cell.empty()) {
    throw ParseError(where + ": missing value");
  }
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() ||
      !std::isfinite(value)) {
    throw ParseError(where + ": cannot parse '" + std::string(cell) +
                     "' as a number");
  }
  return value;
}

bool passes(const FilterPredicate& pred, double v) {
  switch (pred.op) {
    case FilterPredicate::Op::lt:
      return v < pred.threshold;
    case FilterPredicate::Op::le:
      return v <= pred.threshold;
    case FilterPredicate::Op::gt:
      return v > pred.threshold;
    case FilterPredicate::Op::ge:
      return v >= pred.threshold;
    case FilterPredicate::Op::eq:
      return v == pred.threshold;
    case FilterPredicate::Op::ne:
      return v != pred.threshold;
  }
  return false;
}

std::string escape_csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(FilterPredicate::Op op) {
  switch (op) {
    case FilterPredicate::Op::lt:
      return "<";
    case FilterPredicate::Op::le:
      return "<=";
    case FilterPredicate::Op::gt:
      return ">";
    case FilterPredicate::Op::ge:
      return ">=";
    case FilterPredicate::Op::eq:
      return "==";
    case FilterPredicate::Op::ne:
      return "!=";
  }
  return "?";
}

DataTable read_csv(const std::filesystem::path& path,
                   std::span<const std::string> selected_columns) {
  if (selected_columns.empty()) {
    throw ContractError("read_csv: no columns selected");
  }
  const std::string text = read_whole_file(path);
  const auto records = parse_records(text);
  if (records.empty()) {
    throw ParseError("'" + path.string() + "' has no header row");
  }

  std::vector<std::string> header;
  header.reserve(records[0].size());
  for (const auto& h : records[0]) {
    header.emplace_back(trim(h));
  }

  DataTable table;
  std::vector<std::size_t> indices;
  for (const auto& name : selected_columns) {
    for (const auto& seen : table.column_names) {
      if (seen == name) {
        throw SchemaError("read_csv: column '" + name + "' requested twice");
      }
    }
    indices.push_back(find_column(header, name, "read_csv"));
    table.column_names.push_back(name);
  }

  table.columns.assign(selected_columns.size(), {});
  table.n_rows = records.size() - 1;
  for (auto& col : table.columns) col.reserve(table.n_rows);

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw ParseError("row " + std::to_string(r) + " has " +
                       std::to_string(rec.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < indices.size(); ++c) {
      table.columns[c].push_back(
          parse_cell(rec[indices[c]], r, table.column_names[c]));
    }
  }
  return table;
}

DataTable filter_rows(const DataTable& table,
                      std::span<const FilterPredicate> predicates) {
  std::vector<std::size_t> pred_col(predicates.size());
  for (std::size_t p = 0; p < predicates.size(); ++p) {
    pred_col[p] =
        find_column(table.column_names, predicates[p].column, "filter_rows");
  }

  DataTable out;
  out.column_names = table.column_names;
  out.columns.assign(table.columns.size(), {});
  for (std::size_t r = 0; r < table.n_rows; ++r) {
    bool keep = true;
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      if (!passes(predicates[p], table.columns[pred_col[p]][r])) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out.columns[c].push_back(table.columns[c][r]);
    }
    ++out.n_rows;
  }
  return out;
}

Matrix to_matrix(const DataTable& table,
                 std::span<const std::string> column_names) {
  std::vector<std::size_t> indices;
  for (const auto& name : column_names) {
    indices.push_back(find_column(table.column_names, name, "to_matrix"));
  }
  Matrix out(table.n_rows, column_names.size());
  for (std::size_t i = 0; i < table.n_rows; ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      out(i, j) = table.columns[indices[j]][i];
    }
  }
  return out;
}

std::string format_real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_csv(const Matrix& m,
                          std::span<const std::string> column_names) {
  if (column_names.size() != m.cols()) {
    throw ShapeError("matrix_to_csv: " + std::to_string(column_names.size()) +
                     " names for " + std::to_string(m.cols()) + " columns");
  }
  std::string out;
  for (std::size_t j = 0; j < column_names.size(); ++j) {
    if (j > 0) out += ',';
    out += escape_csv_field(column_names[j]);
  }
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_real17(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("write failure on '" + path.string() + "'");
  }
}

}  // namespace pcakit
