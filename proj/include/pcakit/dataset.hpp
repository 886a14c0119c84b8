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

#ifndef PCAKIT_DATASET_HPP_
#define PCAKIT_DATASET_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

/// Column-oriented numeric table.
struct DataTable {
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;  // one vector per name
  std::size_t n_rows = 0;
};

/// One comparison against a named column. Rows pass a filter set only if
/// they pass every predicate.
struct FilterPredicate {
  enum class Op { lt, le, gt, ge, eq, ne };
  std::string column;
  Op op = Op::eq;
  double threshold = 0.0;
};

/// Spelling of an operator as it appears in filter expressions.
std::string to_string(FilterPredicate::Op op);

/// Load the selected columns of an RFC 4180 CSV file with a header row.
/// Quoted fields may contain commas, quotes ("" escapes) and newlines; a
/// UTF-8 byte-order mark is tolerated. Every selected cell must parse as a
/// finite number; failures raise ParseError with row and column named.
/// Unknown selected columns raise SchemaError listing what is available.
DataTable read_csv(const std::filesystem::path& path,
                   std::span<const std::string> selected_columns);

/// Rows of table passing every predicate, in original order.
DataTable filter_rows(const DataTable& table,
                      std::span<const FilterPredicate> predicates);

/// Columns of table, in the order given, as an n x m matrix.
Matrix to_matrix(const DataTable& table,
                 std::span<const std::string> column_names);

/// CSV text for a matrix: header row of names, then one line per row with
/// values at 17 significant digits (round-trip exact).
std::string matrix_to_csv(const Matrix& m,
                          std::span<const std::string> column_names);

/// A double at 17 significant digits, C locale. Shared by every emitter so
/// identical runs stay byte-identical.
std::string format_real17(double v);

/// Write text to a file, replacing any existing content.
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace pcakit

#endif  // PCAKIT_DATASET_HPP_
