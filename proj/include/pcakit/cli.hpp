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

#ifndef PCAKIT_CLI_HPP_
#define PCAKIT_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcakit/dataset.hpp"
#include "pcakit/errors.hpp"
#include "pcakit/reduction.hpp"

namespace pcakit {

/// Wrong flags or arguments, as opposed to bad data. Maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { describe, adequacy, pca, reduce, pipeline };

struct RunConfig {
  Command command = Command::pipeline;
  std::filesystem::path input;
  std::vector<std::string> columns;        // analysis columns, in order
  std::vector<FilterPredicate> filters;    // all must pass
  KPolicy k_policy = KPolicy::kaiser_rule();
  std::filesystem::path out_dir = ".";
  bool emit_scree = false;
  bool emit_matrices = false;
  bool quiet = false;
};

/// Parse "<column><op><number>" where op is one of < <= > >= == !=.
/// Raises UsageError on anything else.
FilterPredicate parse_filter(const std::string& text);

/// Parse "kaiser" or "fixed:<count>". Raises UsageError on anything else.
KPolicy parse_k_policy(const std::string& text);

/// Split a comma-separated column list, trimming blanks around names.
std::vector<std::string> parse_column_list(const std::string& text);

/// Run one command end to end: load, filter, compute the stages the command
/// asks for, then write report.json (plus scree.svg and matrix CSVs when the
/// emit flags are set) into out_dir. A text summary goes to out unless quiet.
/// Returns the process exit status: 0 success, 1 data or numeric error,
/// 2 usage error. Never throws.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pcakit

#endif  // PCAKIT_CLI_HPP_
