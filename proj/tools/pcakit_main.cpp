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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcakit/cli.hpp"

namespace {

struct RawOptions {
  std::string input;
  std::string columns;
  std::vector<std::string> filters;
  std::string k_policy = "kaiser";
  std::string out_dir = ".";
  bool emit_scree = false;
  bool emit_matrices = false;
  bool quiet = false;
};

void add_common_options(CLI::App* sub, RawOptions* opts) {
  sub->add_option("--input", opts->input, "CSV file with a header row")
      ->required();
  sub->add_option("--columns", opts->columns,
                  "comma-separated analysis columns, in order")
      ->required();
  sub->add_option("--filter", opts->filters,
                  "row filter <column><op><number> with op one of "
                  "< <= > >= == !=; repeat to require several");
  sub->add_option("--k", opts->k_policy,
                  "components to keep: 'kaiser' or 'fixed:<count>'");
  sub->add_option("--out", opts->out_dir, "output directory");
  sub->add_flag("--emit-scree", opts->emit_scree,
                "also write scree.svg when eigenvalues are computed");
  sub->add_flag("--emit-matrices", opts->emit_matrices,
                "also write z/zrot/f/zapprox/xapprox CSV files");
  sub->add_flag("--quiet", opts->quiet, "suppress the text summary");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal component analysis of numeric CSV columns"};
  app.require_subcommand(1);

  RawOptions opts;
  CLI::App* describe = app.add_subcommand(
      "describe", "per-column screening statistics and anomaly counts");
  CLI::App* adequacy = app.add_subcommand(
      "adequacy", "Bartlett sphericity and KMO/MSA sampling adequacy");
  CLI::App* pca = app.add_subcommand(
      "pca", "eigenanalysis of the correlation matrix with scores");
  CLI::App* reduce = app.add_subcommand(
      "reduce", "pca plus dimensional reduction and reconstruction");
  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "all stages: describe, adequacy, pca, reduce");
  for (CLI::App* sub : {describe, adequacy, pca, reduce, pipeline}) {
    add_common_options(sub, &opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pcakit::RunConfig config;
  if (describe->parsed()) config.command = pcakit::Command::describe;
  if (adequacy->parsed()) config.command = pcakit::Command::adequacy;
  if (pca->parsed()) config.command = pcakit::Command::pca;
  if (reduce->parsed()) config.command = pcakit::Command::reduce;
  if (pipeline->parsed()) config.command = pcakit::Command::pipeline;

  try {
    config.input = opts.input;
    config.columns = pcakit::parse_column_list(opts.columns);
    for (const auto& f : opts.filters) {
      config.filters.push_back(pcakit::parse_filter(f));
    }
    config.k_policy = pcakit::parse_k_policy(opts.k_policy);
    config.out_dir = opts.out_dir;
    config.emit_scree = opts.emit_scree;
    config.emit_matrices = opts.emit_matrices;
    config.quiet = opts.quiet;
  } catch (const pcakit::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  return pcakit::run(config, std::cout, std::cerr);
}
