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

#include "pcakit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include "pcakit/adequacy.hpp"
#include "pcakit/descriptive.hpp"
#include "pcakit/pca.hpp"
#include "pcakit/report.hpp"
#include "pcakit/scree_svg.hpp"
#include "pcakit/standardize.hpp"

namespace pcakit {

namespace {

std::string fmt7(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string trim_copy(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& text, const std::string& what) {
  const std::string t = trim_copy(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() ||
      !std::isfinite(value)) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return value;
}

std::string render_filter(const FilterPredicate& f) {
  return f.column + to_string(f.op) + format_real17(f.threshold);
}

std::string policy_text(const KPolicy& policy) {
  if (policy.kind == KPolicy::Kind::kaiser) return "kaiser";
  return "fixed:" + std::to_string(policy.k);
}

std::vector<std::string> component_names(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    names.push_back("pc" + std::to_string(j));
  }
  return names;
}

std::vector<double> column_variances(const Matrix& m) {
  std::vector<double> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double sd = mean_sd(matrix_column(m, j)).second;
    out[j] = sd * sd;
  }
  return out;
}

void print_summary(std::ostream& out, const AnalysisResult& res) {
  const auto& d = res.dataset;
  out << "input: " << d.input << " (" << d.n_raw << " rows";
  if (!d.filters.empty()) {
    out << ", " << d.n_rows << " after ";
    for (std::size_t i = 0; i < d.filters.size(); ++i) {
      if (i > 0) out << " & ";
      out << d.filters[i];
    }
  }
  out << ")\n";
  out << "columns:";
  for (const auto& c : d.columns) out << " " << c;
  out << "\n";

  if (res.descriptive) {
    out << "\ndescriptive\n";
    out << "  column  n  mean  sd  skew.std  kurt.std  normal  "
           "outlier/extremal/6sigma\n";
    for (const auto& s : *res.descriptive) {
      out << "  " << s.name << "  " << s.n << "  " << fmt7(s.mean) << "  "
          << fmt7(s.sd) << "  " << fmt7(s.std_skewness) << "  "
          << fmt7(s.std_kurtosis) << "  " << (s.approx_normal ? "yes" : "no")
          << "  " << s.outliers << "/" << s.extremal_values << "/"
          << s.six_sigma_events << "\n";
    }
    out << "  column  min  q1  median  q3  max\n";
    for (const auto& s : *res.descriptive) {
      const auto& f = s.five_number;
      out << "  " << s.name << "  " << fmt7(f.min) << "  " << fmt7(f.q1)
          << "  " << fmt7(f.median) << "  " << fmt7(f.q3) << "  "
          << fmt7(f.max) << "\n";
    }
  }

  if (res.adequacy) {
    const auto& a = *res.adequacy;
    out << "\nadequacy\n";
    out << "  Bartlett sphericity: X2 = " << fmt7(a.bartlett_x2)
        << ", df = " << a.bartlett_df << ", p "
        << (a.bartlett_p_underflow ? "< 2.22e-16"
                                   : std::string("= ") + fmt7(a.bartlett_p))
        << "\n";
    out << "  KMO = " << fmt7(a.kmo) << "\n";
    out << "  MSA:";
    for (const auto& [name, v] : a.msa) {
      out << " " << name << " = " << fmt7(v);
    }
    out << "\n";
  }

  if (res.pca) {
    const auto& p = *res.pca;
    out << "\npca\n";
    out << "  det(R) = " << fmt7(p.determinant)
        << ", trace(R) = " << fmt7(p.trace) << "\n";
    out << "  component  eigenvalue  proportion  cumulative  kaiser\n";
    for (std::size_t j = 0; j < p.eigenvalues.size(); ++j) {
      out << "  " << (j + 1) << "  " << fmt7(p.eigenvalues[j]) << "  "
          << fmt4(p.proportion[j]) << "  " << fmt4(p.cumulative[j]) << "  "
          << (p.kaiser[j] ? "*" : "-") << "\n";
    }
    out << "  max consistency residual = " << fmt7(p.residuals.max()) << "\n";
  }

  if (res.reduction) {
    const auto& r = *res.reduction;
    out << "\nreduction\n";
    out << "  kept k = " << r.k << " (" << r.policy
        << "), explained = " << fmt4(r.explained) << "\n";
    out << "  lambda_red:";
    for (double l : r.lambda_red) out << " " << fmt7(l);
    out << "\n";
  }
}

}  // namespace

FilterPredicate parse_filter(const std::string& text) {
  const std::size_t pos = text.find_first_of("<>=!");
  if (pos == std::string::npos) {
    throw UsageError("filter '" + text +
                     "' has no operator (< <= > >= == !=)");
  }
  FilterPredicate pred;
  std::size_t value_at = pos + 1;
  switch (text[pos]) {
    case '<':
      pred.op = FilterPredicate::Op::lt;
      if (value_at < text.size() && text[value_at] == '=') {
        pred.op = FilterPredicate::Op::le;
        ++value_at;
      }
      break;
    case '>':
      pred.op = FilterPredicate::Op::gt;
      if (value_at < text.size() && text[value_at] == '=') {
        pred.op = FilterPredicate::Op::ge;
        ++value_at;
      }
      break;
    case '=':
      if (value_at >= text.size() || text[value_at] != '=') {
        throw UsageError("filter '" + text + "': use == for equality");
      }
      pred.op = FilterPredicate::Op::eq;
      ++value_at;
      break;
    default:  // '!'
      if (value_at >= text.size() || text[value_at] != '=') {
        throw UsageError("filter '" + text + "': use != for inequality");
      }
      pred.op = FilterPredicate::Op::ne;
      ++value_at;
      break;
  }
  pred.column = trim_copy(text.substr(0, pos));
  if (pred.column.empty()) {
    throw UsageError("filter '" + text + "' names no column");
  }
  pred.threshold =
      parse_number(text.substr(value_at), "filter '" + text + "'");
  return pred;
}

KPolicy parse_k_policy(const std::string& text) {
  if (text == "kaiser") return KPolicy::kaiser_rule();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    std::size_t k = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc{} ||
        ptr != digits.data() + digits.size() || k == 0) {
      throw UsageError("--k fixed:<count> needs a positive integer, got '" +
                       text + "'");
    }
    return KPolicy::fixed(k);
  }
  throw UsageError("--k must be 'kaiser' or 'fixed:<count>', got '" + text +
                   "'");
}

std::vector<std::string> parse_column_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    const std::string name = trim_copy(text.substr(start, end - start));
    if (name.empty()) {
      throw UsageError("--columns has an empty name in '" + text + "'");
    }
    out.push_back(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) {
    throw UsageError("--columns must name at least one column");
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string stage = "setup";
  try {
    if (config.columns.empty()) {
      throw UsageError("no analysis columns given");
    }

    std::vector<std::string> load_columns = config.columns;
    for (const auto& f : config.filters) {
      if (std::find(load_columns.begin(), load_columns.end(), f.column) ==
          load_columns.end()) {
        load_columns.push_back(f.column);
      }
    }

    stage = "load";
    const DataTable raw = read_csv(config.input, load_columns);
    stage = "filter";
    const DataTable kept = filter_rows(raw, config.filters);
    stage = "analyze";
    const Matrix x = to_matrix(kept, config.columns);

    AnalysisResult res;
    res.dataset.input = config.input.string();
    res.dataset.columns = config.columns;
    for (const auto& f : config.filters) {
      res.dataset.filters.push_back(render_filter(f));
    }
    res.dataset.n_raw = raw.n_rows;
    res.dataset.n_rows = kept.n_rows;

    const Command cmd = config.command;
    const bool want_desc =
        cmd == Command::describe || cmd == Command::pipeline;
    const bool want_adeq =
        cmd == Command::adequacy || cmd == Command::pipeline;
    const bool want_pca = cmd == Command::pca || cmd == Command::reduce ||
                          cmd == Command::pipeline;
    const bool want_red = cmd == Command::reduce || cmd == Command::pipeline;

    if (want_desc) {
      stage = "describe";
      std::vector<ColumnSummary> summaries;
      summaries.reserve(config.columns.size());
      for (std::size_t j = 0; j < config.columns.size(); ++j) {
        summaries.push_back(
            summarize_column(config.columns[j], matrix_column(x, j)));
      }
      res.descriptive = std::move(summaries);
    }

    std::optional<StandardizedData> std_data;
    std::optional<PcaModel> model;
    std::optional<ScoreSet> score_set;
    std::optional<ReducedModel> red;

    if (want_adeq || want_pca) {
      stage = "standardize";
      std_data = standardize(x, config.columns);
    }
    if (want_adeq) {
      stage = "adequacy";
      const Matrix r = correlation_matrix(*std_data);
      res.adequacy = assess_adequacy(r, std_data->z.rows(), config.columns);
    }
    if (want_pca) {
      stage = "pca";
      model = fit(*std_data);
      score_set = scores(*model, *std_data);

      PcaSection p;
      p.correlation = model->r;
      p.determinant = determinant(model->r);
      p.trace = trace(model->r);
      p.eigenvalues = model->lambda;
      p.proportion = model->proportion;
      p.cumulative = model->cumulative;
      p.kaiser = model->kaiser;
      p.rotation = model->v;
      p.rotation_determinant = determinant(model->v);
      p.lambda_inverse.resize(model->lambda.size());
      for (std::size_t j = 0; j < model->lambda.size(); ++j) {
        p.lambda_inverse[j] = 1.0 / model->lambda[j];
      }
      p.loadings = model->loadings;
      p.zrot_variances = column_variances(score_set->z_rot);
      p.residuals = consistency_check(*model, *std_data, *score_set);
      res.pca = std::move(p);
    }
    if (want_red) {
      stage = "reduce";
      if (config.k_policy.kind == KPolicy::Kind::fixed &&
          (config.k_policy.k < 1 ||
           config.k_policy.k > model->lambda.size())) {
        throw UsageError(
            "--k fixed:" + std::to_string(config.k_policy.k) +
            " outside [1, " + std::to_string(model->lambda.size()) + "]");
      }
      const std::size_t k = select_components(model->lambda, config.k_policy);
      red = reduce(*model, *std_data, k);

      ReductionSection rs;
      rs.policy = policy_text(config.k_policy);
      rs.k = red->k;
      rs.explained = red->explained;
      rs.lambda_red = red->lambda_red;
      rs.lambda_red_inverse.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        rs.lambda_red_inverse[j] = 1.0 / red->lambda_red[j];
      }
      rs.v_red = red->v_red;
      rs.a_red = red->a_red;
      rs.f_red_variances = column_variances(red->f_red);
      res.reduction = std::move(rs);
    }

    stage = "write";
    std::filesystem::create_directories(config.out_dir);
    write_text_file(config.out_dir / "report.json", write_report(res));
    if (config.emit_scree) {
      if (model) {
        write_text_file(config.out_dir / "scree.svg",
                        render_scree_svg(scree_data(model->lambda)));
      } else if (!config.quiet) {
        err << "note: --emit-scree ignored, this command computes no "
               "eigenvalues\n";
      }
    }
    if (config.emit_matrices) {
      if (std_data) {
        write_text_file(config.out_dir / "z.csv",
                        matrix_to_csv(std_data->z, config.columns));
      }
      if (score_set) {
        const auto pcs = component_names(score_set->f.cols());
        write_text_file(config.out_dir / "zrot.csv",
                        matrix_to_csv(score_set->z_rot, pcs));
        write_text_file(config.out_dir / "f.csv",
                        matrix_to_csv(score_set->f, pcs));
      }
      if (red) {
        write_text_file(config.out_dir / "zapprox.csv",
                        matrix_to_csv(reconstruct_z(*red), config.columns));
        write_text_file(
            config.out_dir / "xapprox.csv",
            matrix_to_csv(
                reconstruct_x(*red, std_data->center, std_data->scale),
                config.columns));
      }
    }

    if (!config.quiet) {
      print_summary(out, res);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error [" << stage << "]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pcakit
