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

#include "pcakit/report.hpp"

#include <cstdio>
#include <string_view>

#include "pcakit/dataset.hpp"

namespace pcakit {

namespace {

// Emits JSON with insertion-ordered keys, multiline objects and inline
// arrays. No float passes through anything locale dependent.
class JsonWriter {
 public:
  void begin_object() {
    element_prefix();
    out_ += '{';
    stack_.push_back(0);
  }

  void end_object() {
    const bool empty = stack_.back() == 0;
    stack_.pop_back();
    if (!empty) {
      out_ += '\n';
      out_.append(2 * stack_.size(), ' ');
    }
    out_ += '}';
  }

  void begin_array() {
    element_prefix();
    out_ += '[';
    stack_.push_back(0);
  }

  void end_array() {
    stack_.pop_back();
    out_ += ']';
  }

  void key(std::string_view k) {
    if (stack_.back()++ > 0) out_ += ',';
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
    quote(k);
    out_ += ": ";
    have_key_ = true;
  }

  void value(double v) {
    element_prefix();
    out_ += format_real17(v);
  }

  void value(std::size_t v) {
    element_prefix();
    out_ += std::to_string(v);
  }

  void value(bool v) {
    element_prefix();
    out_ += v ? "true" : "false";
  }

  void value(std::string_view s) {
    element_prefix();
    quote(s);
  }

  std::string take() {
    out_ += '\n';
    return std::move(out_);
  }

 private:
  void element_prefix() {
    if (have_key_) {
      have_key_ = false;
      return;
    }
    if (stack_.empty()) return;
    if (stack_.back()++ > 0) out_ += ", ";
  }

  void quote(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"':
          out_ += "\\\"";
          break;
        case '\\':
          out_ += "\\\\";
          break;
        case '\n':
          out_ += "\\n";
          break;
        case '\r':
          out_ += "\\r";
          break;
        case '\t':
          out_ += "\\t";
          break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<int> stack_;  // element counts per open container
  bool have_key_ = false;
};

void write_matrix(JsonWriter& w, const Matrix& m) {
  w.begin_array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      w.value(m(i, j));
    }
    w.end_array();
  }
  w.end_array();
}

void write_vector(JsonWriter& w, const std::vector<double>& v) {
  w.begin_array();
  for (double x : v) w.value(x);
  w.end_array();
}

std::string format_p_display(double p, bool underflow) {
  if (underflow) return "< 2.22e-16";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", p);
  return buf;
}

void write_dataset(JsonWriter& w, const DatasetSection& d) {
  w.key("dataset");
  w.begin_object();
  w.key("input");
  w.value(std::string_view(d.input));
  w.key("columns");
  w.begin_array();
  for (const auto& c : d.columns) w.value(std::string_view(c));
  w.end_array();
  w.key("filters");
  w.begin_array();
  for (const auto& f : d.filters) w.value(std::string_view(f));
  w.end_array();
  w.key("n_raw");
  w.value(d.n_raw);
  w.key("n_rows");
  w.value(d.n_rows);
  w.end_object();
}

void write_descriptive(JsonWriter& w, const std::vector<ColumnSummary>& cs) {
  w.key("descriptive");
  w.begin_array();
  for (const auto& s : cs) {
    w.begin_object();
    w.key("name");
    w.value(std::string_view(s.name));
    w.key("n");
    w.value(s.n);
    w.key("mean");
    w.value(s.mean);
    w.key("sd");
    w.value(s.sd);
    w.key("std_skewness");
    w.value(s.std_skewness);
    w.key("std_kurtosis");
    w.value(s.std_kurtosis);
    w.key("approx_normal");
    w.value(s.approx_normal);
    w.key("outliers");
    w.value(s.outliers);
    w.key("extremal_values");
    w.value(s.extremal_values);
    w.key("six_sigma_events");
    w.value(s.six_sigma_events);
    w.key("five_number");
    w.begin_object();
    w.key("min");
    w.value(s.five_number.min);
    w.key("q1");
    w.value(s.five_number.q1);
    w.key("median");
    w.value(s.five_number.median);
    w.key("q3");
    w.value(s.five_number.q3);
    w.key("max");
    w.value(s.five_number.max);
    w.end_object();
    w.end_object();
  }
  w.end_array();
}

void write_adequacy(JsonWriter& w, const AdequacyReport& a) {
  w.key("adequacy");
  w.begin_object();
  w.key("bartlett");
  w.begin_object();
  w.key("x2");
  w.value(a.bartlett_x2);
  w.key("df");
  w.value(a.bartlett_df);
  w.key("p");
  w.value(a.bartlett_p);
  w.key("p_underflow");
  w.value(a.bartlett_p_underflow);
  w.key("p_display");
  w.value(std::string_view(
      format_p_display(a.bartlett_p, a.bartlett_p_underflow)));
  w.end_object();
  w.key("kmo");
  w.value(a.kmo);
  w.key("msa");
  w.begin_object();
  for (const auto& [name, v] : a.msa) {
    w.key(name);
    w.value(v);
  }
  w.end_object();
  w.end_object();
}

void write_pca(JsonWriter& w, const PcaSection& p) {
  w.key("pca");
  w.begin_object();
  w.key("correlation");
  w.begin_object();
  w.key("matrix");
  write_matrix(w, p.correlation);
  w.key("determinant");
  w.value(p.determinant);
  w.key("trace");
  w.value(p.trace);
  w.end_object();
  w.key("eigenvalues");
  write_vector(w, p.eigenvalues);
  w.key("proportion");
  write_vector(w, p.proportion);
  w.key("cumulative");
  write_vector(w, p.cumulative);
  w.key("kaiser");
  w.begin_array();
  for (bool b : p.kaiser) w.value(b);
  w.end_array();
  w.key("rotation");
  write_matrix(w, p.rotation);
  w.key("rotation_determinant");
  w.value(p.rotation_determinant);
  w.key("lambda_inverse");
  write_vector(w, p.lambda_inverse);
  w.key("loadings");
  write_matrix(w, p.loadings);
  w.key("zrot_variances");
  write_vector(w, p.zrot_variances);
  w.key("consistency");
  w.begin_object();
  w.key("r_minus_aat");
  w.value(p.residuals.r_minus_aat);
  w.key("lambda_minus_ata");
  w.value(p.residuals.lambda_minus_ata);
  w.key("identity_minus_ftf");
  w.value(p.residuals.identity_minus_ftf);
  w.key("a_minus_ztf");
  w.value(p.residuals.a_minus_ztf);
  w.key("z_minus_fat");
  w.value(p.residuals.z_minus_fat);
  w.end_object();
  w.end_object();
}

void write_reduction(JsonWriter& w, const ReductionSection& r) {
  w.key("reduction");
  w.begin_object();
  w.key("policy");
  w.value(std::string_view(r.policy));
  w.key("k");
  w.value(r.k);
  w.key("explained");
  w.value(r.explained);
  w.key("lambda_red");
  write_vector(w, r.lambda_red);
  w.key("lambda_red_inverse");
  write_vector(w, r.lambda_red_inverse);
  w.key("v_red");
  write_matrix(w, r.v_red);
  w.key("a_red");
  write_matrix(w, r.a_red);
  w.key("f_red_variances");
  write_vector(w, r.f_red_variances);
  w.end_object();
}

}  // namespace

std::string write_report(const AnalysisResult& result) {
  JsonWriter w;
  w.begin_object();
  write_dataset(w, result.dataset);
  if (result.descriptive) write_descriptive(w, *result.descriptive);
  if (result.adequacy) write_adequacy(w, *result.adequacy);
  if (result.pca) write_pca(w, *result.pca);
  if (result.reduction) write_reduction(w, *result.reduction);
  w.end_object();
  return w.take();
}

}  // namespace pcakit
