// Copyright 2026 The semdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semdd/bench/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "semdd/bench/stats.hpp"

namespace semdd::bench {

RegressionReport analyze_loglog(const std::vector<BenchmarkRecord>& records) {
  const auto n = static_cast<Eigen::Index>(records.size());
  if (n < 4) throw std::invalid_argument("log-log analysis needs at least 4 records");
  Vector<double> log_size(n), log_return(n), log_time(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = records[static_cast<std::size_t>(i)];
    if (r.graph_size == 0 || r.return_size == 0 || !(r.elapsed_ms > 0)) {
      throw std::invalid_argument("record " + std::to_string(i + 1) + " (" + r.label +
                                  ") has a non-positive value; logs are undefined");
    }
    log_size(i) = std::log(static_cast<double>(r.graph_size));
    log_return(i) = std::log(static_cast<double>(r.return_size));
    log_time(i) = std::log(r.elapsed_ms);
  }

  Matrix<double> X(n, 2);
  X.col(0) = log_size;
  X.col(1) = log_return;
  auto fit = ols<double>(X, log_time);

  RegressionReport rep;
  rep.n = records.size();
  rep.r_size_time = pearson(log_size, log_time);
  rep.r_return_time = pearson(log_return, log_time);
  rep.r_size_return = pearson(log_size, log_return);
  rep.intercept = fit.coefficients(0);
  rep.beta_size = fit.coefficients(1);
  rep.beta_return = fit.coefficients(2);
  rep.r_squared = fit.r_squared;
  rep.adjusted_r_squared = fit.adjusted_r_squared;
  rep.f_statistic = fit.f_statistic;
  rep.df_model = fit.df_model;
  rep.df_residual = fit.df_residual;
  rep.p_value = fit.p_value;
  return rep;
}

std::string format_p_value(double p) {
  if (p < 1e-12) return "< 1e-12";
  std::ostringstream os;
  os << std::setprecision(4) << p;
  return os.str();
}

std::string format_summary(const std::vector<QuerySummary>& summaries) {
  int width = 8;
  for (const auto& s : summaries) width = std::max(width, static_cast<int>(s.label.size()) + 2);
  std::ostringstream os;
  os << std::left << std::setw(width) << "Query" << std::right << std::setw(12) << "Graph" << std::setw(10) << "Return"
     << std::setw(12) << "Mean ms" << std::setw(10) << "SD ms" << "\n";
  os << std::fixed;
  for (const auto& s : summaries) {
    os << std::left << std::setw(width) << s.label << std::right << std::setw(12) << s.graph_size << std::setw(10)
       << s.return_size << std::setw(12) << std::setprecision(2) << s.mean_ms << std::setw(10) << s.sd_ms << "\n";
  }
  return os.str();
}

std::string format_report(const RegressionReport& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << "observations             " << r.n << "\n";
  os << "r(log size, log time)    " << r.r_size_time << "\n";
  os << "r(log return, log time)  " << r.r_return_time << "\n";
  os << "r(log size, log return)  " << r.r_size_return << "\n";
  os << "log time = " << r.intercept << " + " << r.beta_size << " * log size + " << r.beta_return
     << " * log return\n";
  os << "F = " << std::setprecision(2) << r.f_statistic << ", df = [" << r.df_model << ", " << r.df_residual
     << "], p " << (r.p_value < 1e-12 ? "" : "= ") << format_p_value(r.p_value) << ", R^2 = " << std::setprecision(4) << r.r_squared
     << ", adj R^2 = " << r.adjusted_r_squared << "\n";
  return os.str();
}

nlohmann::json to_json(const RegressionReport& r) {
  return {{"n", r.n},
          {"pearson", {{"log_size_log_time", r.r_size_time},
                       {"log_return_log_time", r.r_return_time},
                       {"log_size_log_return", r.r_size_return}}},
          {"coefficients", {{"intercept", r.intercept}, {"log_size", r.beta_size}, {"log_return", r.beta_return}}},
          {"r_squared", r.r_squared},
          {"adjusted_r_squared", r.adjusted_r_squared},
          {"f_statistic", r.f_statistic},
          {"df", {r.df_model, r.df_residual}},
          {"p_value", r.p_value},
          {"p_value_text", format_p_value(r.p_value)}};
}

nlohmann::json to_json(const std::vector<QuerySummary>& summaries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : summaries) {
    out.push_back({{"label", s.label},
                   {"graph_size", s.graph_size},
                   {"return_size", s.return_size},
                   {"n", s.n},
                   {"mean_ms", s.mean_ms},
                   {"sd_ms", std::isnan(s.sd_ms) ? nlohmann::json(nullptr) : nlohmann::json(s.sd_ms)}});
  }
  return out;
}

}  // namespace semdd::bench
