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

// Log-log analysis of benchmark records: pairwise Pearson correlations and
// log(time) ~ log(graph size) + log(return size).

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/bench/harness.hpp"

namespace semdd::bench {

struct RegressionReport {
  std::size_t n = 0;
  double r_size_time = 0;
  double r_return_time = 0;
  double r_size_return = 0;
  double intercept = 0;
  double beta_size = 0;
  double beta_return = 0;
  double r_squared = 0;
  double adjusted_r_squared = 0;
  double f_statistic = 0;
  int df_model = 0;
  int df_residual = 0;
  double p_value = 1;
};

// Natural logs throughout. Throws std::invalid_argument for non-positive
// values (naming the record) or n < 4, SingularDesign for collinear
// predictors.
RegressionReport analyze_loglog(const std::vector<BenchmarkRecord>& records);

// "< 1e-12" below that bound, otherwise 4 significant digits.
std::string format_p_value(double p);

std::string format_summary(const std::vector<QuerySummary>& summaries);
std::string format_report(const RegressionReport& report);
nlohmann::json to_json(const RegressionReport& report);
nlohmann::json to_json(const std::vector<QuerySummary>& summaries);

}  // namespace semdd::bench
