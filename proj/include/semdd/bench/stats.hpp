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

// Correlation and least squares on Eigen vectors. Everything is templated on
// the scalar so tests can run the same code in long double.

#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/special_functions/beta.hpp>

namespace semdd::bench {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class SingularDesign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
typename Derived::Scalar mean(const Eigen::MatrixBase<Derived>& x) {
  return x.mean();
}

// Sample standard deviation (n - 1 divisor).
template <typename Derived>
typename Derived::Scalar sample_sd(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() < 2) throw std::invalid_argument("sample SD needs at least two values");
  Scalar m = x.mean();
  return std::sqrt((x.array() - m).square().sum() / Scalar(x.size() - 1));
}

template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar pearson(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("pearson: need two equal-length series");
  auto dx = (x.array() - x.mean()).matrix();
  auto dy = (y.array() - y.mean()).matrix();
  Scalar sxx = dx.squaredNorm();
  Scalar syy = dy.squaredNorm();
  if (sxx == Scalar(0) || syy == Scalar(0)) throw std::invalid_argument("pearson: constant series");
  Scalar r = dx.dot(dy) / std::sqrt(sxx * syy);
  // Rounding can push |r| a hair past 1.
  return std::max(Scalar(-1), std::min(Scalar(1), r));
}

// P(F > f) for F ~ F(d1, d2).
inline double f_survival(double f, double d1, double d2) {
  if (!(f > 0)) return 1.0;
  return boost::math::ibeta(d2 / 2, d1 / 2, d2 / (d2 + d1 * f));
}

template <typename Scalar>
struct OlsFit {
  Vector<Scalar> coefficients;  // intercept first
  Scalar r_squared = 0;
  Scalar adjusted_r_squared = 0;
  Scalar f_statistic = 0;
  int df_model = 0;
  int df_residual = 0;
  double p_value = 1;
  Scalar rss = 0;
  Scalar tss = 0;
};

// y ~ 1 + X. Throws SingularDesign when [1 X] is rank deficient.
template <typename Scalar>
OlsFit<Scalar> ols(const Matrix<Scalar>& X, const Vector<Scalar>& y) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (y.size() != n) throw std::invalid_argument("ols: row count mismatch");
  if (n <= k + 1) throw std::invalid_argument("ols: need more observations than parameters");

  Matrix<Scalar> design(n, k + 1);
  design.col(0).setOnes();
  design.rightCols(k) = X;

  Eigen::ColPivHouseholderQR<Matrix<Scalar>> qr(design);
  qr.setThreshold(Scalar(1e-10));
  if (qr.rank() < k + 1) throw SingularDesign("ols: design matrix is rank deficient (collinear predictors)");

  OlsFit<Scalar> fit;
  fit.coefficients = qr.solve(y);
  Vector<Scalar> residual = y - design * fit.coefficients;
  fit.rss = residual.squaredNorm();
  fit.tss = (y.array() - y.mean()).square().sum();
  if (fit.tss == Scalar(0)) throw SingularDesign("ols: response is constant");
  fit.df_model = static_cast<int>(k);
  fit.df_residual = static_cast<int>(n - k - 1);
  fit.r_squared = Scalar(1) - fit.rss / fit.tss;
  fit.adjusted_r_squared =
      Scalar(1) - (Scalar(1) - fit.r_squared) * Scalar(n - 1) / Scalar(fit.df_residual);
  fit.f_statistic = (fit.r_squared / Scalar(fit.df_model)) / ((Scalar(1) - fit.r_squared) / Scalar(fit.df_residual));
  fit.p_value = f_survival(static_cast<double>(fit.f_statistic), fit.df_model, fit.df_residual);
  return fit;
}

}  // namespace semdd::bench
