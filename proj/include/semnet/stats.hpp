#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

namespace semnet {

// ---- Normal distribution ----

double normal_pdf(double x);
double normal_cdf(double x);

// Inverse of the standard normal CDF (Wichura's PPND16 rational
// approximation, accurate to ~1e-15 over (0, 1)).
double normal_quantile(double p);

// ---- Truncated normal on [lower, upper] ----

struct TruncatedNormal {
  double location = 0.0;
  double scale = 1.0;
  double lower = 0.0;
  double upper = 1.0;

  double mean() const;
  double cdf(double x) const;
  // Maps a uniform (0,1) variate to a draw; degenerate scale == 0 returns the
  // location clamped to the bounds.
  double quantile(double u) const;
};

// ---- Student's t (used by the power simulation) ----

double regularized_incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double dof);
double student_t_quantile(double p, double dof);

// ---- Rank statistics ----

// Fractional (average) ranks, 1-based; ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation; empty when either side has zero variance or n < 2.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Spearman rank correlation with average-rank tie handling; empty when either
// side has zero rank variance.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

// Eigen-expression overloads so callers can correlate rows/columns without
// materializing copies.
template <typename DerivedA, typename DerivedB>
std::optional<double> pearson(const Eigen::MatrixBase<DerivedA>& x,
                              const Eigen::MatrixBase<DerivedB>& y) {
  const Eigen::VectorXd xe = x.template cast<double>();
  const Eigen::VectorXd ye = y.template cast<double>();
  return pearson(std::span<const double>(xe.data(), static_cast<std::size_t>(xe.size())),
                 std::span<const double>(ye.data(), static_cast<std::size_t>(ye.size())));
}

template <typename DerivedA, typename DerivedB>
std::optional<double> spearman(const Eigen::MatrixBase<DerivedA>& x,
                               const Eigen::MatrixBase<DerivedB>& y) {
  const Eigen::VectorXd xe = x.template cast<double>();
  const Eigen::VectorXd ye = y.template cast<double>();
  return spearman(std::span<const double>(xe.data(), static_cast<std::size_t>(xe.size())),
                  std::span<const double>(ye.data(), static_cast<std::size_t>(ye.size())));
}

}  // namespace semnet
