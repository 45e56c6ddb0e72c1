#pragma once

#include <span>
#include <vector>

#include "ppdkit/math.hpp"
#include "ppdkit/rng.hpp"

namespace ppdkit {

class GaussianDist {
 public:
  GaussianDist(double mean, double variance);

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double sd() const { return std::sqrt(variance_); }
  double logpdf(double x) const { return log_normal_pdf(x, mean_, variance_); }
  double cdf(double x) const {
    return normal_cdf((x - mean_) / std::sqrt(variance_));
  }

 private:
  double mean_;
  double variance_;
};

double gaussian_sample(const GaussianDist& dist, SeededRng& rng);

class InvGammaDist {
 public:
  InvGammaDist(double shape, double scale);

  double shape() const { return shape_; }
  double scale() const { return scale_; }
  // Finite for shape > 1.
  double mean() const { return scale_ / (shape_ - 1.0); }
  double logpdf(double x) const;

 private:
  double shape_;
  double scale_;
};

// Draws sigma2 ~ IG(shape, scale) as 1/Gamma(shape, rate=scale).
double inv_gamma_sample(const InvGammaDist& dist, SeededRng& rng);

// Probability vector over classes c = 1..C. Construction renormalizes, so
// the stored entries are non-negative and sum to 1 within 1e-12.
class CategoricalDist {
 public:
  explicit CategoricalDist(std::vector<double> probs);
  static CategoricalDist from_log_weights(std::span<const double> log_w);

  int num_classes() const { return static_cast<int>(probs_.size()); }
  // Class ids are 1-based throughout.
  double prob(int c) const { return probs_.at(static_cast<size_t>(c - 1)); }
  double log_prob(int c) const { return std::log(prob(c)); }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

int categorical_sample(const CategoricalDist& dist, SeededRng& rng);

// Total-variation distance between two categorical distributions over the
// same class set: 0.5 * sum_c |p_c - q_c|.
double tv_distance(const CategoricalDist& p, const CategoricalDist& q);

// Normal-inverse-gamma prior on affine model parameters: beta ~ N(mean, cov)
// jointly with sigma2 ~ IG(shape, scale).
class NIGPrior {
 public:
  NIGPrior(Vec2 beta_mean, Mat2 beta_cov, double shape, double scale);

  const Vec2& beta_mean() const { return beta_mean_; }
  const Mat2& beta_cov() const { return beta_cov_; }
  double shape() const { return shape_; }
  double scale() const { return scale_; }
  InvGammaDist sigma2_prior() const { return {shape_, scale_}; }

 private:
  Vec2 beta_mean_;
  Mat2 beta_cov_;
  double shape_;
  double scale_;
};

}  // namespace ppdkit
