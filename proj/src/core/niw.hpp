#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace mergm {

// Normal-Inverse-Wishart parameters (mu0, kappa0, Lambda0, nu0); the same
// shape serves as prior and as full-conditional posterior.
struct NIWParams {
  Eigen::VectorXd mu;
  double kappa = 1.0;
  Eigen::MatrixXd lambda;
  double nu = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(mu.size()); }
  void validate() const;
};

// Current hierarchical state (mu, Sigma).
struct HyperState {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
};

// Conjugate update of the NIW prior given the layer parameter vectors.
NIWParams niw_full_conditional(const NIWParams& prior, const std::vector<Eigen::VectorXd>& phi);

// Sigma ~ InvWishart(Lambda1, nu1), mu | Sigma ~ N(mu1, Sigma / kappa1).
HyperState sample_hyper(const NIWParams& posterior, Rng& rng);

Eigen::MatrixXd sample_inverse_wishart(const Eigen::MatrixXd& scale, double dof, Rng& rng);

Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, Rng& rng);

// Multivariate normal log-density with a cached Cholesky factor.
class MvnDensity {
 public:
  MvnDensity(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

  double logpdf(const Eigen::VectorXd& x) const;
  Eigen::VectorXd sample(Rng& rng) const;
  const Eigen::VectorXd& mean() const { return mean_; }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd chol_lower_;
  double log_norm_const_;
};

}  // namespace mergm
