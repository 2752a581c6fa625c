#include "core/niw.hpp"

#include <cmath>
#include <sstream>
#include <numbers>

namespace mergm {

namespace {

// Lower Cholesky factor; rejects non-SPD input.
Eigen::MatrixXd chol_lower_or_fail(const Eigen::MatrixXd& m, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    fail_numeric(std::string("Cholesky factorization of ") + what + " failed; matrix is not positive-definite");
  return llt.matrixL();
}

}  // namespace

void NIWParams::validate() const {
  const auto r = mu.size();
  if (r < 1) fail_usage("NIW parameters need dimension >= 1");
  if (lambda.rows() != r || lambda.cols() != r) fail_usage("NIW scale matrix has wrong shape");
  if (!lambda.isApprox(lambda.transpose(), 1e-12)) fail_usage("NIW scale matrix must be symmetric");
  if (!(kappa > 0.0)) fail_usage("NIW kappa must be > 0");
  if (!(nu > static_cast<double>(r) - 1.0)) fail_usage("NIW nu must exceed dim - 1");
  if (!lambda.allFinite()) fail_numeric("NIW scale matrix has non-finite entries");
  Eigen::LLT<Eigen::MatrixXd> llt(lambda);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "NIW scale matrix must be positive-definite; lambda = " << lambda << " kappa=" << kappa << " nu=" << nu;
    fail_usage(os.str());
  }
}

NIWParams niw_full_conditional(const NIWParams& prior, const std::vector<Eigen::VectorXd>& phi) {
  prior.validate();
  const auto r = prior.mu.size();
  const double w_count = static_cast<double>(phi.size());
  if (phi.empty()) return prior;

  Eigen::VectorXd phi_bar = Eigen::VectorXd::Zero(r);
  for (const auto& p : phi) {
    if (p.size() != r) fail_usage("layer parameter vector has wrong dimension");
    phi_bar += p;
  }
  phi_bar /= w_count;

  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(r, r);
  for (const auto& p : phi) {
    const Eigen::VectorXd d = p - phi_bar;
    scatter += d * d.transpose();
  }

  NIWParams post;
  post.kappa = prior.kappa + w_count;
  post.nu = prior.nu + w_count;
  post.mu = (prior.kappa * prior.mu + w_count * phi_bar) / post.kappa;
  const Eigen::VectorXd dev = phi_bar - prior.mu;
  post.lambda = prior.lambda + scatter + (prior.kappa * w_count / post.kappa) * dev * dev.transpose();
  return post;
}

Eigen::MatrixXd sample_inverse_wishart(const Eigen::MatrixXd& scale, double dof, Rng& rng) {
  const auto r = scale.rows();
  if (!(dof > static_cast<double>(r) - 1.0)) fail_usage("inverse-Wishart dof must exceed dim - 1");
  const Eigen::MatrixXd L = chol_lower_or_fail(scale, "the inverse-Wishart scale");

  // Bartlett factor of a Wishart(scale^-1, dof) draw; the inverse-Wishart
  // draw is then (L A^-T)(L A^-T)^T.
  Eigen::MatrixXd bartlett = Eigen::MatrixXd::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    bartlett(i, i) = std::sqrt(rng.chi_squared(dof - static_cast<double>(i)));
    for (Eigen::Index j = 0; j < i; ++j) bartlett(i, j) = rng.normal();
  }
  // Sigma = (L A^-T)(L A^-T)^T; solve A M^T = L^T for M^T.
  const Eigen::MatrixXd mt = bartlett.triangularView<Eigen::Lower>().solve(L.transpose().eval());
  return mt.transpose() * mt;
}

HyperState sample_hyper(const NIWParams& posterior, Rng& rng) {
  posterior.validate();
  HyperState state;
  state.sigma = sample_inverse_wishart(posterior.lambda, posterior.nu, rng);
  const Eigen::MatrixXd L = chol_lower_or_fail(state.sigma, "the sampled covariance");
  Eigen::VectorXd z(posterior.mu.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = rng.normal();
  state.mu = posterior.mu + (L * z) / std::sqrt(posterior.kappa);
  return state;
}

Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, Rng& rng) {
  const Eigen::MatrixXd L = chol_lower_or_fail(cov, "the covariance");
  Eigen::VectorXd z(mean.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = rng.normal();
  return mean + L * z;
}

MvnDensity::MvnDensity(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) : mean_(mean) {
  chol_lower_ = chol_lower_or_fail(cov, "the covariance");
  double log_det = 0.0;
  for (Eigen::Index k = 0; k < chol_lower_.rows(); ++k) log_det += std::log(chol_lower_(k, k));
  log_norm_const_ =
      -0.5 * static_cast<double>(mean_.size()) * std::log(2.0 * std::numbers::pi) - log_det;
}

double MvnDensity::logpdf(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd u = chol_lower_.triangularView<Eigen::Lower>().solve(x - mean_);
  return log_norm_const_ - 0.5 * u.squaredNorm();
}

Eigen::VectorXd MvnDensity::sample(Rng& rng) const {
  Eigen::VectorXd z(mean_.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = rng.normal();
  return mean_ + chol_lower_ * z;
}

}  // namespace mergm
