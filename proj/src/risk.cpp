#include "freqrobust/risk.hpp"

#include <cmath>
#include <stdexcept>

namespace freqrobust {

namespace {

void check_dim(const Eigen::VectorXd& w, const SpectrumSpec& spec, const char* who) {
  if (w.size() != spec.d)
    throw std::invalid_argument(std::string(who) + ": weight length does not match spec");
}

double residual_variance(const Eigen::VectorXd& w_freq, const SpectrumSpec& spec) {
  return (spec.variances.array() * (w_freq - spec.true_weights).array().square()).sum();
}

}  // namespace

double standard_risk(const Eigen::VectorXd& w_freq, const SpectrumSpec& spec) {
  check_dim(w_freq, spec, "standard_risk");
  return 0.5 * residual_variance(w_freq, spec);
}

double adversarial_risk(const Eigen::VectorXd& w_freq, const SpectrumSpec& spec,
                        double epsilon) {
  check_dim(w_freq, spec, "adversarial_risk");
  if (epsilon < 0.0) throw std::invalid_argument("adversarial_risk: negative radius");
  const double s2 = residual_variance(w_freq, spec);
  const double s = std::sqrt(s2);
  const double norm = w_freq.norm();
  const double two_over_pi = 2.0 / 3.14159265358979323846;
  return 0.5 * s2 + epsilon * std::sqrt(two_over_pi) * s * norm +
         0.5 * epsilon * epsilon * norm * norm;
}

double residual(const Eigen::VectorXd& x_freq, const Eigen::VectorXd& w_freq,
                const SpectrumSpec& spec) {
  check_dim(w_freq, spec, "residual");
  if (x_freq.size() != spec.d)
    throw std::invalid_argument("residual: input length does not match spec");
  return x_freq.dot(w_freq - spec.true_weights);
}

Eigen::VectorXd worst_case_perturbation(const Eigen::VectorXd& x_freq,
                                        const Eigen::VectorXd& w_freq,
                                        const SpectrumSpec& spec, double epsilon) {
  const double r = residual(x_freq, w_freq, spec);
  const double norm = w_freq.norm();
  if (norm == 0.0) return Eigen::VectorXd::Zero(spec.d);
  const double sign = (r < 0.0) ? -1.0 : 1.0;
  return (epsilon * sign / norm) * w_freq;
}

double per_sample_adversarial_loss(const Eigen::VectorXd& x_freq,
                                   const Eigen::VectorXd& w_freq,
                                   const SpectrumSpec& spec, double epsilon) {
  const double r = residual(x_freq, w_freq, spec);
  const double m = std::abs(r) + epsilon * w_freq.norm();
  return 0.5 * m * m;
}

double risk_of_gd_solution(const SpectrumSpec& spec, const Eigen::VectorXd& w0_freq,
                           double epsilon) {
  check_dim(w0_freq, spec, "risk_of_gd_solution");
  double norm2 = 0.0;
  std::vector<bool> is_irrelevant(static_cast<std::size_t>(spec.d), false);
  for (int idx : spec.irrelevant) is_irrelevant[static_cast<std::size_t>(idx)] = true;
  for (int k = 0; k < spec.d; ++k) {
    const double wk = is_irrelevant[static_cast<std::size_t>(k)]
                          ? w0_freq[k]
                          : spec.true_weights[k];
    norm2 += wk * wk;
  }
  return 0.5 * epsilon * epsilon * norm2;
}

}  // namespace freqrobust
