#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "freqrobust/synthetic.hpp"

namespace freqrobust {

enum class OptimizerKind { gd, signgd, adam, rmsprop };

enum class GradientMode { population, minibatch };

// Moment convention: the incoming gradient enters with weight beta, history
// keeps (1 - beta):
//   m <- beta1 * g   + (1 - beta1) * m
//   v <- beta2 * g^2 + (1 - beta2) * v
//   w <- w - eta * m / (sqrt(v) + eps_div)
// No bias correction. beta1 = beta2 = 1 with eps_div = 0 reduces adam to
// signgd; rmsprop always runs with m = g and only smooths v.
struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::gd;
  double eta = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_div = 1e-8;
  GradientMode gradient_mode = GradientMode::population;
  int batch_size = 1000;        // minibatch mode only
  std::uint64_t batch_seed = 0;  // minibatch mode only
};

// Throws std::invalid_argument unless eta > 0, beta1/beta2 in (0,1],
// eps_div >= 0, and batch_size >= 1 in minibatch mode.
void validate_config(const OptimizerConfig& config);

// Spatial-domain weights of the linear model.
struct LinearState {
  Eigen::VectorXd w;
};

// m/v accumulators; zero-initialized to the gradient's shape on first use.
struct MomentState {
  Eigen::ArrayXd m, v;
};

// Gradient of the population risk at the current weights: Sigma (w - w*).
Eigen::VectorXd population_gradient(const LinearState& state, const SpectrumSpec& spec);

// Empirical gradient (1/n) sum_k (<x_k, w> - y_k) x_k. Throws on empty batch.
Eigen::VectorXd minibatch_gradient(const LinearState& state, const SampleBatch& batch);

// Direction u such that the parameter update is param -= eta * u.
// gd: g; signgd: sign(g) with sign(0) = 0; adam/rmsprop: m / (sqrt(v) + eps_div).
// A zero denominator (possible when eps_div = 0 and v underflows) falls back
// to sign(m), the real-valued limit of the ratio. Throws on non-finite g.
Eigen::ArrayXd update_direction(const Eigen::ArrayXd& grad, const OptimizerConfig& config,
                                MomentState& moments);

// In-place update param -= eta * update_direction(grad).
void optimizer_step(Eigen::ArrayXd& param, const Eigen::ArrayXd& grad,
                    const OptimizerConfig& config, MomentState& moments);

// One update of the spatial linear state.
LinearState step(const LinearState& state, const Eigen::VectorXd& grad,
                 const OptimizerConfig& config, MomentState& moments);

// Per-iteration record of a linear-task run, kept in the frequency domain.
// Row t of `e` is the error w~(t) - w~*; `a`/`b` hold the driven-pair
// coordinates (sqrt(3)/3 var0 e0, sqrt(2)/2 var1 e1) when d == 3.
struct Trajectory {
  Eigen::MatrixXd e;  // (steps+1) x d
  std::vector<double> a, b;
  std::vector<double> standard, adversarial;
  double eta = 0.0;
  double epsilon = 0.0;
};

// Runs `steps` updates from the spatial initialization w0, recording the
// frequency-domain error and both risks at every iterate (steps+1 records).
// The iterate is carried in the frequency domain, where the population
// gradient is diagonal; zero-variance coordinates therefore stay untouched
// by gd exactly, not just approximately. Adaptive kinds accumulate their
// moments on the spatial gradient and map each update back.
Trajectory train(const SpectrumSpec& spec, const Eigen::VectorXd& w0_spatial,
                 const OptimizerConfig& config, long steps, double epsilon);

}  // namespace freqrobust
