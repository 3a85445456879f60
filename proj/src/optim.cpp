#include "freqrobust/optim.hpp"

#include <cmath>
#include <stdexcept>

#include "freqrobust/dct.hpp"
#include "freqrobust/risk.hpp"
#include "freqrobust/rng.hpp"

namespace freqrobust {

void validate_config(const OptimizerConfig& config) {
  if (!(config.eta > 0.0) || !std::isfinite(config.eta))
    throw std::invalid_argument("optimizer config: eta must be positive and finite");
  if (!(config.beta1 > 0.0 && config.beta1 <= 1.0))
    throw std::invalid_argument("optimizer config: beta1 must lie in (0, 1]");
  if (!(config.beta2 > 0.0 && config.beta2 <= 1.0))
    throw std::invalid_argument("optimizer config: beta2 must lie in (0, 1]");
  if (!(config.eps_div >= 0.0) || !std::isfinite(config.eps_div))
    throw std::invalid_argument("optimizer config: eps_div must be nonnegative");
  if (config.gradient_mode == GradientMode::minibatch && config.batch_size < 1)
    throw std::invalid_argument("optimizer config: batch_size must be >= 1");
}

Eigen::VectorXd population_gradient(const LinearState& state, const SpectrumSpec& spec) {
  const DctBasis& basis = dct_matrix(spec.d);
  const Eigen::VectorXd w_freq = basis.matrix * state.w;
  const Eigen::VectorXd g_freq =
      (spec.variances.array() * (w_freq - spec.true_weights).array()).matrix();
  return basis.matrix.transpose() * g_freq;
}

Eigen::VectorXd minibatch_gradient(const LinearState& state, const SampleBatch& batch) {
  const auto n = batch.inputs.rows();
  if (n == 0) throw std::domain_error("minibatch_gradient: empty batch");
  const Eigen::VectorXd residuals = batch.inputs * state.w - batch.targets;
  return batch.inputs.transpose() * residuals / static_cast<double>(n);
}

Eigen::ArrayXd update_direction(const Eigen::ArrayXd& grad, const OptimizerConfig& config,
                                MomentState& moments) {
  if (!grad.allFinite())
    throw std::runtime_error("update_direction: non-finite gradient, aborting run");
  switch (config.kind) {
    case OptimizerKind::gd:
      return grad;
    case OptimizerKind::signgd:
      return grad.sign();
    case OptimizerKind::adam:
    case OptimizerKind::rmsprop: {
      if (moments.m.size() != grad.size()) {
        moments.m = Eigen::ArrayXd::Zero(grad.size());
        moments.v = Eigen::ArrayXd::Zero(grad.size());
      }
      const double b1 = (config.kind == OptimizerKind::rmsprop) ? 1.0 : config.beta1;
      moments.m = b1 * grad + (1.0 - b1) * moments.m;
      moments.v = config.beta2 * grad.square() + (1.0 - config.beta2) * moments.v;
      Eigen::ArrayXd direction(grad.size());
      for (Eigen::Index i = 0; i < grad.size(); ++i) {
        const double denom = std::sqrt(moments.v[i]) + config.eps_div;
        if (denom == 0.0) {
          // v can underflow to 0 while m = g is a subnormal; the real-valued
          // ratio m / sqrt(m^2) is then sign(m).
          direction[i] = (moments.m[i] > 0.0) ? 1.0 : (moments.m[i] < 0.0 ? -1.0 : 0.0);
        } else {
          direction[i] = moments.m[i] / denom;
        }
      }
      return direction;
    }
  }
  throw std::logic_error("update_direction: unknown optimizer kind");
}

void optimizer_step(Eigen::ArrayXd& param, const Eigen::ArrayXd& grad,
                    const OptimizerConfig& config, MomentState& moments) {
  param -= config.eta * update_direction(grad, config, moments);
}

LinearState step(const LinearState& state, const Eigen::VectorXd& grad,
                 const OptimizerConfig& config, MomentState& moments) {
  LinearState next = state;
  Eigen::ArrayXd param = next.w.array();
  optimizer_step(param, grad.array(), config, moments);
  next.w = param.matrix();
  return next;
}

Trajectory train(const SpectrumSpec& spec, const Eigen::VectorXd& w0_spatial,
                 const OptimizerConfig& config, long steps, double epsilon) {
  validate_config(config);
  if (steps < 0) throw std::invalid_argument("train: negative step count");
  if (w0_spatial.size() != spec.d)
    throw std::invalid_argument("train: w0 length does not match spec");

  const DctBasis& basis = dct_matrix(spec.d);
  Eigen::VectorXd e = basis.matrix * w0_spatial - spec.true_weights;

  Trajectory traj;
  traj.eta = config.eta;
  traj.epsilon = epsilon;
  traj.e.resize(steps + 1, spec.d);
  traj.standard.resize(static_cast<std::size_t>(steps) + 1);
  traj.adversarial.resize(static_cast<std::size_t>(steps) + 1);
  const bool pair = (spec.d == 3);
  if (pair) {
    traj.a.resize(static_cast<std::size_t>(steps) + 1);
    traj.b.resize(static_cast<std::size_t>(steps) + 1);
  }
  const double fa = std::sqrt(3.0) / 3.0 * spec.variances[0];
  const double fb = pair ? std::sqrt(2.0) / 2.0 * spec.variances[1] : 0.0;

  const bool diagonal_gd = (config.kind == OptimizerKind::gd &&
                            config.gradient_mode == GradientMode::population);
  MomentState moments;
  Eigen::VectorXd w_freq(spec.d);

  auto record = [&](long t) {
    traj.e.row(t) = e;
    w_freq = spec.true_weights + e;
    traj.standard[static_cast<std::size_t>(t)] = standard_risk(w_freq, spec);
    traj.adversarial[static_cast<std::size_t>(t)] =
        adversarial_risk(w_freq, spec, epsilon);
    if (pair) {
      traj.a[static_cast<std::size_t>(t)] = fa * e[0];
      traj.b[static_cast<std::size_t>(t)] = fb * e[1];
    }
  };

  for (long t = 0; t < steps; ++t) {
    record(t);
    if (diagonal_gd) {
      e -= config.eta * (spec.variances.array() * e.array()).matrix();
      continue;
    }
    Eigen::VectorXd g_spatial;
    if (config.gradient_mode == GradientMode::population) {
      g_spatial = basis.matrix.transpose() *
                  (spec.variances.array() * e.array()).matrix();
    } else {
      const SampleBatch batch =
          sample(spec, config.batch_size,
                 derive_seed(config.batch_seed, static_cast<std::uint64_t>(t)));
      LinearState state{basis.matrix.transpose() * (spec.true_weights + e)};
      g_spatial = minibatch_gradient(state, batch);
    }
    const Eigen::ArrayXd direction = update_direction(g_spatial.array(), config, moments);
    e -= config.eta * (basis.matrix * direction.matrix());
  }
  record(steps);
  return traj;
}

}  // namespace freqrobust
