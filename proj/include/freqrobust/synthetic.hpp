#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace freqrobust {

// Linear-regression task defined in the frequency domain: inputs are Gaussian
// with diagonal spectral covariance, targets come from fixed spectral weights.
// Coordinates listed in `irrelevant` carry zero variance (and so never affect
// targets); index 0 is always kept relevant.
struct SpectrumSpec {
  int d = 0;
  Eigen::VectorXd variances;     // spectral variances, one per frequency
  Eigen::VectorXd true_weights;  // target weights, frequency domain
  std::vector<int> irrelevant;   // sorted unique indices with zero variance
};

// Validates the task description. Requirements: d >= 1, matching lengths,
// irrelevant indices unique and inside [1, d), variance exactly zero on
// irrelevant coordinates and strictly positive elsewhere.
SpectrumSpec make_spec(Eigen::VectorXd variances, Eigen::VectorXd true_weights,
                       std::vector<int> irrelevant);

struct SampleBatch {
  Eigen::MatrixXd inputs;   // n x d, spatial domain (rows are samples)
  Eigen::VectorXd targets;  // n
};

// Frequency-domain draws: row i, coordinate k ~ N(0, variances[k]); zero-variance
// coordinates are exactly 0.0. Deterministic per seed.
Eigen::MatrixXd sample_freq(const SpectrumSpec& spec, int n, std::uint64_t seed);

// Spatial-domain batch consistent with sample_freq under the same seed:
// inputs are the synthesized rows, targets are <row_freq, true_weights>.
SampleBatch sample(const SpectrumSpec& spec, int n, std::uint64_t seed);

// Input covariance in the spatial domain: C^T diag(variances) C.
Eigen::MatrixXd spatial_covariance(const SpectrumSpec& spec);

// The most robust zero-standard-risk solution: true weights with every
// irrelevant coordinate zeroed.
Eigen::VectorXd robust_minimizer(const SpectrumSpec& spec);

// Stable on-disk form with keys {"d","variances","true_weights","irrelevant"}.
nlohmann::json spec_to_json(const SpectrumSpec& spec);
SpectrumSpec spec_from_json(const nlohmann::json& j);

}  // namespace freqrobust
