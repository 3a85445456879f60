#include "freqrobust/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "freqrobust/dct.hpp"
#include "freqrobust/rng.hpp"

namespace freqrobust {

SpectrumSpec make_spec(Eigen::VectorXd variances, Eigen::VectorXd true_weights,
                       std::vector<int> irrelevant) {
  const int d = static_cast<int>(variances.size());
  if (d < 1) throw std::invalid_argument("make_spec: need at least one frequency");
  if (true_weights.size() != d)
    throw std::invalid_argument("make_spec: variances and true_weights length mismatch");

  std::sort(irrelevant.begin(), irrelevant.end());
  if (std::adjacent_find(irrelevant.begin(), irrelevant.end()) != irrelevant.end())
    throw std::invalid_argument("make_spec: duplicate irrelevant index");

  std::vector<bool> is_irrelevant(static_cast<std::size_t>(d), false);
  for (int idx : irrelevant) {
    if (idx == 0)
      throw std::invalid_argument("make_spec: index 0 cannot be irrelevant");
    if (idx < 0 || idx >= d)
      throw std::invalid_argument("make_spec: irrelevant index out of range");
    is_irrelevant[static_cast<std::size_t>(idx)] = true;
  }
  for (int k = 0; k < d; ++k) {
    const double v = variances[k];
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("make_spec: variances must be finite and nonnegative");
    if (is_irrelevant[static_cast<std::size_t>(k)]) {
      if (v != 0.0)
        throw std::invalid_argument("make_spec: irrelevant coordinate has nonzero variance");
    } else if (v <= 0.0) {
      throw std::invalid_argument("make_spec: relevant coordinate has zero variance");
    }
  }

  SpectrumSpec spec;
  spec.d = d;
  spec.variances = std::move(variances);
  spec.true_weights = std::move(true_weights);
  spec.irrelevant = std::move(irrelevant);
  return spec;
}

Eigen::MatrixXd sample_freq(const SpectrumSpec& spec, int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_freq: negative batch size");
  GaussianRng rng(seed);
  Eigen::VectorXd sd(spec.d);
  for (int k = 0; k < spec.d; ++k) sd[k] = std::sqrt(spec.variances[k]);
  Eigen::MatrixXd freq(n, spec.d);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < spec.d; ++k) freq(i, k) = sd[k] * rng.normal();
  }
  return freq;
}

SampleBatch sample(const SpectrumSpec& spec, int n, std::uint64_t seed) {
  const Eigen::MatrixXd freq = sample_freq(spec, n, seed);
  const DctBasis& basis = dct_matrix(spec.d);
  SampleBatch batch;
  // Row-wise synthesis: x = C^T x_freq, i.e. X = X_freq C in row-major batches.
  batch.inputs = freq * basis.matrix;
  batch.targets = freq * spec.true_weights;
  return batch;
}

Eigen::MatrixXd spatial_covariance(const SpectrumSpec& spec) {
  const DctBasis& basis = dct_matrix(spec.d);
  return basis.matrix.transpose() * spec.variances.asDiagonal() * basis.matrix;
}

Eigen::VectorXd robust_minimizer(const SpectrumSpec& spec) {
  Eigen::VectorXd w = spec.true_weights;
  for (int idx : spec.irrelevant) w[idx] = 0.0;
  return w;
}

nlohmann::json spec_to_json(const SpectrumSpec& spec) {
  nlohmann::json j;
  j["d"] = spec.d;
  j["variances"] = std::vector<double>(spec.variances.begin(), spec.variances.end());
  j["true_weights"] =
      std::vector<double>(spec.true_weights.begin(), spec.true_weights.end());
  j["irrelevant"] = spec.irrelevant;
  return j;
}

SpectrumSpec spec_from_json(const nlohmann::json& j) {
  for (const char* key : {"d", "variances", "true_weights", "irrelevant"}) {
    if (!j.contains(key))
      throw std::invalid_argument(std::string("spec_from_json: missing key ") + key);
  }
  const auto vars = j.at("variances").get<std::vector<double>>();
  const auto weights = j.at("true_weights").get<std::vector<double>>();
  const auto irrelevant = j.at("irrelevant").get<std::vector<int>>();
  const int d = j.at("d").get<int>();
  if (d != static_cast<int>(vars.size()))
    throw std::invalid_argument("spec_from_json: d disagrees with variances length");
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(vars.data(), vars.size());
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(weights.data(), weights.size());
  return make_spec(std::move(v), std::move(w), irrelevant);
}

}  // namespace freqrobust
