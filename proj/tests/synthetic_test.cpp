#include "freqrobust/synthetic.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "freqrobust/dct.hpp"

namespace freqrobust {
namespace {

SpectrumSpec three_freq_spec() {
  Eigen::VectorXd variances(3), weights(3);
  variances << 0.01, 0.0025, 0.0;
  weights << 5.0, 10.0, 0.0;
  return make_spec(variances, weights, {2});
}

TEST(SyntheticTest, MakeSpecValidates) {
  Eigen::VectorXd v(3), w(3);
  v << 1.0, 0.5, 0.0;
  w << 1.0, 2.0, 3.0;
  EXPECT_NO_THROW(make_spec(v, w, {2}));

  EXPECT_THROW(make_spec(v, w, {0}), std::invalid_argument);   // DC must stay relevant
  EXPECT_THROW(make_spec(v, w, {3}), std::invalid_argument);   // out of range
  EXPECT_THROW(make_spec(v, w, {2, 2}), std::invalid_argument);  // duplicate
  EXPECT_THROW(make_spec(v, w, {}), std::invalid_argument);  // zero variance not declared

  Eigen::VectorXd v2 = v;
  v2[2] = 0.1;
  EXPECT_THROW(make_spec(v2, w, {2}), std::invalid_argument);  // declared but nonzero

  Eigen::VectorXd w4(4);
  w4.setZero();
  EXPECT_THROW(make_spec(v, w4, {2}), std::invalid_argument);  // length mismatch
}

TEST(SyntheticTest, MakeSpecSortsIrrelevantIndices) {
  Eigen::VectorXd v(4), w(4);
  v << 1.0, 0.0, 0.5, 0.0;
  w << 1.0, 2.0, 3.0, 4.0;
  const SpectrumSpec spec = make_spec(v, w, {3, 1});
  EXPECT_EQ(spec.irrelevant, (std::vector<int>{1, 3}));
}

TEST(SyntheticTest, IrrelevantFrequenciesAreExactlyZero) {
  const SpectrumSpec spec = three_freq_spec();
  const Eigen::MatrixXd freq = sample_freq(spec, 500, 7);
  for (int i = 0; i < freq.rows(); ++i) {
    ASSERT_EQ(freq(i, 2), 0.0) << "row " << i;
  }
}

TEST(SyntheticTest, TargetsMatchFrequencyInnerProduct) {
  const SpectrumSpec spec = three_freq_spec();
  const Eigen::MatrixXd freq = sample_freq(spec, 64, 11);
  const SampleBatch batch = sample(spec, 64, 11);
  for (int i = 0; i < 64; ++i) {
    ASSERT_EQ(batch.targets[i], freq.row(i).dot(spec.true_weights)) << "row " << i;
  }
}

TEST(SyntheticTest, SpatialInputsSynthesizeFrequencyDraws) {
  const SpectrumSpec spec = three_freq_spec();
  const Eigen::MatrixXd freq = sample_freq(spec, 32, 13);
  const SampleBatch batch = sample(spec, 32, 13);
  const DctBasis& basis = dct_matrix(spec.d);
  for (int i = 0; i < 32; ++i) {
    const Eigen::VectorXd expected = dct_inverse(freq.row(i).transpose(), basis);
    ASSERT_LT((batch.inputs.row(i).transpose() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(SyntheticTest, SamplingIsDeterministicPerSeed) {
  const SpectrumSpec spec = three_freq_spec();
  const SampleBatch a = sample(spec, 16, 99);
  const SampleBatch b = sample(spec, 16, 99);
  const SampleBatch c = sample(spec, 16, 100);
  EXPECT_EQ((a.inputs - b.inputs).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((a.targets - b.targets).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_GT((a.inputs - c.inputs).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SyntheticTest, EmpiricalMomentsMatchSpectrum) {
  const SpectrumSpec spec = three_freq_spec();
  const int n = 200000;
  const Eigen::MatrixXd freq = sample_freq(spec, n, 12345);
  for (int k = 0; k < 2; ++k) {
    const double mean = freq.col(k).mean();
    const double var = (freq.col(k).array() - mean).square().sum() / (n - 1);
    EXPECT_NEAR(mean, 0.0, 0.01 * std::sqrt(spec.variances[k]) + 1e-4);
    EXPECT_NEAR(var, spec.variances[k], 0.02 * spec.variances[k]);
  }
  const double cross =
      (freq.col(0).array() * freq.col(1).array()).sum() / (n - 1);
  EXPECT_NEAR(cross, 0.0, 0.02 * std::sqrt(spec.variances[0] * spec.variances[1]));
}

TEST(SyntheticTest, SpatialCovarianceDiagonalizesInFrequencyDomain) {
  const SpectrumSpec spec = three_freq_spec();
  const Eigen::MatrixXd sigma = spatial_covariance(spec);
  EXPECT_LT((sigma - sigma.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  const DctBasis& basis = dct_matrix(spec.d);
  const Eigen::MatrixXd back = basis.matrix * sigma * basis.matrix.transpose();
  Eigen::MatrixXd expected = spec.variances.asDiagonal();
  EXPECT_LT((back - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SyntheticTest, SpatialCovarianceMatchesEmpirical) {
  const SpectrumSpec spec = three_freq_spec();
  const int n = 200000;
  const SampleBatch batch = sample(spec, n, 777);
  const Eigen::MatrixXd centered =
      batch.inputs.rowwise() - batch.inputs.colwise().mean();
  const Eigen::MatrixXd empirical =
      centered.transpose() * centered / static_cast<double>(n - 1);
  EXPECT_LT((empirical - spatial_covariance(spec)).cwiseAbs().maxCoeff(), 3e-4);
}

TEST(SyntheticTest, RobustMinimizerZeroesIrrelevantCoordinates) {
  const SpectrumSpec spec = three_freq_spec();
  const Eigen::VectorXd w = robust_minimizer(spec);
  EXPECT_EQ(w[0], 5.0);
  EXPECT_EQ(w[1], 10.0);
  EXPECT_EQ(w[2], 0.0);
}

TEST(SyntheticTest, JsonRoundTripIsExact) {
  const SpectrumSpec spec = three_freq_spec();
  const nlohmann::json j = spec_to_json(spec);
  EXPECT_EQ(j.size(), 4u);
  for (const char* key : {"d", "variances", "true_weights", "irrelevant"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const SpectrumSpec back = spec_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.d, spec.d);
  EXPECT_EQ((back.variances - spec.variances).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((back.true_weights - spec.true_weights).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(back.irrelevant, spec.irrelevant);
}

TEST(SyntheticTest, JsonRejectsMissingKeys) {
  nlohmann::json j = spec_to_json(three_freq_spec());
  j.erase("variances");
  EXPECT_THROW(spec_from_json(j), std::invalid_argument);
}

}  // namespace
}  // namespace freqrobust
