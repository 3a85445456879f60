#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freqrobust/optim.hpp"
#include "freqrobust/synthetic.hpp"

namespace freqrobust {

// Scaled driven-pair coordinates for the three-frequency signGD analysis:
//   A = (sqrt(3)/3) var0 e0,  B = (sqrt(2)/2) var1 e1.
// u is the largest per-step |A| quantum, v the per-step |B| quantum.
struct AbContext {
  double var0 = 0.0;
  double var1 = 0.0;
  double eta = 0.0;
  double u() const { return var0 * eta; }
  double v() const { return var1 * eta; }
  double ratio() const { return var1 / var0; }
};

// Requires d == 3 with exactly the third coordinate irrelevant.
AbContext ab_context(const SpectrumSpec& spec, double eta);

struct AbState {
  double A = 0.0;
  double B = 0.0;
  AbContext context;
};

AbState ab_state(const Eigen::VectorXd& e_freq, const SpectrumSpec& spec, double eta);

// R-labels tile the oscillation region |A| < u; P-labels classify initial
// magnitudes. P31/P41/P42 are finer descendants of P3/P4 kept for parity with
// the analysis; the classifier reports the coarse P-labels.
enum class Partition {
  R11, R12, R21, R22, R23, R31, R32, R33, R34,
  P1, P2, P3, P31, P4, P41, P42, P5, P6,
};

const char* partition_name(Partition p);

// True for the self-trapping subpartitions {R22, R31, R32, R33, R34}.
bool is_stationary(Partition p);

struct RLabel {
  Partition label;
  bool degenerate = false;  // within 1e-12 of a defining boundary
};

// Classifies (A, B) with |A| < u. Throws std::domain_error outside the region.
RLabel classify_r(double A, double B, const AbContext& ctx);

// Classifies initial magnitudes (a, b) = (|A(0)|, |B(0)|). Throws
// std::domain_error when var1/var0 is exactly 1/3 (indeterminate regime).
Partition classify_p(double a, double b, const AbContext& ctx);

// Predicted number of pre-oscillation steps satisfying |A(t)| <= |B(t)|.
// Exact integer for P1/P2/P3/P5/P6; a real-valued bracket for P4 (the theory
// does not pin the attained endpoint there).
struct CountPrediction {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;
};

CountPrediction predict_indicator_count(double a0, double b0, const AbContext& ctx);

// Ground truth for the predictor, measured on recorded A/B sequences: the
// count of steps t < T with |A(t)| <= |B(t)|, where T is the first index with
// |A(T)| < u. Empty when the sequence never reaches the oscillation region.
struct IndicatorCount {
  long count = 0;
  long transient_end = 0;
};

std::optional<IndicatorCount> measure_indicator_count(const std::vector<double>& a,
                                                      const std::vector<double>& b,
                                                      const AbContext& ctx);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct DeltaW2Prediction {
  CountPrediction count;
  Interval magnitude;   // predicted |w2(final) - w2(0)|
  Interval risk_ratio;  // predicted adversarial-risk ratio vs the gd limit
  Partition phase;      // P5 or P6
};

// Applies only when var1/var0 < 1/3 and the initial magnitudes land in P5 or
// P6; throws std::domain_error otherwise.
DeltaW2Prediction predict_delta_w2(const SpectrumSpec& spec,
                                   const Eigen::VectorXd& w0_freq, double eta);

// Closed-form signGD update for d == 3, as the triple added to (e0, e1, e2):
//   delta = -eta * (sqrt(3)/3 k0, sqrt(2)/2 k1, sqrt(6)/6 k2)
// with k0 = s+ + s0 + s-, k1 = s+ - s-, k2 = s+ - 2 s0 + s- and
// s0 = sign(A), s+ = sign(A+B), s- = sign(A-B).
Eigen::Vector3d signgd_update_3d(double A, double B, double eta);

struct AsymptoticsReport {
  double e0_max = 0.0, e0_bound = 0.0;
  bool e0_ok = false;
  double e1_max = 0.0, e1_bound = 0.0;
  bool e1_ok = false;
  double e2_drift = 0.0, drift_bound = 0.0;
  bool drift_ok = false;
  long transient_end = 0;  // first t with |e0(t)| <= sqrt(3) eta
  bool all_ok = false;
};

// Late-time envelope checks on a d == 3 trajectory: over the trailing 20% of
// iterations |e0| <= (2 sqrt(3)/3) eta + 1e-9 and |e1| <= sqrt(2) eta + 1e-9;
// the post-transient excursion of e2 stays within (2 sqrt(6)/3) eta + 1e-9.
// Throws std::runtime_error with fewer than 10 post-transient iterations.
AsymptoticsReport check_asymptotics(const Trajectory& traj, const AbContext& ctx);

// Largest |sum of sign A(t)| over all windows starting at or after `from`.
long max_abs_sign_window(const std::vector<double>& a, std::size_t from);

struct StationarityReport {
  bool stationary_ok = false;  // transient labels resolve within 3 steps and never pair up
  bool periodic_ok = false;    // trailing A,B are 2-periodic with alternating sign(A)
  long labeled = 0;
  std::string detail;          // empty when both checks pass
};

// Label-sequence checks on a recorded A/B run, starting at the first state
// inside |A| < u: (a) every transient-labeled state is followed by a
// stationary label within 3 steps (the final 3 states are exempt — no
// successors to inspect); (b) after the first stationary label, transient
// labels never occur twice in a row; (c) over the trailing 20%:
// |A(t+2) - A(t)| and |B(t+2) - B(t)| at most 1e-9 u, and sign(A) strictly
// alternates.
StationarityReport check_stationarity(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      const AbContext& ctx);

// Randomized prediction-vs-simulation sweep. Each accepted initialization
// builds a three-frequency task with w(0) = 0 in the frequency domain, runs
// signGD via train(), and compares the measured indicator count against
// predict_indicator_count plus the stationarity/periodicity checks.
struct SweepParams {
  int n_inits = 1000;
  std::uint64_t seed = 0;
  bool ratio_below_one_third = true;  // true: accept P5/P6; false: accept P4
  double var0_log10_lo = -3.0, var0_log10_hi = -1.0;
  double ratio_lo = 0.02, ratio_hi = 0.32;  // var1/var0 draw range
  double eta_log10_lo = -3.0, eta_log10_hi = -1.5;
  double init_lo = 1.05, init_hi = 400.0;  // |A0|, |B0| in units of u
  double epsilon = 1.4142135623730951;     // risk budget for recorded ratios
  long max_steps = 150000;
};

struct SweepRow {
  std::uint64_t seed = 0;  // derived per-initialization seed
  double a0 = 0.0, b0 = 0.0;
  Partition partition = Partition::P1;
  CountPrediction predicted;
  long simulated = 0;
  bool count_ok = false;
  bool stationary_ok = false;
  bool periodic_ok = false;
  // Risk-ratio columns; prediction only defined below ratio 1/3 (else NaN).
  double predicted_ratio_lo = 0.0, predicted_ratio_hi = 0.0;
  double simulated_ratio = 0.0;
};

std::vector<SweepRow> run_partition_sweep(const SweepParams& params);

}  // namespace freqrobust
