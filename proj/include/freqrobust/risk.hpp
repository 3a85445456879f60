#pragma once

#include <Eigen/Dense>

#include "freqrobust/synthetic.hpp"

namespace freqrobust {

// Closed-form risks for the linear task. All weight vectors live in the
// frequency domain; residual variance is s^2 = sum_k var_k (w_k - w*_k)^2.

// Expected clean squared-error loss: s^2 / 2.
double standard_risk(const Eigen::VectorXd& w_freq, const SpectrumSpec& spec);

// Expected loss under the per-sample worst l2 perturbation of radius epsilon:
//   s^2/2 + epsilon * sqrt(2/pi) * s * ||w|| + epsilon^2/2 * ||w||^2.
double adversarial_risk(const Eigen::VectorXd& w_freq, const SpectrumSpec& spec,
                        double epsilon);

// The residual the model sees on a clean input: <x_freq, w - w*>.
double residual(const Eigen::VectorXd& x_freq, const Eigen::VectorXd& w_freq,
                const SpectrumSpec& spec);

// Input perturbation maximizing the squared loss at radius epsilon:
//   epsilon * sign(residual) * w / ||w||   (zero weights give a zero vector;
// a zero residual takes the positive branch, either sign attains the max).
Eigen::VectorXd worst_case_perturbation(const Eigen::VectorXd& x_freq,
                                        const Eigen::VectorXd& w_freq,
                                        const SpectrumSpec& spec, double epsilon);

// Loss value attained at worst_case_perturbation: (|r| + epsilon ||w||)^2 / 2.
double per_sample_adversarial_loss(const Eigen::VectorXd& x_freq,
                                   const Eigen::VectorXd& w_freq,
                                   const SpectrumSpec& spec, double epsilon);

// Adversarial risk of the gradient-descent limit from w0: relevant
// coordinates converge to the true weights, irrelevant ones never move, so
// the clean residual vanishes and only the norm term survives:
//   epsilon^2/2 * (sum_relevant w*_k^2 + sum_irrelevant w0_k^2).
double risk_of_gd_solution(const SpectrumSpec& spec, const Eigen::VectorXd& w0_freq,
                           double epsilon);

}  // namespace freqrobust
