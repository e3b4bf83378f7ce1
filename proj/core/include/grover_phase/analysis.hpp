#pragma once

/**
 * @file
 * Closed-form success probabilities and (lambda, phase) sweeps.
 */

#include <vector>

#include "grover_phase/model.hpp"
#include "grover_phase/numerics.hpp"

namespace grover_phase {

/// sin^2((2k+1) arcsin(sqrt(lambda))) for the original algorithm.
double closed_form_probability(double lambda, int k);

/// floor(pi sqrt(1/lambda) / 4)
int optimal_iterations(double lambda);

/// Target amplitude after one Long step with oracle = diffusion phase phi,
/// m = sin^2(theta):  sqrt(m) [1 - 2 e^{i phi} - (1 - e^{i phi})^2 m].
Complex single_iteration_amplitude_long(double m, double phi);

/// 4m^3 - 8m^2 + 5m: one-step probability at phi = pi/2.
double single_iteration_probability(double m);

/// Minimum of single_iteration_probability on [m_min, 1], from the endpoints
/// and the interior critical points m = 1/2 and m = 5/6.
double probability_floor(double m_min);

/// `steps` evenly spaced points from lo to hi inclusive; {lo} when steps == 1.
std::vector<double> linspace(double lo, double hi, int steps);

struct SweepGrid {
    double lambda_min = 0.01;
    double lambda_max = 1.0;
    int lambda_steps = 101;
    double phase_min = 0.0;
    double phase_max = kTwoPi;
    int phase_steps = 101;
    int k = 5;
    AlgorithmKind kind = AlgorithmKind::Long;
};

/// Throws std::invalid_argument on an empty or inverted axis, lambda outside
/// (0, 1], or k < 0.
void validate(const SweepGrid &grid);

struct SweepRow {
    double lambda_;
    double phase;
    int k;
    double probability;
};

struct SweepResult {
    std::vector<SweepRow> rows; ///< lambda-major, then phase
};

/**
 * Builds the parameters of `kind` from one scalar phase.
 *
 * Direct mode: Long phi = phi_s = phase, LiDF tau = phase,
 * LiCM (phase, 0, phase, 0), LiPC beta = phase.
 * Matched mode: `phase` is read as Long's phi and mapped through the
 * phase-transform condition. Original ignores the phase in both modes.
 */
PhaseParams params_for_phase(AlgorithmKind kind, double phase,
                             bool matched_from_long);

/// Success probability after grid.k subspace iterations for every cell.
SweepResult sweep(const SweepGrid &grid, bool matched_from_long);

struct CurvePoint {
    double lambda_;
    int k;
    double probability;
};

/// Original algorithm run for optimal_iterations(lambda) steps at each lambda.
std::vector<CurvePoint> optimal_k_curve(const std::vector<double> &lambdas);

} // namespace grover_phase
