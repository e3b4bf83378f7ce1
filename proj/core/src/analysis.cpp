#include "grover_phase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grover_phase/equivalence.hpp"
#include "grover_phase/operators.hpp"
#include "grover_phase/subspace_engine.hpp"

namespace grover_phase {
namespace {

void require_proportion(double x, const char *what) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) +
                                    " must satisfy 0 < value <= 1");
    }
}

} // namespace

double closed_form_probability(double lambda, int k) {
    require_proportion(lambda, "closed_form_probability: lambda");
    if (k < 0) {
        throw std::invalid_argument("closed_form_probability: k must be >= 0");
    }
    const double s = std::sin((2.0 * k + 1.0) * std::asin(std::sqrt(lambda)));
    return std::clamp(s * s, 0.0, 1.0);
}

int optimal_iterations(double lambda) {
    require_proportion(lambda, "optimal_iterations: lambda");
    return static_cast<int>(std::floor(kPi * std::sqrt(1.0 / lambda) / 4.0));
}

Complex single_iteration_amplitude_long(double m, double phi) {
    require_proportion(m, "single_iteration_amplitude_long: m");
    const Complex w = unit_phasor(phi);
    const Complex one_minus_w = 1.0 - w;
    return std::sqrt(m) * (1.0 - 2.0 * w - one_minus_w * one_minus_w * m);
}

double single_iteration_probability(double m) {
    require_proportion(m, "single_iteration_probability: m");
    return ((4.0 * m - 8.0) * m + 5.0) * m;
}

double probability_floor(double m_min) {
    require_proportion(m_min, "probability_floor: m_min");
    double lowest = std::min(single_iteration_probability(m_min),
                             single_iteration_probability(1.0));
    for (double critical : {0.5, 5.0 / 6.0}) {
        if (critical >= m_min) {
            lowest = std::min(lowest, single_iteration_probability(critical));
        }
    }
    return lowest;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("linspace: steps must be >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out[0] = lo;
        return out;
    }
    const double width = hi - lo;
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = lo + width * i / (steps - 1);
    }
    out.back() = hi;
    return out;
}

void validate(const SweepGrid &grid) {
    if (grid.lambda_steps < 1 || grid.phase_steps < 1) {
        throw std::invalid_argument("sweep: step counts must be >= 1");
    }
    if (!(grid.lambda_min <= grid.lambda_max) ||
        !(grid.phase_min <= grid.phase_max)) {
        throw std::invalid_argument("sweep: axis minimum exceeds maximum");
    }
    if (!std::isfinite(grid.phase_min) || !std::isfinite(grid.phase_max)) {
        throw std::invalid_argument("sweep: phase bounds must be finite");
    }
    require_proportion(grid.lambda_min, "sweep: lambda_min");
    require_proportion(grid.lambda_max, "sweep: lambda_max");
    if (grid.k < 0) {
        throw std::invalid_argument("sweep: k must be >= 0");
    }
}

PhaseParams params_for_phase(AlgorithmKind kind, double phase,
                             bool matched_from_long) {
    if (kind == AlgorithmKind::Original) {
        return OriginalParams{};
    }
    if (matched_from_long) {
        return transform_phases(LongParams{phase, std::nullopt}, kind);
    }
    switch (kind) {
    case AlgorithmKind::Long:
        return LongParams{phase, std::nullopt};
    case AlgorithmKind::LiDF:
        return LiDFParams{phase};
    case AlgorithmKind::LiCM:
        return LiCMParams{phase, 0.0, phase, 0.0};
    case AlgorithmKind::LiPC:
        return LiPCParams{phase};
    case AlgorithmKind::Original:
        break;
    }
    return OriginalParams{};
}

SweepResult sweep(const SweepGrid &grid, bool matched_from_long) {
    validate(grid);
    const auto lambdas =
        linspace(grid.lambda_min, grid.lambda_max, grid.lambda_steps);
    const auto phases = linspace(grid.phase_min, grid.phase_max, grid.phase_steps);

    std::vector<PhaseParams> params;
    params.reserve(phases.size());
    for (double phase : phases) {
        params.push_back(params_for_phase(grid.kind, phase, matched_from_long));
    }

    SweepResult result;
    result.rows.reserve(lambdas.size() * phases.size());
    for (double lambda : lambdas) {
        const SubspaceGeometry g = geometry_from_lambda(lambda);
        for (std::size_t j = 0; j < phases.size(); ++j) {
            const double p =
                success_probability(run(iteration_matrix(params[j], g), grid.k));
            result.rows.push_back({lambda, phases[j], grid.k, p});
        }
    }
    return result;
}

std::vector<CurvePoint> optimal_k_curve(const std::vector<double> &lambdas) {
    std::vector<CurvePoint> curve;
    curve.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const int k = optimal_iterations(lambda);
        const auto it = iteration_matrix(OriginalParams{}, geometry_from_lambda(lambda));
        curve.push_back({lambda, k, success_probability(run(it, k))});
    }
    return curve;
}

} // namespace grover_phase
