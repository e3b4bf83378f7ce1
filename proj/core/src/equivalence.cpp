#include "grover_phase/equivalence.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "grover_phase/operators.hpp"

namespace grover_phase {
namespace {

bool is_variant(AlgorithmKind kind) {
    return kind != AlgorithmKind::Original;
}

} // namespace

double common_phase(const PhaseParams &params) {
    require_finite(params);
    return std::visit(
        [](const auto &p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return kPi;
            } else if constexpr (std::is_same_v<T, LongParams>) {
                if (angle_distance(p.phi, p.diffusion_phase()) > kConditionTol) {
                    throw ConditionViolation(
                        "long: oracle and diffusion phases differ");
                }
                return p.phi;
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return 2.0 * p.tau + kPi;
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                const double diffusion_gap = p.gamma1 - p.gamma2;
                if (angle_distance(diffusion_gap, p.eta1 - p.eta2) >
                    kConditionTol) {
                    throw ConditionViolation(
                        "licm: gamma1 - gamma2 must equal eta1 - eta2");
                }
                return diffusion_gap;
            } else {
                return -p.beta;
            }
        },
        params);
}

PhaseParams transform_phases(const PhaseParams &from, AlgorithmKind to) {
    if (!is_variant(kind_of(from)) || !is_variant(to)) {
        throw std::invalid_argument(
            "transform_phases: only long, lidf, licm and lipc are related by "
            "the phase-transform condition");
    }
    const double phi = common_phase(from);
    switch (to) {
    case AlgorithmKind::Long:
        return LongParams{phi, std::nullopt};
    case AlgorithmKind::LiDF:
        return LiDFParams{(phi - kPi) / 2.0};
    case AlgorithmKind::LiCM:
        return LiCMParams{phi, 0.0, phi, 0.0};
    case AlgorithmKind::LiPC:
        return LiPCParams{-phi};
    case AlgorithmKind::Original:
        break;
    }
    throw std::invalid_argument("transform_phases: unsupported target kind");
}

UnitPhase phase_offset_from_long(const PhaseParams &params) {
    return std::visit(
        [](const auto &p) -> UnitPhase {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LiCMParams>) {
                return UnitPhase(p.gamma2 + p.eta2);
            } else if constexpr (std::is_same_v<T, LiPCParams>) {
                return UnitPhase(p.beta + kPi); // -e^{i beta}
            } else {
                return UnitPhase(0.0);
            }
        },
        params);
}

UnitPhase predicted_global_phase(const PhaseParams &from, const PhaseParams &to,
                                 double condition_tol) {
    const double phi_from = common_phase(from);
    const double phi_to = common_phase(to);
    if (angle_distance(phi_from, phi_to) > condition_tol) {
        throw ConditionViolation(
            "predicted_global_phase: " + describe(from) + " and " + describe(to) +
            " do not satisfy the phase-transform condition");
    }
    return phase_offset_from_long(from) - phase_offset_from_long(to);
}

EquivalenceReport compare_iterations(const PhaseParams &source,
                                     const PhaseParams &target,
                                     const SubspaceGeometry &g, double tol) {
    EquivalenceReport report{source, target, {}, std::nullopt, 0.0, false, false};
    try {
        report.predicted_phase = predicted_global_phase(source, target);
        report.condition_met = true;
    } catch (const ConditionViolation &) {
        report.predicted_phase =
            phase_offset_from_long(source) - phase_offset_from_long(target);
    }

    const Mat2C a = iteration_matrix(source, g).m;
    const Mat2C b = iteration_matrix(target, g).m;
    report.measured_phase = global_phase_align(a, b, tol);
    const UnitPhase chi = report.measured_phase.value_or(report.predicted_phase);
    report.max_entry_deviation = max_entry_deviation(a, chi.factor() * b);
    report.holds = report.measured_phase.has_value() &&
                   report.max_entry_deviation <= tol &&
                   angle_distance(report.measured_phase->angle(),
                                  report.predicted_phase.angle()) <= tol;
    return report;
}

std::vector<EquivalenceReport> verify_phase_equivalence(const LongParams &long_params,
                                                   const SubspaceGeometry &g,
                                                   double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("verify_phase_equivalence: tolerance must be positive");
    }
    std::vector<EquivalenceReport> reports;
    const PhaseParams source = long_params;
    // A mismatched diffusion phase is mapped from the oracle phase and then
    // shows up as a failed report rather than an exception.
    const PhaseParams anchor = LongParams{long_params.phi, std::nullopt};
    for (AlgorithmKind kind :
         {AlgorithmKind::LiDF, AlgorithmKind::LiCM, AlgorithmKind::LiPC}) {
        reports.push_back(
            compare_iterations(source, transform_phases(anchor, kind), g, tol));
    }
    return reports;
}

} // namespace grover_phase
