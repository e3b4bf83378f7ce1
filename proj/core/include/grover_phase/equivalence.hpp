#pragma once

/**
 * @file
 * Phase-transform condition between the four phase-generalized iterations.
 *
 * With a common phase phi, the parameter chain
 *
 *   phi = 2 tau + pi = gamma1 - gamma2 = eta1 - eta2 = -beta
 *
 * makes the Long, LiDF, LiCM and LiPC iterations equal up to a global phase:
 *
 *   G_LiDF = G_Long
 *   G_LiCM = e^{i (gamma2 + eta2)} G_Long
 *   G_LiPC = -e^{i beta} G_Long
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "grover_phase/model.hpp"
#include "grover_phase/numerics.hpp"

namespace grover_phase {

/// Tolerance used when checking that two parameter sets satisfy the chain.
inline constexpr double kConditionTol = 1e-9;

/// Parameters fall outside the domain of the phase-transform condition.
class ConditionViolation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/**
 * The common phase phi a parameter set corresponds to on the chain.
 * Original maps to pi. Throws ConditionViolation for a LiCM set with
 * gamma1 - gamma2 != eta1 - eta2, or a Long set whose diffusion phase differs
 * from its oracle phase.
 */
double common_phase(const PhaseParams &params);

/**
 * Maps `from` onto `to` through the chain. LiCM targets get the canonical
 * representative (phi, 0, phi, 0). Only Long, LiDF, LiCM and LiPC are
 * accepted on either side (std::invalid_argument otherwise).
 */
PhaseParams transform_phases(const PhaseParams &from, AlgorithmKind to);

/// kappa with G(params) = e^{i kappa} G_Long(common_phase(params)).
/// Does not check the condition.
UnitPhase phase_offset_from_long(const PhaseParams &params);

/// chi with G_from = e^{i chi} G_to. Throws ConditionViolation unless both
/// sides sit at the same point of the chain (mod 2 pi, within `condition_tol`).
UnitPhase predicted_global_phase(const PhaseParams &from, const PhaseParams &to,
                                 double condition_tol = kConditionTol);

struct EquivalenceReport {
    PhaseParams source;
    PhaseParams target;
    UnitPhase predicted_phase;
    std::optional<UnitPhase> measured_phase;
    /// max |G_source - e^{i chi} G_target|, chi measured if present else predicted
    double max_entry_deviation = 0.0;
    bool condition_met = false;
    bool holds = false;
};

/// Builds both iteration matrices at `g`, aligns them and checks the
/// measured phase against the prediction. Never throws on a failed check.
EquivalenceReport compare_iterations(const PhaseParams &source,
                                     const PhaseParams &target,
                                     const SubspaceGeometry &g,
                                     double tol = kEquivalenceTol);

/// One report per variant (LiDF, LiCM, LiPC), each compared against Long.
/// Failures are recorded in the reports, never thrown.
std::vector<EquivalenceReport> verify_phase_equivalence(const LongParams &long_params,
                                                   const SubspaceGeometry &g,
                                                   double tol = kEquivalenceTol);

} // namespace grover_phase
