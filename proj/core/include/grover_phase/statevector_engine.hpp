#pragma once

/**
 * @file
 * Full N-amplitude simulation of the same algorithms, written directly
 * against the operator definitions
 *
 *   I_t = a I + b |t><t|,   I_s = c |s><s| + d I
 *
 * rather than the 2x2 reduction. Used as a brute-force cross-check of the
 * subspace engine. Operators are applied as rank-one updates, O(N) each;
 * no N x N matrix is ever formed.
 */

#include <vector>

#include "grover_phase/model.hpp"
#include "grover_phase/numerics.hpp"
#include "grover_phase/subspace_engine.hpp"

namespace grover_phase {

/// Largest qubit count the statevector engine simulates.
inline constexpr int kMaxStatevectorQubits = 24;

class StateVector {
  public:
    /// Throws std::invalid_argument if amplitudes.size() != space.size().
    StateVector(SearchSpace space, std::vector<Complex> amplitudes);

    const SearchSpace &space() const { return space_; }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    std::vector<Complex> &amplitudes() { return amps_; }

    double norm() const;

  private:
    SearchSpace space_;
    std::vector<Complex> amps_;
};

/// Every amplitude 1/sqrt(N).
StateVector uniform_state(const SearchSpace &space);

StateVector apply_oracle(StateVector v, const PhaseParams &params);
StateVector apply_diffusion(StateVector v, const PhaseParams &params);

/// k rounds of oracle then diffusion, starting from uniform_state(space).
StateVector run_full(const SearchSpace &space, const PhaseParams &params, int k);

/// Sum of |amplitude|^2 over targets, clamped to [0, 1].
double target_probability(const StateVector &v);

struct SubspaceProjection {
    SubspaceState state;
    double residual; ///< norm of the part of v outside span{|alpha>, |beta>}
};

SubspaceProjection project_to_subspace(const StateVector &v);

} // namespace grover_phase
