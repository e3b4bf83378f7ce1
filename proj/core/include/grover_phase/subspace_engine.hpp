#pragma once

#include "grover_phase/numerics.hpp"
#include "grover_phase/operators.hpp"

namespace grover_phase {

/// a |alpha> + b |beta>
struct SubspaceState {
    Complex a;
    Complex b;

    Amp2 as_pair() const { return {a, b}; }
    double norm() const;
};

/// (sin theta, cos theta)
SubspaceState initial_state(const SubspaceGeometry &g);

/// Applies `it` k times to the initial state of its geometry.
SubspaceState run(const IterationMatrix &it, int k);

/// Continues from an arbitrary state for k further steps.
SubspaceState advance(const Mat2C &step, SubspaceState state, int k);

/// |a|^2 clamped to [0, 1].
double success_probability(const SubspaceState &s);

} // namespace grover_phase
