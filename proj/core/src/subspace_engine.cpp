#include "grover_phase/subspace_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace grover_phase {

double SubspaceState::norm() const { return grover_phase::norm(as_pair()); }

SubspaceState initial_state(const SubspaceGeometry &g) {
    return {g.sin_theta(), g.cos_theta()};
}

SubspaceState advance(const Mat2C &step, SubspaceState state, int k) {
    if (k < 0) {
        throw std::invalid_argument("iteration count must be non-negative");
    }
    Amp2 v = state.as_pair();
    for (int i = 0; i < k; ++i) {
        v = step * v;
    }
    return {v[0], v[1]};
}

SubspaceState run(const IterationMatrix &it, int k) {
    return advance(it.m, initial_state(it.geometry), k);
}

double success_probability(const SubspaceState &s) {
    return std::clamp(std::norm(s.a), 0.0, 1.0);
}

} // namespace grover_phase
