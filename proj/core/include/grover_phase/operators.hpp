#pragma once

/**
 * @file
 * Oracle, diffusion and one-step iteration operators of every algorithm,
 * restricted to span{|alpha>, |beta>}.
 *
 * Both the target projector |t><t| and the uniform projector |s><s| map that
 * span into itself, so each N-dimensional operator is represented exactly by
 * a 2x2 matrix. Basis order is (|alpha>, |beta>): target amplitude first.
 */

#include "grover_phase/model.hpp"
#include "grover_phase/numerics.hpp"

namespace grover_phase {

/// |s><s| in the (|alpha>, |beta>) basis.
Mat2C uniform_projector(const SubspaceGeometry &g);

/**
 * Oracle I_t as a diagonal 2x2 matrix diag(target factor, non-target factor).
 *
 *   Original  diag(-1, 1)
 *   Long      diag(e^{i phi}, 1)
 *   LiDF      diag(1 - 2 cos(tau) e^{i tau}, 1)
 *   LiCM      diag(-e^{i eta1}, -e^{i eta2})
 *   LiPC      diag(e^{-i beta}, 1)
 */
Mat2C subspace_oracle(const PhaseParams &params);

/**
 * Diffusion I_s = c |s><s| + d I with
 *
 *   Original  (2, -1)
 *   Long      (1 - e^{i phi_s}, -1)        phi_s the diffusion phase
 *   LiDF      (2 cos(tau) e^{i tau}, -1)
 *   LiCM      (e^{i gamma1} - e^{i gamma2}, e^{i gamma2})
 *   LiPC      (1 - e^{i beta}, e^{i beta})
 */
Mat2C subspace_diffusion(const PhaseParams &params, const SubspaceGeometry &g);

/// One Grover-type step G = I_s * I_t, tagged with what built it.
struct IterationMatrix {
    Mat2C m;
    PhaseParams params;
    SubspaceGeometry geometry;

    AlgorithmKind kind() const { return kind_of(params); }
};

IterationMatrix iteration_matrix(const PhaseParams &params,
                                 const SubspaceGeometry &g);

/// Closed-form entries of Long's iteration with equal oracle and diffusion
/// phase phi. Independent of the product construction above.
Mat2C long_matched_closed_form(double phi, const SubspaceGeometry &g);

} // namespace grover_phase
