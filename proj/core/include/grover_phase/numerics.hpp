#pragma once

/**
 * @file
 * Fixed-shape complex arithmetic used throughout the library: 2x2 matrices,
 * amplitude pairs, angle normalization and global-phase alignment.
 */

#include <array>
#include <complex>
#include <numbers>
#include <optional>

namespace grover_phase {

using Complex = std::complex<double>;

/// Default tolerance for "equal up to global phase" claims.
inline constexpr double kEquivalenceTol = 1e-10;
/// Default tolerance for unitarity checks on freshly built 2x2 matrices.
inline constexpr double kUnitarityTol = 1e-12;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// e^{i angle}
inline Complex unit_phasor(double angle) { return std::polar(1.0, angle); }

/// Maps any finite angle onto (-pi, pi].
double normalize_angle(double angle);

/// Shortest distance between two angles on the circle, in [0, pi].
double angle_distance(double a, double b);

/**
 * A unit-modulus phase factor e^{i angle}. The stored angle is always in
 * (-pi, pi], so two UnitPhase values compare equal iff they describe the
 * same factor.
 */
class UnitPhase {
  public:
    constexpr UnitPhase() = default;
    explicit UnitPhase(double angle) : angle_(normalize_angle(angle)) {}

    double angle() const { return angle_; }
    Complex factor() const { return unit_phasor(angle_); }

    UnitPhase operator-() const { return UnitPhase(-angle_); }
    friend UnitPhase operator+(UnitPhase a, UnitPhase b) {
        return UnitPhase(a.angle_ + b.angle_);
    }
    friend UnitPhase operator-(UnitPhase a, UnitPhase b) {
        return UnitPhase(a.angle_ - b.angle_);
    }
    friend bool operator==(UnitPhase, UnitPhase) = default;

  private:
    double angle_ = 0.0;
};

/// Amplitude pair; in the search subspace index 0 is |alpha> and 1 is |beta>.
using Amp2 = std::array<Complex, 2>;

/// 2x2 complex matrix, entries addressed as (row, col).
struct Mat2C {
    std::array<Complex, 4> e{}; // row-major: m00, m01, m10, m11

    constexpr Mat2C() = default;
    constexpr Mat2C(Complex m00, Complex m01, Complex m10, Complex m11)
        : e{m00, m01, m10, m11} {}

    static constexpr Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2C diagonal(Complex d0, Complex d1) {
        return {d0, 0.0, 0.0, d1};
    }

    constexpr Complex &operator()(int row, int col) { return e[2 * row + col]; }
    constexpr const Complex &operator()(int row, int col) const {
        return e[2 * row + col];
    }

    Mat2C adjoint() const;
    Complex determinant() const;
    bool all_finite() const;

    friend bool operator==(const Mat2C &, const Mat2C &) = default;
};

Mat2C operator*(const Mat2C &a, const Mat2C &b);
Mat2C operator*(Complex s, const Mat2C &m);
Mat2C operator+(const Mat2C &a, const Mat2C &b);
Mat2C operator-(const Mat2C &a, const Mat2C &b);
Amp2 operator*(const Mat2C &m, const Amp2 &v);

/// Largest entrywise modulus of a - b.
double max_entry_deviation(const Mat2C &a, const Mat2C &b);

/// Euclidean norm of an amplitude pair.
double norm(const Amp2 &v);

/// True iff every entry of m * m^dagger is within tol of the identity.
bool is_unitary(const Mat2C &m, double tol = kUnitarityTol);

/**
 * Finds chi with max |a - e^{i chi} b| <= tol.
 *
 * The candidate ratio is read off the largest-modulus entry of b, so no
 * division by a near-zero entry happens. Returns nullopt when b is zero,
 * when the ratio is not unit-modulus within tol, or when the remaining
 * entries disagree.
 */
std::optional<UnitPhase> global_phase_align(const Mat2C &a, const Mat2C &b,
                                            double tol = kEquivalenceTol);

} // namespace grover_phase
