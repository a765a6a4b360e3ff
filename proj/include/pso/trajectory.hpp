#ifndef PSO_TRAJECTORY_HPP
#define PSO_TRAJECTORY_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace pso {

/// Deterministic pair (inertia, acceleration) governing one particle's
/// trajectory once stochasticity is stripped away.
struct ReferenceCoefficients
{
    double omega_hat = 0.0;
    double phi_hat = 0.0;

    /// Throws std::invalid_argument on non-finite values or phi_hat < 0.
    ReferenceCoefficients(double omega, double phi);

    bool operator==(const ReferenceCoefficients &) const = default;
};

enum class RootCase { RealDistinct, RealRepeated, ComplexConjugate };
enum class DominantSign { Positive, Negative, None };
enum class BehaviourKind { Oscillatory, Monotonic, Zigzagging };

/// Roots of r^2 - (1 + w - f) r + w and derived convergence data.
struct RootAnalysis
{
    RootCase case_tag = RootCase::RealDistinct;
    std::complex<double> r1;
    std::complex<double> r2;
    double gamma_sq = 0.0;            ///< discriminant (1+w-f)^2 - 4w
    double dominant_magnitude = 0.0;  ///< max(|r1|, |r2|)
    DominantSign dominant_sign = DominantSign::None;
    bool convergent = false;          ///< dominant_magnitude < 1
};

struct BehaviourClass
{
    BehaviourKind kind = BehaviourKind::Monotonic;
    bool convergent = false;
    double rate = 0.0;  ///< dominant root magnitude

    bool operator==(const BehaviourClass &) const = default;
};

/// x(0), x(1) and the stationary attractor for the closed forms.
struct TrajectoryInitialState
{
    double x0 = 0.0;
    double x1 = 0.0;
    double p = 0.0;

    TrajectoryInitialState(double x0_in, double x1_in, double p_in);
};

/// One cell of a dominant-root classification grid.
struct GridCell
{
    double omega = 0.0;
    double phi = 0.0;
    double rate = 0.0;
    BehaviourKind kind = BehaviourKind::Monotonic;
    bool convergent = false;
};

/// Discriminant of the characteristic polynomial, (1+w-f)^2 - 4w.
double gamma_squared(const ReferenceCoefficients &c);

/// Repeated roots are declared when |gamma^2| falls below this scale-aware
/// threshold; the exact-zero test is meaningless in floating point and the
/// distinct-root closed forms lose all precision in that band.
double repeated_root_tolerance(const ReferenceCoefficients &c);

RootAnalysis characteristic_roots(const ReferenceCoefficients &c);

/// Behaviour type from the dominant-root sign, convergence from the strict
/// triangle inequalities w < 1, f > 0, w > f/2 - 1. The rate-zero point
/// (w, f) = (0, 1) carries a signless dominant root and is classed
/// Oscillatory, matching the degenerate tip of the complex sector.
BehaviourClass classify_behaviour(const ReferenceCoefficients &c);

/// One application of x(t+1) = x + w (x - x_prev) + f (p - x).
double step_recurrence(double x_curr, double x_prev,
                       const ReferenceCoefficients &c, double p);

/// Position after t steps from (x0, x1) with stationary attractor p,
/// evaluated by the case-dispatched closed form (no iteration).
double closed_form_position(const ReferenceCoefficients &c,
                            const TrajectoryInitialState &init,
                            std::size_t t);

/// Coefficients realising the requested behaviour with dominant-root
/// magnitude equal to speed. phi_fraction in (0,1) positions phi inside the
/// admissible range for the chosen kind. speed = 0 yields (0, 1) for every
/// kind; that point converges in two steps and has no behaviour type proper.
ReferenceCoefficients coefficients_for(BehaviourKind kind, double speed,
                                       double phi_fraction);

/// Row-major sweep (omega rows, phi columns) of rate / kind / convergence.
/// A resolution of 1 on an axis emits that axis' lower bound only.
std::vector<GridCell> dominant_root_grid(double omega_lo, double omega_hi,
                                         double phi_lo, double phi_hi,
                                         std::size_t omega_resolution,
                                         std::size_t phi_resolution);

const char *to_string(BehaviourKind kind);
const char *to_string(RootCase c);

} // namespace pso

#endif // PSO_TRAJECTORY_HPP
