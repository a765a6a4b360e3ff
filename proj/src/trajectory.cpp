#include "pso/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pso {

ReferenceCoefficients::ReferenceCoefficients(double omega, double phi)
    : omega_hat(omega), phi_hat(phi)
{
    if (!std::isfinite(omega) || !std::isfinite(phi))
        throw std::invalid_argument("ReferenceCoefficients: values must be finite");
    if (phi < 0.0)
        throw std::invalid_argument("ReferenceCoefficients: phi_hat must be >= 0");
}

TrajectoryInitialState::TrajectoryInitialState(double x0_in, double x1_in, double p_in)
    : x0(x0_in), x1(x1_in), p(p_in)
{
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(p))
        throw std::invalid_argument("TrajectoryInitialState: values must be finite");
}

double gamma_squared(const ReferenceCoefficients &c)
{
    const double b = 1.0 + c.omega_hat - c.phi_hat;
    return b * b - 4.0 * c.omega_hat;
}

double repeated_root_tolerance(const ReferenceCoefficients &c)
{
    return 1e-12 * std::max({1.0, c.phi_hat * c.phi_hat, c.omega_hat * c.omega_hat});
}

RootAnalysis characteristic_roots(const ReferenceCoefficients &c)
{
    RootAnalysis out;
    const double b = 1.0 + c.omega_hat - c.phi_hat;  // r1 + r2
    const double g2 = gamma_squared(c);
    out.gamma_sq = g2;

    const double tol = repeated_root_tolerance(c);
    if (std::abs(g2) <= tol) {
        out.case_tag = RootCase::RealRepeated;
        const double r = b / 2.0;
        out.r1 = out.r2 = r;
        out.dominant_magnitude = std::abs(r);
        out.dominant_sign = r > 0.0   ? DominantSign::Positive
                            : r < 0.0 ? DominantSign::Negative
                                      : DominantSign::None;
    } else if (g2 > 0.0) {
        out.case_tag = RootCase::RealDistinct;
        const double gamma = std::sqrt(g2);
        const double r1 = (b + gamma) / 2.0;
        const double r2 = (b - gamma) / 2.0;
        out.r1 = r1;
        out.r2 = r2;
        // r1 >= r2 always; |r1| = |r2| only when b = 0, where the roots are
        // +/- gamma/2 and the positive one is taken as dominant.
        if (std::abs(r1) >= std::abs(r2)) {
            out.dominant_magnitude = std::abs(r1);
            out.dominant_sign = r1 >= 0.0 ? DominantSign::Positive : DominantSign::Negative;
        } else {
            out.dominant_magnitude = std::abs(r2);
            out.dominant_sign = r2 >= 0.0 ? DominantSign::Positive : DominantSign::Negative;
        }
    } else {
        out.case_tag = RootCase::ComplexConjugate;
        const double gamma_prime = std::sqrt(-g2);
        out.r1 = {b / 2.0, gamma_prime / 2.0};
        out.r2 = {b / 2.0, -gamma_prime / 2.0};
        // |r|^2 = b^2/4 + (4w - b^2)/4 = w, so use sqrt(w) directly.
        out.dominant_magnitude = std::sqrt(c.omega_hat);
        out.dominant_sign = DominantSign::None;
    }
    out.convergent = out.dominant_magnitude < 1.0;
    return out;
}

BehaviourClass classify_behaviour(const ReferenceCoefficients &c)
{
    const RootAnalysis roots = characteristic_roots(c);
    BehaviourClass out;
    out.rate = roots.dominant_magnitude;
    switch (roots.dominant_sign) {
    case DominantSign::Positive: out.kind = BehaviourKind::Monotonic; break;
    case DominantSign::Negative: out.kind = BehaviourKind::Zigzagging; break;
    case DominantSign::None:     out.kind = BehaviourKind::Oscillatory; break;
    }
    out.convergent = c.omega_hat < 1.0 && c.phi_hat > 0.0 &&
                     c.omega_hat > c.phi_hat / 2.0 - 1.0;
    return out;
}

double step_recurrence(double x_curr, double x_prev,
                       const ReferenceCoefficients &c, double p)
{
    return x_curr + c.omega_hat * (x_curr - x_prev) + c.phi_hat * (p - x_curr);
}

double closed_form_position(const ReferenceCoefficients &c,
                            const TrajectoryInitialState &init,
                            std::size_t t)
{
    if (t == 0)
        return init.x0;
    if (t == 1)
        return init.x1;

    const double b = 1.0 + c.omega_hat - c.phi_hat;
    const double g2 = gamma_squared(c);
    const double tol = repeated_root_tolerance(c);
    const double d0 = init.p - init.x0;
    const double d1 = init.p - init.x1;
    const double tt = static_cast<double>(t);

    if (std::abs(g2) <= tol) {
        // Repeated root r = b/2. The closed form divides by b, which vanishes
        // only at (w, f) = (0, 1); there both roots are zero and the
        // recurrence pins x(t) = p from t = 2 on.
        if (b == 0.0)
            return init.p;
        const double coeff = -d0 + (d0 - 2.0 * d1 / b) * tt;
        return init.p + coeff * std::pow(b / 2.0, tt);
    }
    if (g2 > 0.0) {
        const double gamma = std::sqrt(g2);
        const double r1 = (b + gamma) / 2.0;
        const double r2 = (b - gamma) / 2.0;
        const double a1 = (r2 * d0 - d1) / gamma;
        const double a2 = (-r1 * d0 + d1) / gamma;
        return init.p + a1 * std::pow(r1, tt) + a2 * std::pow(r2, tt);
    }

    // Complex conjugate roots require w > 0 (their squared magnitude is w).
    if (c.omega_hat <= 0.0)
        throw std::logic_error(
            "closed_form_position: complex-root dispatch with omega_hat <= 0");
    const double gamma_prime = std::sqrt(-g2);
    const double rho = std::sqrt(c.omega_hat);
    const double theta = std::acos(b / (2.0 * rho));
    const double rho_t = std::pow(rho, tt);
    return init.p - rho_t * d0 * std::cos(theta * tt) +
           rho_t * ((b * d0 - 2.0 * d1) / gamma_prime) * std::sin(theta * tt);
}

namespace {

ReferenceCoefficients real_sector_coefficients(double speed, double phi_fraction,
                                               bool negative)
{
    // Build the root pair directly: dominant root +/-speed, second root a
    // phi_fraction of it. Vieta then gives the coefficients.
    const double r1 = negative ? -speed : speed;
    const double r2 = phi_fraction * r1;
    const double omega = r1 * r2;
    const double phi = 1.0 + omega - (r1 + r2);
    return {omega, phi};
}

ReferenceCoefficients build_candidate(BehaviourKind kind, double speed,
                                      double phi_fraction)
{
    switch (kind) {
    case BehaviourKind::Oscillatory: {
        const double omega = speed * speed;
        const double lo = (speed - 1.0) * (speed - 1.0);
        const double hi = (speed + 1.0) * (speed + 1.0);
        return {omega, lo + phi_fraction * (hi - lo)};
    }
    case BehaviourKind::Monotonic:
        return real_sector_coefficients(speed, phi_fraction, false);
    case BehaviourKind::Zigzagging:
        return real_sector_coefficients(speed, phi_fraction, true);
    }
    throw std::invalid_argument("coefficients_for: unknown behaviour kind");
}

} // namespace

ReferenceCoefficients coefficients_for(BehaviourKind kind, double speed,
                                       double phi_fraction)
{
    if (!(speed >= 0.0 && speed <= 1.0))
        throw std::invalid_argument("coefficients_for: speed must be in [0, 1]");
    if (!(phi_fraction > 0.0 && phi_fraction < 1.0))
        throw std::invalid_argument("coefficients_for: phi_fraction must be in (0, 1)");

    if (speed == 0.0)
        return {0.0, 1.0};  // unique rate-zero point

    ReferenceCoefficients candidate = build_candidate(kind, speed, phi_fraction);
    // The construction is exact up to rounding; if the tolerance-based case
    // detection still disagrees near a sector boundary, bisect phi_fraction
    // toward the sector interior.
    double f = phi_fraction;
    for (int attempt = 0; attempt < 16; ++attempt) {
        if (classify_behaviour(candidate).kind == kind)
            return candidate;
        f = (f + 0.5) / 2.0;
        candidate = build_candidate(kind, speed, f);
    }
    return candidate;
}

std::vector<GridCell> dominant_root_grid(double omega_lo, double omega_hi,
                                         double phi_lo, double phi_hi,
                                         std::size_t omega_resolution,
                                         std::size_t phi_resolution)
{
    if (!(omega_lo <= omega_hi) || !(phi_lo <= phi_hi))
        throw std::invalid_argument("dominant_root_grid: range lo must be <= hi");
    if (omega_resolution < 1 || phi_resolution < 1)
        throw std::invalid_argument("dominant_root_grid: resolution must be >= 1");

    auto coordinate = [](double lo, double hi, std::size_t i, std::size_t n) {
        if (n == 1)
            return lo;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };

    std::vector<GridCell> grid;
    grid.reserve(omega_resolution * phi_resolution);
    for (std::size_t i = 0; i < omega_resolution; ++i) {
        const double omega = coordinate(omega_lo, omega_hi, i, omega_resolution);
        for (std::size_t j = 0; j < phi_resolution; ++j) {
            const double phi = coordinate(phi_lo, phi_hi, j, phi_resolution);
            const BehaviourClass cls = classify_behaviour({omega, phi});
            grid.push_back({omega, phi, cls.rate, cls.kind, cls.convergent});
        }
    }
    return grid;
}

const char *to_string(BehaviourKind kind)
{
    switch (kind) {
    case BehaviourKind::Oscillatory: return "oscillatory";
    case BehaviourKind::Monotonic:   return "monotonic";
    case BehaviourKind::Zigzagging:  return "zigzagging";
    }
    return "unknown";
}

const char *to_string(RootCase c)
{
    switch (c) {
    case RootCase::RealDistinct:     return "real_distinct";
    case RootCase::RealRepeated:     return "real_repeated";
    case RootCase::ComplexConjugate: return "complex_conjugate";
    }
    return "unknown";
}

} // namespace pso
