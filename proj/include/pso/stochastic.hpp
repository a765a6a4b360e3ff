#ifndef PSO_STOCHASTIC_HPP
#define PSO_STOCHASTIC_HPP

#include "pso/random.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pso {

/// Degenerate attractor weights (iota + sigma = 0) in the coupled combiner.
/// The engine reacts by letting the particle coast on inertia for that update.
struct degenerate_weights_error : std::runtime_error
{
    degenerate_weights_error() : std::runtime_error("coupled attractor weights sum to zero") {}
};

struct PointMass
{
    double value = 0.0;
    bool operator==(const PointMass &) const = default;
};

struct Uniform
{
    double lo = 0.0;
    double hi = 1.0;
    bool operator==(const Uniform &) const = default;
};

/// phi = iota + sigma with iota ~ U(0, iw_max) and sigma ~ U(0, sw_max).
/// The sum's density is triangular when the two ranges agree, trapezoidal
/// otherwise.
struct SumOfTwoUniforms
{
    double iw_max = 0.0;
    double sw_max = 0.0;
    bool operator==(const SumOfTwoUniforms &) const = default;
};

/// Named inverse-CDF table: strictly increasing u from 0 to 1, nondecreasing
/// quantile values; sampling interpolates linearly between rows. The table's
/// value range documents the support.
struct QuantileTable
{
    std::string name;
    std::vector<double> u;
    std::vector<double> q;
    bool operator==(const QuantileTable &) const = default;
};

using CoefficientDistribution = std::variant<PointMass, Uniform, SumOfTwoUniforms, QuantileTable>;

enum class ScalingMode { Vector, Component };

struct CoupledClassical
{
    bool operator==(const CoupledClassical &) const = default;
};

/// p = lambda * xb_i + (1 - lambda) * xb_k with lambda drawn from the given
/// distribution (support must lie in [0, 1]) per the given scaling mode.
struct DecoupledConvex
{
    CoefficientDistribution lambda_distribution = Uniform{0.0, 1.0};
    ScalingMode lambda_scaling = ScalingMode::Vector;
    bool operator==(const DecoupledConvex &) const = default;
};

using AttractorCombiner = std::variant<CoupledClassical, DecoupledConvex>;

/// Throws std::invalid_argument when the parameters are out of contract
/// (non-finite, lo > hi, negative range maxima, malformed table).
void validate_distribution(const CoefficientDistribution &dist);

/// Smallest and largest value the distribution can produce.
double min_support(const CoefficientDistribution &dist);
double max_support(const CoefficientDistribution &dist);

/// One draw. PointMass consumes no random numbers; Uniform and each half of
/// SumOfTwoUniforms consume one; QuantileTable consumes one.
double sample_coefficient(const CoefficientDistribution &dist, RandomStream &rng);

/// The (iota, sigma) pair behind one SumOfTwoUniforms draw, needed by the
/// coupled attractor. Draw order: iota then sigma.
std::pair<double, double> sample_phi_parts(const SumOfTwoUniforms &dist, RandomStream &rng);

struct ScaledCoefficients
{
    std::vector<double> omega;
    std::vector<double> phi;
};

/// Vector scaling draws each coefficient once and broadcasts it across the
/// dimensions; component scaling draws anew per dimension. Draw order:
/// omega before phi; in component mode, (omega_j, phi_j) per dimension in
/// ascending j.
ScaledCoefficients sample_scaled_coefficients(const CoefficientDistribution &phi_dist,
                                              const CoefficientDistribution &omega_dist,
                                              ScalingMode mode, std::size_t dims,
                                              RandomStream &rng);

/// Overall attractor from the individual and social attractors.
/// Coupled mode applies p_j = (iota_j xb_i_j + sigma_j xb_k_j) / (iota_j + sigma_j)
/// and requires phi_parts; throws degenerate_weights_error when a weight pair
/// sums to zero. Decoupled mode draws lambda itself. Every coordinate of the
/// result lies within the interval spanned by the two inputs.
std::vector<double> combine_attractors(const AttractorCombiner &combiner,
                                       const std::vector<double> &xb_i,
                                       const std::vector<double> &xb_k,
                                       const std::vector<std::pair<double, double>> *phi_parts,
                                       RandomStream &rng);

} // namespace pso

#endif // PSO_STOCHASTIC_HPP
