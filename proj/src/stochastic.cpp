#include "pso/stochastic.hpp"

#include <algorithm>
#include <cmath>

namespace pso {

namespace {

bool finite(double v) { return std::isfinite(v); }

} // namespace

void validate_distribution(const CoefficientDistribution &dist)
{
    std::visit(
        [](const auto &d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointMass>) {
                if (!finite(d.value))
                    throw std::invalid_argument("PointMass: value must be finite");
            } else if constexpr (std::is_same_v<T, Uniform>) {
                if (!finite(d.lo) || !finite(d.hi) || d.lo > d.hi)
                    throw std::invalid_argument("Uniform: requires finite lo <= hi");
            } else if constexpr (std::is_same_v<T, SumOfTwoUniforms>) {
                if (!finite(d.iw_max) || !finite(d.sw_max) || d.iw_max < 0.0 || d.sw_max < 0.0)
                    throw std::invalid_argument("SumOfTwoUniforms: maxima must be finite and >= 0");
            } else {
                if (d.u.size() != d.q.size() || d.u.size() < 2)
                    throw std::invalid_argument("QuantileTable: needs >= 2 aligned rows");
                if (d.u.front() != 0.0 || d.u.back() != 1.0)
                    throw std::invalid_argument("QuantileTable: u must span [0, 1]");
                for (std::size_t i = 0; i < d.u.size(); ++i) {
                    if (!finite(d.u[i]) || !finite(d.q[i]))
                        throw std::invalid_argument("QuantileTable: entries must be finite");
                    if (i > 0 && !(d.u[i] > d.u[i - 1]))
                        throw std::invalid_argument("QuantileTable: u must be strictly increasing");
                    if (i > 0 && d.q[i] < d.q[i - 1])
                        throw std::invalid_argument("QuantileTable: q must be nondecreasing");
                }
            }
        },
        dist);
}

double min_support(const CoefficientDistribution &dist)
{
    return std::visit(
        [](const auto &d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointMass>) return d.value;
            else if constexpr (std::is_same_v<T, Uniform>) return d.lo;
            else if constexpr (std::is_same_v<T, SumOfTwoUniforms>) return 0.0;
            else return d.q.front();
        },
        dist);
}

double max_support(const CoefficientDistribution &dist)
{
    return std::visit(
        [](const auto &d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointMass>) return d.value;
            else if constexpr (std::is_same_v<T, Uniform>) return d.hi;
            else if constexpr (std::is_same_v<T, SumOfTwoUniforms>) return d.iw_max + d.sw_max;
            else return d.q.back();
        },
        dist);
}

double sample_coefficient(const CoefficientDistribution &dist, RandomStream &rng)
{
    return std::visit(
        [&rng](const auto &d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, PointMass>) {
                return d.value;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return rng.uniform(d.lo, d.hi);
            } else if constexpr (std::is_same_v<T, SumOfTwoUniforms>) {
                const auto [iota, sigma] = sample_phi_parts(d, rng);
                return iota + sigma;
            } else {
                const double u = rng.uniform01();
                const auto it = std::upper_bound(d.u.begin(), d.u.end(), u);
                const std::size_t hi = std::min<std::size_t>(it - d.u.begin(), d.u.size() - 1);
                const std::size_t lo = hi - 1;
                const double span = d.u[hi] - d.u[lo];
                const double w = (u - d.u[lo]) / span;
                return d.q[lo] + w * (d.q[hi] - d.q[lo]);
            }
        },
        dist);
}

std::pair<double, double> sample_phi_parts(const SumOfTwoUniforms &dist, RandomStream &rng)
{
    const double iota = dist.iw_max * rng.uniform01();
    const double sigma = dist.sw_max * rng.uniform01();
    return {iota, sigma};
}

ScaledCoefficients sample_scaled_coefficients(const CoefficientDistribution &phi_dist,
                                              const CoefficientDistribution &omega_dist,
                                              ScalingMode mode, std::size_t dims,
                                              RandomStream &rng)
{
    if (dims == 0)
        throw std::invalid_argument("sample_scaled_coefficients: dims must be >= 1");
    ScaledCoefficients out;
    out.omega.resize(dims);
    out.phi.resize(dims);
    if (mode == ScalingMode::Vector) {
        const double omega = sample_coefficient(omega_dist, rng);
        const double phi = sample_coefficient(phi_dist, rng);
        std::fill(out.omega.begin(), out.omega.end(), omega);
        std::fill(out.phi.begin(), out.phi.end(), phi);
    } else {
        for (std::size_t j = 0; j < dims; ++j) {
            out.omega[j] = sample_coefficient(omega_dist, rng);
            out.phi[j] = sample_coefficient(phi_dist, rng);
        }
    }
    return out;
}

std::vector<double> combine_attractors(const AttractorCombiner &combiner,
                                       const std::vector<double> &xb_i,
                                       const std::vector<double> &xb_k,
                                       const std::vector<std::pair<double, double>> *phi_parts,
                                       RandomStream &rng)
{
    if (xb_i.size() != xb_k.size())
        throw std::invalid_argument("combine_attractors: dimension mismatch");
    const std::size_t dims = xb_i.size();
    std::vector<double> p(dims);

    if (std::holds_alternative<CoupledClassical>(combiner)) {
        if (phi_parts == nullptr || phi_parts->size() != dims)
            throw std::invalid_argument("combine_attractors: coupled mode needs per-dimension phi parts");
        for (std::size_t j = 0; j < dims; ++j) {
            const auto [iota, sigma] = (*phi_parts)[j];
            const double phi = iota + sigma;
            if (phi == 0.0)
                throw degenerate_weights_error{};
            p[j] = (iota * xb_i[j] + sigma * xb_k[j]) / phi;
            // guard rounding: the exact value is a convex combination
            p[j] = std::clamp(p[j], std::min(xb_i[j], xb_k[j]), std::max(xb_i[j], xb_k[j]));
        }
        return p;
    }

    const auto &dec = std::get<DecoupledConvex>(combiner);
    if (dec.lambda_scaling == ScalingMode::Vector) {
        const double lambda = sample_coefficient(dec.lambda_distribution, rng);
        for (std::size_t j = 0; j < dims; ++j)
            p[j] = lambda * xb_i[j] + (1.0 - lambda) * xb_k[j];
    } else {
        for (std::size_t j = 0; j < dims; ++j) {
            const double lambda = sample_coefficient(dec.lambda_distribution, rng);
            p[j] = lambda * xb_i[j] + (1.0 - lambda) * xb_k[j];
        }
    }
    for (std::size_t j = 0; j < dims; ++j)
        p[j] = std::clamp(p[j], std::min(xb_i[j], xb_k[j]), std::max(xb_i[j], xb_k[j]));
    return p;
}

} // namespace pso
