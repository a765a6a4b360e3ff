#ifndef PSO_SOCIOMETRY_HPP
#define PSO_SOCIOMETRY_HPP

#include <cstddef>
#include <variant>
#include <vector>

namespace pso {

struct GlobalTopology
{
    bool operator==(const GlobalTopology &) const = default;
};

/// k nearest indices on each side, modulo the swarm size.
struct RingTopology
{
    std::size_t k_each_side = 1;
    bool operator==(const RingTopology &) const = default;
};

/// The next k indices ahead, modulo the swarm size.
struct ForwardTopology
{
    std::size_t k_ahead = 1;
    bool operator==(const ForwardTopology &) const = default;
};

/// Spokes: every particle is informed by the hub; the hub by everyone.
struct WheelTopology
{
    std::size_t hub = 0;
    bool operator==(const WheelTopology &) const = default;
};

using NeighbourhoodTopology =
    std::variant<GlobalTopology, RingTopology, ForwardTopology, WheelTopology>;

/// Per-particle neighbourhood definition. Indices are 0-based throughout.
struct LocalSociometrySpec
{
    NeighbourhoodTopology topology = GlobalTopology{};
    bool include_self = true;

    bool operator==(const LocalSociometrySpec &) const = default;
};

/// Informer matrix assembled from per-particle local sociometries. Entry
/// (i, j) is true iff particle j informs particle i. The diagonal carries the
/// per-particle self flag. Immutable after assembly.
class ConnectivityMatrix
{
public:
    ConnectivityMatrix(std::size_t m, std::vector<bool> informers,
                       std::vector<bool> self_flags);

    std::size_t size() const { return m_; }
    bool informs(std::size_t i, std::size_t j) const { return informers_[i * m_ + j]; }
    bool self_included(std::size_t i) const { return self_flags_[i]; }

    /// True entries of row i (including i itself iff the self flag is set).
    std::vector<std::size_t> informers_of(std::size_t i) const;

    bool operator==(const ConnectivityMatrix &) const = default;

private:
    std::size_t m_ = 0;
    std::vector<bool> informers_;
    std::vector<bool> self_flags_;
};

/// Informer indices of particle i under the given local spec, excluding i
/// itself (the self flag is applied at assembly). Deterministic.
/// Throws std::invalid_argument for extents or hubs incompatible with m.
std::vector<std::size_t> build_local_neighbourhood(const LocalSociometrySpec &spec,
                                                   std::size_t i, std::size_t m);

/// One spec per particle; heterogeneous specs yield irregular matrices.
/// Throws std::invalid_argument if any row would end up without a single
/// informer (counting the self flag).
ConnectivityMatrix assemble_connectivity(const std::vector<LocalSociometrySpec> &specs);

/// Row query. Throws std::out_of_range for i >= m.
std::vector<std::size_t> informers(const ConnectivityMatrix &matrix, std::size_t i);

} // namespace pso

#endif // PSO_SOCIOMETRY_HPP
