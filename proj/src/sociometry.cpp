#include "pso/sociometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace pso {

ConnectivityMatrix::ConnectivityMatrix(std::size_t m, std::vector<bool> informers,
                                       std::vector<bool> self_flags)
    : m_(m), informers_(std::move(informers)), self_flags_(std::move(self_flags))
{
    if (informers_.size() != m_ * m_ || self_flags_.size() != m_)
        throw std::invalid_argument("ConnectivityMatrix: inconsistent dimensions");
}

std::vector<std::size_t> ConnectivityMatrix::informers_of(std::size_t i) const
{
    if (i >= m_)
        throw std::out_of_range("ConnectivityMatrix: particle index out of range");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m_; ++j)
        if (informers_[i * m_ + j])
            out.push_back(j);
    return out;
}

std::vector<std::size_t> build_local_neighbourhood(const LocalSociometrySpec &spec,
                                                   std::size_t i, std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("build_local_neighbourhood: empty swarm");
    if (i >= m)
        throw std::invalid_argument("build_local_neighbourhood: particle index out of range");

    std::vector<std::size_t> out;
    std::visit(
        [&](const auto &topo) {
            using T = std::decay_t<decltype(topo)>;
            if constexpr (std::is_same_v<T, GlobalTopology>) {
                for (std::size_t j = 0; j < m; ++j)
                    if (j != i)
                        out.push_back(j);
            } else if constexpr (std::is_same_v<T, RingTopology>) {
                if (topo.k_each_side == 0 || topo.k_each_side >= m)
                    throw std::invalid_argument("Ring: extent must be in [1, m)");
                for (std::size_t k = 1; k <= topo.k_each_side; ++k) {
                    out.push_back((i + k) % m);
                    out.push_back((i + m - k) % m);
                }
            } else if constexpr (std::is_same_v<T, ForwardTopology>) {
                if (topo.k_ahead == 0 || topo.k_ahead >= m)
                    throw std::invalid_argument("Forward: extent must be in [1, m)");
                for (std::size_t k = 1; k <= topo.k_ahead; ++k)
                    out.push_back((i + k) % m);
            } else {
                if (topo.hub >= m)
                    throw std::invalid_argument("Wheel: hub index out of range");
                if (i == topo.hub) {
                    for (std::size_t j = 0; j < m; ++j)
                        if (j != i)
                            out.push_back(j);
                } else {
                    out.push_back(topo.hub);
                }
            }
        },
        spec.topology);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove(out.begin(), out.end(), i), out.end());
    return out;
}

ConnectivityMatrix assemble_connectivity(const std::vector<LocalSociometrySpec> &specs)
{
    const std::size_t m = specs.size();
    if (m == 0)
        throw std::invalid_argument("assemble_connectivity: needs at least one spec");

    std::vector<bool> cells(m * m, false);
    std::vector<bool> self_flags(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto neighbours = build_local_neighbourhood(specs[i], i, m);
        for (std::size_t j : neighbours)
            cells[i * m + j] = true;
        self_flags[i] = specs[i].include_self;
        cells[i * m + i] = specs[i].include_self;
        if (neighbours.empty() && !specs[i].include_self)
            throw std::invalid_argument("assemble_connectivity: particle " +
                                        std::to_string(i) + " has no informers");
    }
    return ConnectivityMatrix(m, std::move(cells), std::move(self_flags));
}

std::vector<std::size_t> informers(const ConnectivityMatrix &matrix, std::size_t i)
{
    return matrix.informers_of(i);
}

} // namespace pso
