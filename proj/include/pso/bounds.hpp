#ifndef PSO_BOUNDS_HPP
#define PSO_BOUNDS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pso {

/// Per-dimension search-space box. Lower bound strictly below upper in every
/// dimension.
struct SearchBounds
{
    std::vector<double> lower;
    std::vector<double> upper;

    SearchBounds() = default;

    SearchBounds(std::vector<double> lo, std::vector<double> hi)
        : lower(std::move(lo)), upper(std::move(hi))
    {
        validate();
    }

    /// Same [lo, hi] interval replicated over `dimension` axes.
    static SearchBounds uniform(std::size_t dimension, double lo, double hi)
    {
        return SearchBounds(std::vector<double>(dimension, lo),
                            std::vector<double>(dimension, hi));
    }

    std::size_t dimension() const { return lower.size(); }

    double range(std::size_t d) const { return upper[d] - lower[d]; }

    bool contains(const std::vector<double> &x) const
    {
        if (x.size() != lower.size())
            return false;
        for (std::size_t d = 0; d < x.size(); ++d)
            if (x[d] < lower[d] || x[d] > upper[d])
                return false;
        return true;
    }

    void validate() const
    {
        if (lower.size() != upper.size())
            throw std::invalid_argument("SearchBounds: dimension mismatch");
        if (lower.empty())
            throw std::invalid_argument("SearchBounds: dimension must be >= 1");
        for (std::size_t d = 0; d < lower.size(); ++d) {
            if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]))
                throw std::invalid_argument("SearchBounds: bounds must be finite");
            if (!(lower[d] < upper[d]))
                throw std::invalid_argument("SearchBounds: lower must be < upper");
        }
    }

    bool operator==(const SearchBounds &) const = default;
};

} // namespace pso

#endif // PSO_BOUNDS_HPP
