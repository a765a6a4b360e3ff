#ifndef PSO_RANDOM_HPP
#define PSO_RANDOM_HPP

#include <array>
#include <cstdint>
#include <cstddef>

namespace pso {

/// Seedable random stream with a fixed, documented algorithm so that runs are
/// reproducible bit-for-bit across platforms and compilers.
///
/// Algorithm identity (part of the external contract):
///   - state initialisation: splitmix64 applied four times to the seed
///   - core generator: xoshiro256++ (Blackman & Vigna)
///   - uniform01(): high 53 bits of next_u64(), scaled by 2^-53, giving a
///     double in [0, 1)
///   - substream(key): a stream seeded with splitmix64(seed XOR
///     splitmix64(key)); used to hand each particle an independent stream
///
/// The standard library distributions are deliberately not used: their bit
/// streams are implementation-defined.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed = 0) : seed_(seed)
    {
        std::uint64_t s = seed;
        for (auto &word : state_)
            word = splitmix64(s);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64()
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n)
    {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Independent stream derived from this stream's seed and a key.
    /// Derivation does not advance this stream.
    RandomStream substream(std::uint64_t key) const
    {
        std::uint64_t k = key;
        std::uint64_t s = seed_ ^ splitmix64(k);
        return RandomStream(splitmix64(s));
    }

    static std::uint64_t splitmix64(std::uint64_t &x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k)
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

} // namespace pso

#endif // PSO_RANDOM_HPP
