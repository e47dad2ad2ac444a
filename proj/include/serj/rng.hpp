#ifndef SERJ_RNG_HPP
#define SERJ_RNG_HPP

#include <cmath>
#include <cstdint>

namespace serj {

/// Counter-style pseudo-random stream (SplitMix64 increment + finalizer).
///
/// Substreams are disjoint windows of the underlying sequence, keyed by
/// (seed, stream index). Results are therefore identical whether trials run
/// serially or are partitioned across threads. Each substream may draw at
/// most 2^20 values before windows could overlap; callers here stay far
/// below that.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    static RngStream substream(std::uint64_t seed, std::uint64_t stream) {
        return RngStream(seed + (stream + 1) * (kGamma << 20));
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += kGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential with unit mean.
    double next_exponential() {
        return -std::log1p(-next_uniform());
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    std::uint64_t state_;
};

/// Stateless seed derivation for independent sub-experiments (e.g. one seed
/// per topology realization).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    RngStream s(seed + (salt + 1) * 0xD1B54A32D192ED03ULL);
    return s.next_u64();
}

} // namespace serj

#endif
