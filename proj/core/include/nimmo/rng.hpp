#ifndef NIMMO_RNG_HPP
#define NIMMO_RNG_HPP

#include <cstdint>
#include <random>

namespace nimmo {

/// splitmix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the conversions to reals and bounded
/// integers are done here rather than through <random> distributions, whose
/// algorithms are implementation-defined. Equal seeds therefore give equal
/// draws on every platform.
///
/// Streams are single-owner: move them, never share them between threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Stream for one (problem, algorithm, run) cell of an experiment. For a
    /// fixed base seed the mapping is injective as long as problem and
    /// algorithm indices fit in 16 bits and the run index in 32 bits.
    static RngStream derive(std::uint64_t base_seed, std::uint64_t problem,
                            std::uint64_t algorithm, std::uint64_t run);
    static std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t problem,
                                     std::uint64_t algorithm, std::uint64_t run) noexcept;

    /// Child stream keyed by `index`; does not advance this stream.
    RngStream split(std::uint64_t index) const;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n); n must be > 0. Unbiased (rejection).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace nimmo

#endif
