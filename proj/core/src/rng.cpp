#include "nimmo/rng.hpp"

#include "nimmo/types.hpp"

namespace nimmo {

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t RngStream::derive_seed(std::uint64_t base_seed, std::uint64_t problem,
                                     std::uint64_t algorithm, std::uint64_t run) noexcept
{
    const std::uint64_t packed = ((problem & 0xffffULL) << 48) | ((algorithm & 0xffffULL) << 32) |
                                 (run & 0xffffffffULL);
    // xor with a per-base constant keeps the map injective in `packed`.
    return mix64(base_seed) ^ packed;
}

RngStream RngStream::derive(std::uint64_t base_seed, std::uint64_t problem,
                            std::uint64_t algorithm, std::uint64_t run)
{
    return RngStream(derive_seed(base_seed, problem, algorithm, run));
}

RngStream RngStream::split(std::uint64_t index) const
{
    return RngStream(mix64(seed_ ^ mix64(index + 0x5851f42d4c957f2dULL)));
}

std::uint64_t RngStream::below(std::uint64_t n)
{
    if (n == 0)
        throw ContractViolation("RngStream::below: n must be positive");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % n);
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % n;
}

} // namespace nimmo
