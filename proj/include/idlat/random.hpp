#pragma once

#include <cstdint>
#include <limits>

namespace idlat {

/* SplitMix64 step: used to expand seeds and to derive per-trial seeds. */
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/* Seed of trial `index` in a run seeded with `seed`; independent of the
 * order in which trials execute. */
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept
{
    std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

/* xoshiro256** 1.0 (Blackman & Vigna), seeded through SplitMix64.
 * Output is fully specified, so corpora are identical on every platform. */
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed) noexcept
    {
        for (auto& w : s_)
            w = splitmix64(seed);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept
    {
        std::uint64_t const result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t const t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /* Uniform on [0, bound) by rejection; bound > 0. */
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        std::uint64_t const limit = max() - max() % bound;
        for (;;) {
            std::uint64_t const x = (*this)();
            if (x < limit)
                return x % bound;
        }
    }

    /* Uniform on [lo, hi]. */
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept
    {
        auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace idlat
