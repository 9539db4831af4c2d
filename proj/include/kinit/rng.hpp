#ifndef KINIT_RNG_HPP
#define KINIT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace kinit {

enum class RngEngine { mt19937, mt19937_64 };

/// Seeded Mersenne Twister with engine-independent uniform draws, so a seed
/// maps to the same sequence on every standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, RngEngine engine = RngEngine::mt19937_64);

    std::uint64_t seed() const noexcept { return seed_; }
    RngEngine engine() const noexcept { return engine_; }

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();
    /// Uniform in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n);

private:
    std::uint64_t seed_;
    RngEngine engine_;
    std::mt19937 mt32_;
    std::mt19937_64 mt64_;
};

RngEngine parse_engine(std::string_view name);

}  // namespace kinit

#endif  // KINIT_RNG_HPP
