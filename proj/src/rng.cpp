#include "kinit/rng.hpp"

#include "kinit/error.hpp"

#include <limits>
#include <string>

namespace kinit {

SeededRng::SeededRng(std::uint64_t seed, RngEngine engine)
    : seed_(seed),
      engine_(engine),
      // The 32-bit engine takes the classic 32-bit seed; fold the high half in.
      mt32_(static_cast<std::uint32_t>(seed ^ (seed >> 32))),
      mt64_(seed) {}

std::uint64_t SeededRng::next_u64() {
    if (engine_ == RngEngine::mt19937_64) return mt64_();
    const std::uint64_t hi = mt32_();
    const std::uint64_t lo = mt32_();
    return (hi << 32) | lo;
}

double SeededRng::uniform01() {
    if (engine_ == RngEngine::mt19937) {
        // genrand_res53
        const std::uint64_t a = mt32_() >> 5;
        const std::uint64_t b = mt32_() >> 6;
        return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) *
               (1.0 / 9007199254740992.0);
    }
    return static_cast<double>(mt64_() >> 11) * (1.0 / 9007199254740992.0);
}

std::size_t SeededRng::uniform_index(std::size_t n) {
    if (n == 0) throw DomainError("uniform_index over an empty range");
    const std::uint64_t range = n;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = 0;
    do {
        x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % range);
}

RngEngine parse_engine(std::string_view name) {
    if (name == "mt19937") return RngEngine::mt19937;
    if (name == "mt19937_64") return RngEngine::mt19937_64;
    throw DomainError("unknown RNG engine '" + std::string(name) + "'");
}

}  // namespace kinit
