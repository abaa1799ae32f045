#pragma once

#include <cstdint>

namespace jfish {

// Counter-mode splitmix64. Instance i of a stream is seeded with
// mix(seed, i), so workers can jump straight to their slice and the values
// drawn for instance i never depend on who else ran or in what order.
// std::uniform_int_distribution is avoided on purpose: its mapping is
// implementation-defined and would tie report bytes to the standard library.
class StreamRng {
  public:
    StreamRng(uint64_t seed, uint64_t index) : state_(scramble(seed + kGamma * (index + 1))) {}

    uint64_t next() {
        state_ += kGamma;
        return scramble(state_);
    }

    // Draw in [0, m). Modulo bias at desk-scale m is far below anything the
    // harness could detect, and the result is platform-stable.
    uint32_t below(uint32_t m) { return static_cast<uint32_t>(next() % m); }

    // True with probability per_mille / 1000.
    bool chance(int per_mille) { return below(1000) < static_cast<uint32_t>(per_mille); }

  private:
    static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static uint64_t scramble(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

} // namespace jfish
