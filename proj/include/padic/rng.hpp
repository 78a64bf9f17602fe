#pragma once

#include <cstdint>
#include <cmath>
#include <string_view>

namespace padic {

// Seedable, splittable generator (splitmix64 core). Streams derived via
// split() depend only on the construction seed and the label, never on how
// many values the parent has produced, so trial/worker streams are stable
// under any execution order.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ull)), state_(key_) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    SplitRng split(std::uint64_t label) const {
        return SplitRng(mix(key_ ^ mix(label + 0x517cc1b727220a95ull)));
    }

    SplitRng split(std::string_view label) const { return split(fnv1a(label)); }

    // in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // log-uniform over [a, b], a, b > 0
    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>((static_cast<unsigned __int128>(next_u64()) * range) >> 64);
    }

    bool bernoulli(double prob) { return uniform01() < prob; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::uint64_t key_;
    std::uint64_t state_;
};

} // namespace padic
