#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace htoc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

//! Raised when a simulation resource limit is hit (support cap, copy budget).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Raised when inputs violate a documented precondition.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

//! Raised when internal state contradicts a maintained invariant.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// splitmix64; used only to derive independent seeds for per-trial streams.
inline u64 split_mix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

//! Deterministic random stream. Trial i of seed s always sees the same draws,
//! independent of how many other trials ran before it.
class Rng {
  public:
    explicit Rng(u64 seed) : engine_(seed) {}
    Rng(u64 seed, u64 stream) : engine_(split_mix64(seed ^ split_mix64(stream + 0x51ed2701u))) {}

    u64 raw() { return engine_(); }

    //! Uniform integer in [0, bound). bound must be positive.
    u64 below(u64 bound) {
        if (bound == 0) throw InputError("Rng::below: zero bound");
        // rejection sampling keeps the draw unbiased and reproducible
        u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
        u64 v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    //! Uniform double in [0, 1) with 53 bits of precision.
    double real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return real() < prob; }

  private:
    std::mt19937_64 engine_;
};

struct SimLimits {
    std::size_t max_support = 1u << 20;  // hard cap on sparse state support
    double prune_eps = 1e-12;
    double norm_tol = 1e-9;
};

//! Process-wide defaults; `HTOC_MAX_SUPPORT` overrides the support cap.
inline SimLimits default_limits() {
    SimLimits lim;
    if (const char* env = std::getenv("HTOC_MAX_SUPPORT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) lim.max_support = static_cast<std::size_t>(v);
    }
    return lim;
}

}  // namespace htoc
