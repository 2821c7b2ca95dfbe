// SPDX-License-Identifier: Apache-2.0
//
// curvant -- conformal multi-dipole antenna design toolkit

#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace curvant {

// mt19937_64 with hand-written uniform draws. The standard distribution
// classes are implementation-defined, so drawing from raw bits keeps the
// stream identical for a given seed on every platform.
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n); n > 0
    std::uint64_t uniform_int(std::uint64_t n) { return engine_() % n; }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    static Rng deserialize(const std::string& state) {
        Rng r;
        std::istringstream is(state);
        is >> r.engine_;
        return r;
    }

    bool operator==(const Rng& o) const { return engine_ == o.engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace curvant
