#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace plsec {

/// SplitMix64 finaliser; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for shard `index` of a run with master seed `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Thin wrapper over mt19937_64. The floating-point mapping is done here
/// rather than with <random> distributions, whose output is not fixed by
/// the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open0() { return 1.0 - uniform(); }

    double exponential(double mean) { return -mean * std::log(uniform_open0()); }

    /// Area-uniform point in the disk of the given radius.
    void point_in_disk(double radius, double& x, double& y) {
        const double rho = radius * std::sqrt(uniform());
        const double phi = 2.0 * std::numbers::pi * uniform();
        x = rho * std::cos(phi);
        y = rho * std::sin(phi);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace plsec
