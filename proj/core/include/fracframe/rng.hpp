#pragma once

#include <cstdint>
#include <random>

#include "fracframe/vec.hpp"

namespace fracframe {

/// Seeded generator used everywhere randomness is needed. Configs carry the
/// seed so runs replay bit-identically.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(eng_);
    }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }

    int uniform_int(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Vec unit_sphere(int dim) {
        Vec v(dim);
        double r2 = 0.0;
        do {
            for (int i = 0; i < dim; ++i) v[i] = normal();
            r2 = v.norm2();
        } while (r2 < 1e-24);
        return v * (1.0 / std::sqrt(r2));
    }

    Vec uniform_ball(int dim, double radius) {
        const Vec d = unit_sphere(dim);
        const double u = uniform(0.0, 1.0);
        return d * (radius * std::pow(u, 1.0 / dim));
    }

    std::uint64_t raw() { return eng_(); }

    /// Independent child stream with deterministic salt; used by parallel
    /// multistarts so results do not depend on scheduling.
    Rng split(std::uint64_t salt) const {
        std::uint64_t z = seed_ ^ (salt + 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace fracframe
