#pragma once

// Shared test data: the power datum shrunk by kDataScale with labels
// multiplied by kLabelScale.

#include <random>

#include "lisurf/calapso.hpp"
#include "lisurf/grid.hpp"
#include "lisurf/representations.hpp"

namespace fixtures {

using namespace lisurf;

inline constexpr double kDataScale = 0.09;
inline constexpr double kLabelScale = 333.0;

inline HoloData scaled(HoloData h, double s, double L) {
    const SL2 d = SL2(Mat2{std::sqrt(s), 0.0, 0.0, 1.0 / std::sqrt(s)});
    return {mobius_apply(d, h.phi), h.labels.scaled(L)};
}

/// Discrete z^(2/3) with the conditioning above.
inline HoloData power(int N = 20, int M = 20) {
    return scaled(gen_power(N, M, 2.0 / 3.0), kDataScale, kLabelScale);
}

inline HoloData power_raw(int N = 20, int M = 20) { return gen_power(N, M, 2.0 / 3.0); }

inline Net<Vec31> random_net(const GridDomain& d, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return Net<Vec31>(d).map([&](const Vec31&) { return Vec31{u(rng), u(rng), u(rng), u(rng)}; });
}

/// Spectral parameter used for the quadric constructions with fixture labels.
inline constexpr double kM = 1.0;

}  // namespace fixtures
