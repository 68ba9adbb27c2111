#pragma once

#include <cstddef>
#include <random>

#include "clusterbn/configuration.hpp"

namespace clusterbn {

struct GeneratorOptions {
    /// Chance that a new point starts another origin (ignored for single-origin output).
    double origin_probability = 0.1;
    /// Chance that a new non-origin point is made satellite when possible.
    double satellite_probability = 0.4;
    /// Chance that a new point is attached to the previous one, which builds long chains.
    double chain_probability = 0.5;
    bool single_origin = false;
};

/// Random valid configuration with n >= 1 points: each new point is attached
/// free to a uniformly chosen earlier point, or made satellite by also taking
/// one of that point's proximity targets whose satellite slot is still empty.
Configuration random_configuration(std::mt19937_64& rng, std::size_t n, SurfaceModel surface,
                                   const GeneratorOptions& options = {});

}  // namespace clusterbn
