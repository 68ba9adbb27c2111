#pragma once

// The hat configuration of a single-origin configuration and the integer
// d_{C_p}: the least d > 0 with P^-1 (d 1_p - m) > 0 over the hat.

#include <utility>
#include <vector>

#include "clusterbn/configuration.hpp"

namespace clusterbn {

struct HatConfiguration {
    Configuration base;
    Configuration extended;
    /// (new point id, free end it was added above), in increasing order.
    std::vector<std::pair<PointId, PointId>> added;
};

/// Appends, above every free end of `c`, the satellite point on E_end and the
/// end's parent. A singleton is returned unchanged. Throws MultipleOrigins.
HatConfiguration hat_configuration(const Configuration& c);

struct DValue {
    PointId origin = 1;
    Integer d;
    /// v_d = P^-1 (d 1_p - m) over the hat, in the hat's id order. All > 0.
    std::vector<Integer> certificate;
    /// v_{d-1}; at least one entry is <= 0.
    std::vector<Integer> previous;
    HatConfiguration hat;
};

/// Closed form d = max_i(floor(b_i / a_i) + 1) with a = P^-1 1_p, b = P^-1 m.
/// Throws MultipleOrigins, or NonPositiveCoefficient if some a_i <= 0.
DValue d_value(const Configuration& c);

struct OriginDValue {
    /// Origin id in the full configuration.
    PointId origin = 0;
    /// Ids of (C)_origin in the full configuration.
    std::vector<PointId> members;
    DValue value;
};

struct DValues {
    std::vector<OriginDValue> per_origin;
    /// d = sum over origins of d_{(C)_p}.
    Integer total;
    /// sum over origins of #hat((C)_p).
    std::size_t hat_points = 0;
};

DValues d_values(const Configuration& c);
Integer total_d(const Configuration& c);

}  // namespace clusterbn
