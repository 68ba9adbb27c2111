#pragma once

// Configurations (clusters) of infinitely near points over P^2 or F_delta,
// stored as a flat list in blowup order. Point ids are 1-based; the parent of
// a non-origin point is its proximate point of maximal id.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clusterbn/exact.hpp"
#include "clusterbn/matrix.hpp"
#include "clusterbn/surface.hpp"

namespace clusterbn {

using PointId = int;

/// Input record: a point and the ids it is proximate to, parent first.
struct PointSpec {
    PointId id = 0;
    std::vector<PointId> proximities;
};

enum class PointKind { Origin, Free, Satellite };

const char* kind_name(PointKind kind) noexcept;

class Point {
public:
    Point(PointId id, std::vector<PointId> proximities, int level)
        : id_(id), proximities_(std::move(proximities)), level_(level) {}

    PointId id() const noexcept { return id_; }
    /// Parent first; at most two entries.
    const std::vector<PointId>& proximities() const noexcept { return proximities_; }
    int level() const noexcept { return level_; }

    bool is_origin() const noexcept { return proximities_.empty(); }
    bool is_satellite() const noexcept { return proximities_.size() == 2; }
    std::optional<PointId> parent() const noexcept {
        if (proximities_.empty()) return std::nullopt;
        return proximities_.front();
    }
    PointKind kind() const noexcept {
        if (proximities_.empty()) return PointKind::Origin;
        return proximities_.size() == 1 ? PointKind::Free : PointKind::Satellite;
    }

    friend bool operator==(const Point&, const Point&) = default;

private:
    PointId id_;
    std::vector<PointId> proximities_;
    int level_;
};

/// Immutable, validated configuration. Obtain one from build_configuration.
class Configuration {
public:
    std::size_t size() const noexcept { return points_.size(); }
    const SurfaceModel& surface() const noexcept { return surface_; }
    std::span<const Point> points() const noexcept { return points_; }

    /// Throws Error(UnknownPoint) for an id outside 1..size().
    const Point& point(PointId id) const;
    bool contains(PointId id) const noexcept { return id >= 1 && id <= static_cast<PointId>(points_.size()); }

    /// Ids of the points proximate to `id`, increasing.
    const std::vector<PointId>& proximate_to(PointId id) const;
    /// Ids of the points whose parent is `id`, increasing.
    const std::vector<PointId>& children(PointId id) const;

    bool is_end(PointId id) const { return proximate_to(id).empty(); }
    std::vector<PointId> origins() const;
    std::vector<PointId> ends() const;

    /// Same points over another base surface.
    Configuration with_surface(SurfaceModel surface) const;
    /// Round-trips through build_configuration.
    std::vector<PointSpec> specs() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.surface_ == b.surface_ && a.points_ == b.points_;
    }

private:
    friend Configuration build_configuration(std::span<const PointSpec>, SurfaceModel);

    Configuration(std::vector<Point> points, SurfaceModel surface);

    std::vector<Point> points_;
    std::vector<std::vector<PointId>> incoming_;
    std::vector<std::vector<PointId>> children_;
    SurfaceModel surface_;
};

/// Validates and builds. Specs may come in any order; ids must be exactly
/// 1..n. Errors: EmptyConfiguration, DuplicateId, MissingId, UnknownPoint,
/// ForwardReference, TooManyProximities, NormalizationError (parent not listed
/// first), InvalidSatellite, DuplicateSatellite.
Configuration build_configuration(std::span<const PointSpec> specs, SurfaceModel surface);

struct ProximityMatrix {
    IntMatrix entries;
    IntMatrix inverse;
};

/// P with 1 on the diagonal and -1 at (i, j) iff p_i -> p_j; the inverse is
/// computed exactly by forward substitution.
ProximityMatrix proximity_matrix(const Configuration& c);

using MultiplicityVector = std::vector<Integer>;

/// m_q = 1 at ends, otherwise the sum of m over the points proximate to q.
MultiplicityVector multiplicity_vector(const Configuration& c);

/// x = P^-1 y using the sparse proximity structure (x_i = y_i + sum_{i->k} x_k).
std::vector<Integer> solve_proximity(const Configuration& c, std::span<const Integer> y);

struct PointClassification {
    PointId id = 0;
    bool origin = false;
    bool end = false;
    PointKind kind = PointKind::Origin;
    int level = 0;
};

std::vector<PointClassification> classify(const Configuration& c);

enum class Direction { Below, Above };

/// Original ids of (C)_q (Below: q and every point infinitely near it) or
/// (C)^q (Above: the points q is infinitely near to, q included), increasing.
std::vector<PointId> subconfiguration_members(const Configuration& c, PointId q, Direction direction);

/// The members above, renumbered 1..k in blowup order. In the Below case q
/// becomes an origin; any other retained point proximate to a removed point
/// raises DanglingProximity.
Configuration subconfiguration(const Configuration& c, PointId q, Direction direction);

struct ExceptionalSelfIntersections {
    /// values[id - 1] = E_id^2 on the sky of the configuration.
    std::vector<int> values;
    /// max(-E_q^2), 0 for an empty list.
    int gamma = 0;
};

/// E_q^2 = -1 - #{p : p -> q}.
ExceptionalSelfIntersections exceptional_self_intersections(const Configuration& c);

/// Proximity graph in DOT. Solid edges follow the parent relation, dashed
/// edges go from a satellite point to its second proximate point, and
/// vertices of equal level share a rank.
std::string dot_export(const Configuration& c);

}  // namespace clusterbn
