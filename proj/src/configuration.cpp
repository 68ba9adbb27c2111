#include "clusterbn/configuration.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <utility>

#include "clusterbn/error.hpp"
#include "clusterbn/kernels.hpp"

namespace clusterbn {

const char* kind_name(PointKind kind) noexcept {
    switch (kind) {
    case PointKind::Origin: return "origin";
    case PointKind::Free: return "free";
    case PointKind::Satellite: return "satellite";
    }
    return "unknown";
}

Configuration::Configuration(std::vector<Point> points, SurfaceModel surface)
    : points_(std::move(points)), incoming_(points_.size()), children_(points_.size()), surface_(surface) {
    for (const Point& p : points_) {
        for (PointId target : p.proximities()) incoming_[target - 1].push_back(p.id());
        if (auto parent = p.parent()) children_[*parent - 1].push_back(p.id());
    }
}

const Point& Configuration::point(PointId id) const {
    if (!contains(id)) throw Error(Errc::UnknownPoint, "no such point in a configuration of size " + std::to_string(size()), id);
    return points_[id - 1];
}

const std::vector<PointId>& Configuration::proximate_to(PointId id) const {
    point(id);
    return incoming_[id - 1];
}

const std::vector<PointId>& Configuration::children(PointId id) const {
    point(id);
    return children_[id - 1];
}

std::vector<PointId> Configuration::origins() const {
    std::vector<PointId> out;
    for (const Point& p : points_)
        if (p.is_origin()) out.push_back(p.id());
    return out;
}

std::vector<PointId> Configuration::ends() const {
    std::vector<PointId> out;
    for (const Point& p : points_)
        if (incoming_[p.id() - 1].empty()) out.push_back(p.id());
    return out;
}

Configuration Configuration::with_surface(SurfaceModel surface) const {
    Configuration copy = *this;
    copy.surface_ = surface;
    return copy;
}

std::vector<PointSpec> Configuration::specs() const {
    std::vector<PointSpec> out;
    out.reserve(points_.size());
    for (const Point& p : points_) out.push_back({p.id(), p.proximities()});
    return out;
}

Configuration build_configuration(std::span<const PointSpec> specs, SurfaceModel surface) {
    if (specs.empty()) throw Error(Errc::EmptyConfiguration, "a configuration needs at least one point");

    const auto n = static_cast<PointId>(specs.size());
    std::vector<const PointSpec*> by_id(specs.size(), nullptr);
    for (const PointSpec& spec : specs) {
        if (spec.id < 1 || spec.id > n)
            throw Error(Errc::MissingId, "ids must be exactly 1.." + std::to_string(n), spec.id);
        if (by_id[spec.id - 1] != nullptr) throw Error(Errc::DuplicateId, "id listed twice", spec.id);
        by_id[spec.id - 1] = &spec;
    }

    std::vector<Point> points;
    points.reserve(specs.size());
    std::set<std::pair<PointId, PointId>> satellite_pairs;
    for (PointId id = 1; id <= n; ++id) {
        const auto& prox = by_id[id - 1]->proximities;
        if (prox.size() > 2)
            throw Error(Errc::TooManyProximities, "a point is proximate to at most two points", id);
        for (PointId target : prox) {
            if (target < 1) throw Error(Errc::UnknownPoint, "proximity to id " + std::to_string(target), id);
            if (target >= id)
                throw Error(Errc::ForwardReference, "proximity to id " + std::to_string(target) + " which is not earlier", id);
        }
        int level = 0;
        if (!prox.empty()) {
            const Point& parent = points[prox[0] - 1];
            level = parent.level() + 1;
            if (prox.size() == 2) {
                if (prox[0] == prox[1]) throw Error(Errc::InvalidSatellite, "the two proximities coincide", id);
                if (prox[1] > prox[0])
                    throw Error(Errc::NormalizationError,
                                "the parent (largest proximate id, " + std::to_string(prox[1]) + ") must be listed first", id);
                const auto& grand = parent.proximities();
                if (std::find(grand.begin(), grand.end(), prox[1]) == grand.end())
                    throw Error(Errc::InvalidSatellite,
                                "second proximity " + std::to_string(prox[1]) + " is not among the proximities of parent " +
                                    std::to_string(prox[0]),
                                id);
                if (!satellite_pairs.emplace(prox[0], prox[1]).second)
                    throw Error(Errc::DuplicateSatellite,
                                "the satellite point on E" + std::to_string(prox[0]) + " and E" + std::to_string(prox[1]) +
                                    " is already in the configuration",
                                id);
            }
        }
        points.emplace_back(id, prox, level);
    }
    return Configuration(std::move(points), surface);
}

ProximityMatrix proximity_matrix(const Configuration& c) {
    const std::size_t n = c.size();
    IntMatrix p = IntMatrix::identity(n);
    for (const Point& q : c.points())
        for (PointId target : q.proximities()) p(q.id() - 1, target - 1) = -1;
    IntMatrix inverse = kernels::unit_lower_inverse(p);
    return {std::move(p), std::move(inverse)};
}

MultiplicityVector multiplicity_vector(const Configuration& c) {
    const std::size_t n = c.size();
    MultiplicityVector m(n);
    for (std::size_t k = n; k-- > 0;) {
        const auto id = static_cast<PointId>(k + 1);
        const auto& incoming = c.proximate_to(id);
        if (incoming.empty()) {
            m[k] = 1;
            continue;
        }
        for (PointId j : incoming) m[k] += m[j - 1];
    }
    return m;
}

std::vector<Integer> solve_proximity(const Configuration& c, std::span<const Integer> y) {
    assert(y.size() == c.size());
    std::vector<Integer> x(y.begin(), y.end());
    for (const Point& q : c.points())
        for (PointId target : q.proximities()) x[q.id() - 1] += x[target - 1];
    return x;
}

std::vector<PointClassification> classify(const Configuration& c) {
    std::vector<PointClassification> out;
    out.reserve(c.size());
    for (const Point& q : c.points())
        out.push_back({q.id(), q.is_origin(), c.is_end(q.id()), q.kind(), q.level()});
    return out;
}

std::vector<PointId> subconfiguration_members(const Configuration& c, PointId q, Direction direction) {
    c.point(q);
    std::vector<PointId> members;
    if (direction == Direction::Above) {
        for (std::optional<PointId> cur = q; cur; cur = c.point(*cur).parent()) members.push_back(*cur);
        std::reverse(members.begin(), members.end());
        return members;
    }
    // Descendants have larger ids than their parent, so one forward sweep suffices.
    std::vector<bool> inside(c.size() + 1, false);
    inside[q] = true;
    for (PointId id = q; id <= static_cast<PointId>(c.size()); ++id) {
        if (id != q) {
            auto parent = c.point(id).parent();
            if (!parent || !inside[*parent]) continue;
            inside[id] = true;
        }
        members.push_back(id);
    }
    return members;
}

Configuration subconfiguration(const Configuration& c, PointId q, Direction direction) {
    const auto members = subconfiguration_members(c, q, direction);
    std::vector<PointId> new_id(c.size() + 1, 0);
    for (std::size_t k = 0; k < members.size(); ++k) new_id[members[k]] = static_cast<PointId>(k + 1);

    std::vector<PointSpec> specs;
    specs.reserve(members.size());
    for (PointId old : members) {
        PointSpec spec{new_id[old], {}};
        if (!(direction == Direction::Below && old == q)) {
            for (PointId target : c.point(old).proximities()) {
                if (new_id[target] == 0)
                    throw Error(Errc::DanglingProximity,
                                "proximate to point " + std::to_string(target) + " outside the subconfiguration", old);
                spec.proximities.push_back(new_id[target]);
            }
        }
        specs.push_back(std::move(spec));
    }
    return build_configuration(specs, c.surface());
}

ExceptionalSelfIntersections exceptional_self_intersections(const Configuration& c) {
    ExceptionalSelfIntersections out;
    out.values.reserve(c.size());
    for (const Point& q : c.points()) {
        const int value = -1 - static_cast<int>(c.proximate_to(q.id()).size());
        out.values.push_back(value);
        out.gamma = std::max(out.gamma, -value);
    }
    return out;
}

std::string dot_export(const Configuration& c) {
    std::ostringstream out;
    out << "digraph configuration {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    int max_level = 0;
    for (const Point& q : c.points()) {
        out << "  p" << q.id() << " [label=\"p" << q.id() << "\"];\n";
        max_level = std::max(max_level, q.level());
    }
    for (int level = 0; level <= max_level; ++level) {
        out << "  { rank=same;";
        for (const Point& q : c.points())
            if (q.level() == level) out << " p" << q.id() << ";";
        out << " }\n";
    }
    for (const Point& q : c.points()) {
        const auto& prox = q.proximities();
        if (prox.empty()) continue;
        out << "  p" << prox[0] << " -> p" << q.id() << ";\n";
    }
    for (const Point& q : c.points()) {
        if (!q.is_satellite()) continue;
        out << "  p" << q.id() << " -> p" << q.proximities()[1] << " [style=dashed, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace clusterbn
