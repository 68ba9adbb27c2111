#include "clusterbn/sufficiency.hpp"

#include <cassert>

#include "clusterbn/error.hpp"

namespace clusterbn {

namespace {

void require_single_origin(const Configuration& c) {
    const auto origins = c.origins();
    if (origins.size() != 1)
        throw Error(Errc::MultipleOrigins,
                    "expected exactly one origin, found " + std::to_string(origins.size()), origins.size() > 1 ? origins[1] : 0);
}

}  // namespace

HatConfiguration hat_configuration(const Configuration& c) {
    require_single_origin(c);
    if (c.size() == 1) return {c, c, {}};

    std::vector<PointSpec> specs = c.specs();
    std::vector<std::pair<PointId, PointId>> added;
    auto next = static_cast<PointId>(c.size());
    for (PointId end : c.ends()) {
        const Point& q = c.point(end);
        if (q.kind() != PointKind::Free) continue;
        // A free end of a configuration with >= 2 points and one origin has level >= 1.
        assert(q.parent().has_value());
        specs.push_back({++next, {end, *q.parent()}});
        added.emplace_back(next, end);
    }
    return {c, build_configuration(specs, c.surface()), std::move(added)};
}

DValue d_value(const Configuration& c) {
    HatConfiguration hat = hat_configuration(c);
    const Configuration& k = hat.extended;
    const std::size_t n = k.size();

    std::vector<Integer> unit(n);
    unit[0] = 1;
    const std::vector<Integer> a = solve_proximity(k, unit);
    const std::vector<Integer> b = solve_proximity(k, multiplicity_vector(k));

    Integer d = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] <= 0)
            throw Error(Errc::NonPositiveCoefficient, "P^-1 1_p has a non-positive entry", static_cast<PointId>(i + 1));
        const Integer candidate = floor_div(b[i], a[i]) + 1;
        if (candidate > d) d = candidate;
    }

    std::vector<Integer> certificate(n);
    std::vector<Integer> previous(n);
    for (std::size_t i = 0; i < n; ++i) {
        certificate[i] = d * a[i] - b[i];
        previous[i] = certificate[i] - a[i];
    }
    assert(d >= 2);
    return DValue{1, std::move(d), std::move(certificate), std::move(previous), std::move(hat)};
}

DValues d_values(const Configuration& c) {
    DValues out;
    for (PointId origin : c.origins()) {
        OriginDValue entry{origin, subconfiguration_members(c, origin, Direction::Below),
                           d_value(subconfiguration(c, origin, Direction::Below))};
        out.total += entry.value.d;
        out.hat_points += entry.value.hat.extended.size();
        out.per_origin.push_back(std::move(entry));
    }
    return out;
}

Integer total_d(const Configuration& c) { return d_values(c).total; }

}  // namespace clusterbn
