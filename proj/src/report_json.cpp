#include "clusterbn/report_json.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "clusterbn/error.hpp"

namespace clusterbn {

using nlohmann::json;

json json_integer(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

namespace {

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_integer(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json json_vector(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(json_integer(x));
    return out;
}

void put_surface(json& out, const SurfaceModel& surface) {
    out["surface"] = surface.is_plane() ? "p2" : "f";
    if (surface.is_hirzebruch()) out["delta"] = surface.delta();
}

}  // namespace

json analyze_json(const Configuration& c) {
    json out;
    put_surface(out, c.surface());
    out["n"] = c.size();
    const auto classes = classify(c);
    const auto e_sq = exceptional_self_intersections(c);
    const auto m = multiplicity_vector(c);
    json points = json::array();
    for (const auto& pc : classes) {
        points.push_back({
            {"id", pc.id},
            {"level", pc.level},
            {"kind", kind_name(pc.kind)},
            {"origin", pc.origin},
            {"end", pc.end},
            {"proximities", c.point(pc.id).proximities()},
            {"e_sq", e_sq.values[pc.id - 1]},
            {"multiplicity", json_integer(m[pc.id - 1])},
        });
    }
    out["points"] = std::move(points);
    out["gamma"] = e_sq.gamma;
    out["origins"] = c.origins();
    out["ends"] = c.ends();
    const auto p = proximity_matrix(c);
    out["proximity_matrix"] = json_matrix(p.entries);
    out["proximity_inverse"] = json_matrix(p.inverse);
    return out;
}

std::string config_text_from_analyze_json(const json& report) {
    std::ostringstream out;
    const std::string surface = report.at("surface").get<std::string>();
    if (surface == "p2") {
        out << "surface p2\n";
    } else if (surface == "f") {
        out << "surface f " << report.at("delta").get<int>() << "\n";
    } else {
        throw Error(Errc::ParseError, "unknown surface '" + surface + "' in report");
    }
    for (const auto& point : report.at("points")) {
        out << point.at("id").get<int>();
        const auto prox = point.at("proximities").get<std::vector<int>>();
        if (prox.empty()) {
            out << " origin";
        } else {
            out << " ->";
            for (int target : prox) out << " " << target;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<std::string>> hat_labels(const DValues& values) {
    std::vector<std::vector<std::string>> out;
    int next_q = 0;
    for (const auto& entry : values.per_origin) {
        std::vector<std::string> labels;
        for (PointId id : entry.members) labels.push_back("p" + std::to_string(id));
        for (std::size_t k = 0; k < entry.value.hat.added.size(); ++k) labels.push_back("q" + std::to_string(++next_q));
        out.push_back(std::move(labels));
    }
    return out;
}

json dvalue_json(const DValues& values) {
    const auto labels = hat_labels(values);
    json origins = json::array();
    for (std::size_t k = 0; k < values.per_origin.size(); ++k) {
        const auto& entry = values.per_origin[k];
        const auto& dv = entry.value;
        json added = json::array();
        for (const auto& [new_id, end] : dv.hat.added)
            added.push_back({{"label", labels[k][new_id - 1]}, {"above", labels[k][end - 1]}, {"hat_id", new_id}});
        origins.push_back({
            {"id", entry.origin},
            {"d", json_integer(dv.d)},
            {"hat_size", dv.hat.extended.size()},
            {"members", entry.members},
            {"hat", labels[k]},
            {"added", std::move(added)},
            {"certificate", {{"v_d", json_vector(dv.certificate)}, {"v_d_minus_1", json_vector(dv.previous)}}},
        });
    }
    return {{"origins", std::move(origins)}, {"total_d", json_integer(values.total)}, {"n_example", values.hat_points}};
}

json bound_report_json(const BoundReport& report) {
    json out;
    out["kind"] = bound_kind_name(report.kind);
    put_surface(out, report.surface);
    out["n_stated"] = report.inputs.n_stated;
    out["n_example"] = report.inputs.n_example;
    out["d"] = json_integer(report.inputs.d);
    out["gamma"] = report.inputs.gamma;
    if (report.epsilon) out["epsilon"] = to_string(*report.epsilon);
    json terms = json::array();
    for (const auto& term : report.terms)
        terms.push_back({{"name", term.formula}, {"group", term.group}, {"value", to_string(term.value)}});
    out["terms"] = std::move(terms);
    out["bound"] = to_string(report.bound);
    out["convention"] = convention_name(report.convention);
    return out;
}

json attached_bounds_json(const AttachedFoliationBounds& b) {
    json out;
    put_surface(out, b.surface);
    out["d"] = json_integer(b.d);
    if (b.surface.is_plane()) {
        out["r_max"] = json_integer(b.r_max);
        out["first_integral_degree"] = json_integer(b.first_integral_degree);
    } else {
        out["r1_max"] = json_integer(b.r1_max);
        out["r2_max"] = json_integer(b.r2_max);
        out["first_integral_bidegree"] = {{"d1_max", json_integer(b.first_integral_d1_max)},
                                          {"d2", json_integer(b.first_integral_d2)}};
    }
    return out;
}

}  // namespace clusterbn
