#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <regex>

#include "clusterbn/configuration.hpp"
#include "clusterbn/error.hpp"
#include "clusterbn/kernels.hpp"
#include "clusterbn/lattice.hpp"
#include "support.hpp"

using namespace clusterbn;
using testing::example12;
using testing::make;
using testing::singleton;

namespace {

Errc error_of(std::initializer_list<PointSpec> specs) {
    try {
        make(specs);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::ParseError;
}

IntMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<Integer> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("build_configuration: singleton") {
    const auto c = singleton();
    CHECK(c.size() == 1);
    CHECK(c.origins() == std::vector<PointId>{1});
    CHECK(c.ends() == std::vector<PointId>{1});
}

TEST_CASE("build_configuration: satellite chain") {
    const auto c = make({{1, {}}, {2, {1}}, {3, {2, 1}}});
    CHECK(c.point(3).is_satellite());
    CHECK(c.point(3).parent() == 2);
    CHECK(c.point(3).level() == 2);
}

TEST_CASE("build_configuration: error paths") {
    CHECK(error_of({{1, {}}, {2, {1}}, {3, {2, 1}}, {4, {2, 3}}}) == Errc::NormalizationError);
    CHECK(error_of({{1, {}}, {1, {}}}) == Errc::DuplicateId);
    CHECK(error_of({{1, {}}, {3, {1}}}) == Errc::MissingId);
    CHECK(error_of({{1, {}}, {2, {2}}}) == Errc::ForwardReference);
    CHECK(error_of({{1, {}}, {2, {3}}, {3, {1}}}) == Errc::ForwardReference);
    CHECK(error_of({{1, {}}, {2, {1}}, {3, {2, 1}}, {4, {3, 2, 1}}}) == Errc::TooManyProximities);
    // p2 is free over p1 only, so p4 -> p3, p1 needs p3 -> p1.
    CHECK(error_of({{1, {}}, {2, {1}}, {3, {2}}, {4, {3, 1}}}) == Errc::InvalidSatellite);
    CHECK(error_of({{1, {}}, {2, {1}}, {3, {2, 2}}}) == Errc::InvalidSatellite);
    CHECK(error_of({{1, {}}, {2, {0}}}) == Errc::UnknownPoint);
    // Two satellite points on the same pair of exceptional divisors.
    CHECK(error_of({{1, {}}, {2, {1}}, {3, {2, 1}}, {4, {2, 1}}}) == Errc::DuplicateSatellite);
    CHECK_THROWS_AS(build_configuration(std::vector<PointSpec>{}, SurfaceModel::plane()), Error);
}

TEST_CASE("build_configuration: errors carry the point id") {
    try {
        make({{1, {}}, {2, {1}}, {3, {2}}, {4, {3, 1}}});
        FAIL("expected InvalidSatellite");
    } catch (const Error& e) {
        CHECK(e.point() == 4);
        CHECK(std::string(e.what()).find("InvalidSatellite") != std::string::npos);
    }
}

TEST_CASE("proximity_matrix: hand inversions") {
    auto p = proximity_matrix(singleton());
    CHECK(p.entries == matrix({{1}}));
    CHECK(p.inverse == matrix({{1}}));

    p = proximity_matrix(make({{1, {}}, {2, {1}}}));
    CHECK(p.entries == matrix({{1, 0}, {-1, 1}}));
    CHECK(p.inverse == matrix({{1, 0}, {1, 1}}));

    p = proximity_matrix(make({{1, {}}, {2, {1}}, {3, {2, 1}}}));
    CHECK(p.entries == matrix({{1, 0, 0}, {-1, 1, 0}, {-1, -1, 1}}));
    CHECK(p.inverse == matrix({{1, 0, 0}, {1, 1, 0}, {2, 1, 1}}));
}

TEST_CASE("multiplicity_vector: hat configurations of the example") {
    CHECK(multiplicity_vector(singleton()) == ints({1}));
    // p1, p2, p3, p4, p5, q1 with q1 -> p3, p2.
    const auto hat1 = make({{1, {}}, {2, {1}}, {3, {2}}, {4, {2}}, {5, {4, 2}}, {6, {3, 2}}});
    CHECK(multiplicity_vector(hat1) == ints({4, 4, 1, 1, 1, 1}));
    // p6, p7, p8, p9, q2 with q2 -> p9, p8.
    const auto hat6 = make({{1, {}}, {2, {1}}, {3, {2, 1}}, {4, {3}}, {5, {4, 3}}});
    CHECK(multiplicity_vector(hat6) == ints({4, 2, 2, 1, 1}));
}

TEST_CASE("classify: singleton and example") {
    const auto s = classify(singleton());
    REQUIRE(s.size() == 1);
    CHECK(s[0].origin);
    CHECK(s[0].end);
    CHECK(s[0].level == 0);

    const auto c = example12();
    CHECK(c.origins() == std::vector<PointId>{1, 6, 10});
    const auto report = classify(c);
    CHECK(report[4].kind == PointKind::Satellite);
    CHECK(report[7].kind == PointKind::Satellite);
    for (PointId id : {2, 3, 4, 7, 9, 11, 12}) CHECK(report[id - 1].kind == PointKind::Free);
    for (PointId id : {3, 11, 12}) CHECK(report[id - 1].end);
    CHECK_FALSE(report[6].end);
    CHECK(c.ends() == std::vector<PointId>{3, 5, 9, 11, 12});
}

TEST_CASE("subconfiguration") {
    const auto c = example12();
    CHECK(subconfiguration_members(c, 1, Direction::Below) == std::vector<PointId>{1, 2, 3, 4, 5});
    CHECK(subconfiguration_members(c, 5, Direction::Above) == std::vector<PointId>{1, 2, 4, 5});
    CHECK(subconfiguration_members(c, 10, Direction::Below) == std::vector<PointId>{10, 11, 12});

    const auto below6 = subconfiguration(c, 6, Direction::Below);
    CHECK(below6 == make({{1, {}}, {2, {1}}, {3, {2, 1}}, {4, {3}}}));
    const auto above5 = subconfiguration(c, 5, Direction::Above);
    CHECK(above5 == make({{1, {}}, {2, {1}}, {3, {2}}, {4, {3, 2}}}));

    // p4 -> p3, p2 is satellite; below p3 it loses p2.
    const auto chain = make({{1, {}}, {2, {1}}, {3, {2}}, {4, {3, 2}}});
    CHECK_THROWS_AS(subconfiguration(chain, 3, Direction::Below), Error);
    try {
        subconfiguration(chain, 3, Direction::Below);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DanglingProximity);
    }
    CHECK_THROWS_AS(subconfiguration(chain, 9, Direction::Below), Error);
}

TEST_CASE("exceptional_self_intersections") {
    auto e = exceptional_self_intersections(singleton());
    CHECK(e.values == std::vector<int>{-1});
    CHECK(e.gamma == 1);

    e = exceptional_self_intersections(example12());
    CHECK(e.values[1] == -4);
    CHECK(e.values[9] == -3);
    CHECK(e.gamma == 4);
}

TEST_CASE("dot_export") {
    auto count = [](const std::string& text, const std::regex& re) {
        return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
    };
    const std::regex node(R"(\bp\d+ \[label=)");
    const std::regex solid(R"(p\d+ -> p\d+;)");
    const std::regex dashed(R"(p\d+ -> p\d+ \[style=dashed)");

    auto dot = dot_export(singleton());
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count(dot, node) == 1);
    CHECK(count(dot, solid) == 0);

    dot = dot_export(make({{1, {}}, {2, {1}}}));
    CHECK(count(dot, solid) == 1);

    // 12 points, 3 origins: 9 parent edges plus the two extra proximities.
    dot = dot_export(example12());
    CHECK(count(dot, node) == 12);
    CHECK(count(dot, solid) == 9);
    CHECK(count(dot, dashed) == 2);
    CHECK(dot.find("p5 -> p2 [style=dashed") != std::string::npos);
    CHECK(dot.find("p8 -> p6 [style=dashed") != std::string::npos);
}

TEST_CASE("random suite: matrix, multiplicity and classification invariants") {
    const auto suite = testing::random_suite(200, 30, 0xC0FFEE);
    for (const auto& c : suite) {
        const auto p = proximity_matrix(c);
        REQUIRE(p.entries.is_unit_lower_triangular());
        CHECK(p.entries * p.inverse == IntMatrix::identity(c.size()));
        const auto dense = testing::dense_inverse(p.entries);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                CHECK(p.inverse(i, j) >= 0);
                CHECK(Rational(p.inverse(i, j)) == dense[i][j]);
            }

        const auto m = multiplicity_vector(c);
        CHECK(m == testing::multiplicities_oracle(c));
        const auto pt_m = p.entries.transposed() * std::span<const Integer>(m);
        const auto ends = c.ends();
        for (PointId q = 1; q <= static_cast<PointId>(c.size()); ++q) {
            const bool end = std::find(ends.begin(), ends.end(), q) != ends.end();
            CHECK(pt_m[q - 1] == (end ? 1 : 0));
        }

        for (const auto& pc : classify(c)) {
            const auto& pt = c.point(pc.id);
            CHECK((pt.proximities().empty() == pc.origin));
            CHECK((pc.origin == (pc.level == 0)));
            CHECK((pc.end == (m[pc.id - 1] == 1 && c.proximate_to(pc.id).empty())));
        }

        const auto e = exceptional_self_intersections(c);
        for (PointId q = 1; q <= static_cast<PointId>(c.size()); ++q)
            CHECK(self_intersection(strict_transform_of_exceptional(c, q)) == e.values[q - 1]);

        // The origins' subconfigurations partition the points.
        std::vector<PointId> all;
        for (PointId o : c.origins()) {
            const auto below = subconfiguration_members(c, o, Direction::Below);
            all.insert(all.end(), below.begin(), below.end());
        }
        std::sort(all.begin(), all.end());
        std::vector<PointId> expected(c.size());
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(all == expected);
    }
}

TEST_CASE("renumbering invariance of P^-1 m") {
    // Interleave the clusters of the example differently: same points, new order.
    const auto c = example12();
    // old ids in new blowup order
    const std::vector<PointId> order{6, 1, 7, 10, 2, 8, 11, 3, 9, 4, 12, 5};
    std::vector<PointId> new_id(13);
    for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<PointId>(k + 1);
    std::vector<PointSpec> specs;
    for (PointId old : order) {
        PointSpec s{new_id[old], {}};
        for (PointId t : c.point(old).proximities()) s.proximities.push_back(new_id[t]);
        std::sort(s.proximities.rbegin(), s.proximities.rend());
        specs.push_back(s);
    }
    const auto relabeled = build_configuration(specs, SurfaceModel::plane());

    auto p_inv_m = [](const Configuration& x) {
        const auto m = multiplicity_vector(x);
        return proximity_matrix(x).inverse * std::span<const Integer>(m);
    };
    const auto a = p_inv_m(c);
    const auto b = p_inv_m(relabeled);
    for (PointId old = 1; old <= 12; ++old) CHECK(a[old - 1] == b[new_id[old] - 1]);
}

TEST_CASE("kernels: serial and parallel inverse agree") {
    for (const auto& c : testing::random_suite(30, 150, 99)) {
        const auto p = proximity_matrix(c).entries;
        CHECK(kernels::unit_lower_inverse_serial(p) == kernels::unit_lower_inverse_parallel(p));
    }
}

TEST_CASE("random generator covers satellites, several origins and long chains") {
    const auto suite = testing::random_suite(200, 30, 0xC0FFEE);
    std::size_t satellites = 0, multi_origin = 0, max_n = 0;
    int max_level = 0;
    for (const auto& c : suite) {
        multi_origin += c.origins().size() > 1;
        max_n = std::max(max_n, c.size());
        for (const auto& p : c.points()) {
            satellites += p.is_satellite();
            max_level = std::max(max_level, p.level());
        }
    }
    CHECK(satellites > 200);
    CHECK(multi_origin > 20);
    CHECK(max_n == 30);
    CHECK(max_level >= 10);
}
