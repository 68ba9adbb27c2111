#include <doctest.h>

#include <random>

#include "clusterbn/error.hpp"
#include "clusterbn/lattice.hpp"
#include "support.hpp"

using namespace clusterbn;
using testing::example12;
using testing::make;
using testing::singleton;

namespace {

std::vector<Rational> rats(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

DivisorClass random_class(std::mt19937_64& rng, SurfaceModel surface, std::size_t n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    std::vector<Rational> m(n);
    for (auto& x : m) x = r();
    return surface.is_plane() ? DivisorClass::plane(r(), m) : DivisorClass::hirzebruch(surface, r(), r(), m);
}

Errc error_code(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::ParseError;
}

}  // namespace

TEST_CASE("pairing: generators") {
    const auto l = DivisorClass::standard_ample(SurfaceModel::plane(), 0);
    CHECK(pairing(l, l) == 1);
    for (int delta = 0; delta <= 4; ++delta) {
        const auto s = SurfaceModel::hirzebruch(delta);
        const auto f = DivisorClass::hirzebruch(s, 1, 0, {});
        const auto m = DivisorClass::hirzebruch(s, 0, 1, {});
        CHECK(pairing(f, f) == 0);
        CHECK(pairing(f, m) == 1);
        CHECK(pairing(m, m) == delta);
        // Gram determinant of {F*, M*}.
        CHECK(pairing(f, f) * pairing(m, m) - pairing(f, m) * pairing(m, f) == -1);
    }
    const auto s = SurfaceModel::hirzebruch(1);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j)
            CHECK(pairing(DivisorClass::exceptional(s, 3, i), DivisorClass::exceptional(s, 3, j)) == (i == j ? -1 : 0));
}

TEST_CASE("pairing: closed forms on random instances") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    std::uniform_int_distribution<std::size_t> size(0, 10);
    for (int k = 0; k < 50; ++k) {
        const int delta = k % 6;
        const Rational a = coef(rng), b = coef(rng), d = coef(rng);
        const auto s = SurfaceModel::hirzebruch(delta);
        const auto x = DivisorClass::hirzebruch(s, a, b, {});
        CHECK(self_intersection(x) == 2 * a * b + delta * b * b);

        std::vector<Rational> m(size(rng));
        Rational sum_sq = 0;
        for (auto& v : m) {
            v = coef(rng);
            sum_sq += v * v;
        }
        CHECK(self_intersection(DivisorClass::plane(d, m)) == d * d - sum_sq);
    }
}

TEST_CASE("pairing: symmetry, bilinearity, projection formula") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        const auto surface = k % 2 ? SurfaceModel::hirzebruch(k % 5) : SurfaceModel::plane();
        const std::size_t n = static_cast<std::size_t>(k % 11);
        const auto x = random_class(rng, surface, n);
        const auto y = random_class(rng, surface, n);
        const auto z = random_class(rng, surface, n);
        const Rational s(k - 50, 7);
        CHECK(pairing(x, y) == pairing(y, x));
        CHECK(pairing(x + s * y, z) == pairing(x, z) + s * pairing(y, z));
        CHECK(pairing(x, y - z) == pairing(x, y) - pairing(x, z));

        DivisorClass base_part = x;
        for (std::size_t i = 1; i <= n; ++i) base_part.multiplicity(i) = 0;
        DivisorClass y_base = y;
        for (std::size_t i = 1; i <= n; ++i) y_base.multiplicity(i) = 0;
        CHECK(pairing(base_part, y) == pairing(base_part, y_base));
        for (std::size_t i = 1; i <= n; ++i) CHECK(pairing(base_part, DivisorClass::exceptional(surface, n, i)) == 0);
    }
}

TEST_CASE("pairing: mismatches") {
    const auto p = DivisorClass::standard_ample(SurfaceModel::plane(), 2);
    const auto h = DivisorClass::standard_ample(SurfaceModel::hirzebruch(1), 2);
    const auto p3 = DivisorClass::standard_ample(SurfaceModel::plane(), 3);
    CHECK(error_code([&] { pairing(p, h); }) == Errc::SurfaceMismatch);
    CHECK(error_code([&] { pairing(p, p3); }) == Errc::SurfaceMismatch);
    CHECK(error_code([&] { pairing(DivisorClass::standard_ample(SurfaceModel::hirzebruch(1), 2),
                                   DivisorClass::standard_ample(SurfaceModel::hirzebruch(2), 2)); }) ==
          Errc::SurfaceMismatch);
}

TEST_CASE("strict_transform_of_exceptional") {
    const auto e = strict_transform_of_exceptional(singleton(), 1);
    CHECK(e == DivisorClass::exceptional(SurfaceModel::plane(), 1, 1));
    CHECK(self_intersection(e) == -1);

    const auto c = example12();
    const auto e2 = strict_transform_of_exceptional(c, 2);
    CHECK(format_divisor(e2) == "E2 - E3 - E4 - E5");
    CHECK(self_intersection(e2) == -4);
    const auto e4 = strict_transform_of_exceptional(c, 4);
    CHECK(format_divisor(e4) == "E4 - E5");
    CHECK(self_intersection(e4) == -2);
    CHECK(error_code([&] { strict_transform_of_exceptional(c, 13); }) == Errc::UnknownPoint);
}

TEST_CASE("special_section_class") {
    const auto f = [](int delta) { return DivisorClass::hirzebruch(SurfaceModel::hirzebruch(delta), 1, 0, {}); };
    const auto m0_0 = special_section_class(SurfaceModel::hirzebruch(0));
    CHECK(m0_0 == DivisorClass::hirzebruch(SurfaceModel::hirzebruch(0), 0, 1, {}));
    CHECK(self_intersection(m0_0) == 0);
    for (int delta = 0; delta <= 6; ++delta) {
        const auto m0 = special_section_class(SurfaceModel::hirzebruch(delta));
        CHECK(self_intersection(m0) == -delta);
        CHECK(pairing(m0, f(delta)) == 1);
    }
    CHECK(error_code([] { special_section_class(SurfaceModel::plane()); }) == Errc::NotHirzebruch);
}

TEST_CASE("multiplicity_bound_check") {
    CHECK(multiplicity_bound_check(DivisorClass::hirzebruch(SurfaceModel::hirzebruch(0), 1, 0, rats({1}))).pass());
    const auto fail = multiplicity_bound_check(DivisorClass::hirzebruch(SurfaceModel::hirzebruch(0), 0, 1, rats({2})));
    CHECK_FALSE(fail.pass());
    CHECK(fail.violators == std::vector<std::size_t>{1});
    const auto section = multiplicity_bound_check(DivisorClass::hirzebruch(SurfaceModel::hirzebruch(2), -2, 1, rats({1})));
    CHECK(section.pass());
    CHECK(section.bound == 1);
    CHECK(error_code([] { multiplicity_bound_check(DivisorClass::plane(1, {})); }) == Errc::NotHirzebruch);
}

TEST_CASE("invariant_bound_check") {
    const auto k = DivisorClass::plane(2, rats({0}));
    CHECK(invariant_bound_check(k, DivisorClass::plane(1, rats({0}))).pass);
    const auto bad = invariant_bound_check(k, DivisorClass::plane(2, rats({5})));
    CHECK_FALSE(bad.pass);
    CHECK(bad.self_intersection == -21);
    CHECK(bad.lower_bound == -4);
    // r = 1: K = 0, so the check is C^2 >= 0.
    const auto zero = DivisorClass::plane(0, rats({0}));
    CHECK(invariant_bound_check(zero, DivisorClass::plane(1, rats({1}))).pass);
    CHECK_FALSE(invariant_bound_check(zero, DivisorClass::plane(1, rats({2}))).pass);
}

TEST_CASE("bidegree_of_closure") {
    const auto plane = bidegree_of_closure(Chart::UX, 0, 3, 3, 3, true);
    CHECK(plane.plane);
    CHECK(plane.degree == 3);

    const auto u00 = bidegree_of_closure(Chart::U00, 2, 4, 4, 4, true);
    CHECK(u00.d1 == 4);
    CHECK(u00.d2 == 4);
    const auto u01 = bidegree_of_closure(Chart::U01, 2, 4, 4, 4, true);
    CHECK(u01.d1 == 0);
    CHECK(u01.d2 == 4);
    CHECK(bidegree_of_closure(Chart::U11, 0, 4, 4, 4, true).d1 == 4);
    CHECK(bidegree_of_closure(Chart::U10, 3, 5, 5, 5, true).d1 == 5);

    const auto open = bidegree_of_closure(Chart::U00, 2, 5, 3, 4, false);
    CHECK_FALSE(open.d1.has_value());
    CHECK(open.d1_upper == 3);
    CHECK(open.d2 == 4);

    CHECK(parse_chart("u01") == Chart::U01);
    CHECK(error_code([] { parse_chart("U22"); }) == Errc::UnknownChart);
    CHECK(error_code([] { bidegree_of_closure(Chart::U00, 1, 2, 3, 1, false); }) == Errc::InvalidDegrees);
}

TEST_CASE("strict basis round trip") {
    for (const auto& c : testing::random_suite(100, 20, 31)) {
        const std::size_t n = c.size();
        // E_q has strict coordinates equal to the unit vector at q.
        for (PointId q = 1; q <= static_cast<PointId>(n); ++q) {
            const auto s = to_strict_basis(strict_transform_of_exceptional(c, q), c);
            for (std::size_t i = 0; i < n; ++i) CHECK(s[i] == (i + 1 == static_cast<std::size_t>(q) ? 1 : 0));
        }
        std::mt19937_64 rng(n);
        const auto x = random_class(rng, c.surface(), n);
        CHECK(from_strict_basis(x, to_strict_basis(x, c), c) == x);
    }
}

TEST_CASE("parse_divisor and format_divisor") {
    const auto p = SurfaceModel::plane();
    const auto x = parse_divisor(" 3L - 2E1 -E4 ", p, 4);
    CHECK(x == DivisorClass::plane(3, rats({2, 0, 0, 1})));
    CHECK(format_divisor(x) == "3L - 2E1 - E4");
    CHECK(parse_divisor("1E1", p, 1) == DivisorClass::exceptional(p, 1, 1));

    const auto h = SurfaceModel::hirzebruch(2);
    const auto y = parse_divisor("2F + 1M - 1/2E3", h, 3);
    CHECK(y == DivisorClass::hirzebruch(h, 2, 1, {0, 0, Rational(1, 2)}));
    CHECK(parse_divisor(format_divisor(y), h, 3) == y);
    CHECK(parse_divisor("L + L - E1 - E1", p, 1) == DivisorClass::plane(2, rats({2})));
    CHECK(format_divisor(DivisorClass(p, 2)) == "0");

    CHECK(error_code([&] { parse_divisor("2F", p, 0); }) == Errc::SurfaceMismatch);
    CHECK(error_code([&] { parse_divisor("L", h, 0); }) == Errc::SurfaceMismatch);
    CHECK(error_code([&] { parse_divisor("L - E5", p, 4); }) == Errc::UnknownPoint);
    CHECK(error_code([&] { parse_divisor("3Q", p, 4); }) == Errc::ParseError);
    CHECK(error_code([&] { parse_divisor("", p, 4); }) == Errc::ParseError);
    CHECK(error_code([&] { parse_divisor("1/0L", p, 4); }) == Errc::ParseError);
}
