#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "clusterbn/configuration.hpp"
#include "clusterbn/exact.hpp"
#include "clusterbn/generate.hpp"
#include "clusterbn/matrix.hpp"

namespace testing {

using namespace clusterbn;

inline Configuration make(std::initializer_list<PointSpec> specs, SurfaceModel surface = SurfaceModel::plane()) {
    std::vector<PointSpec> v(specs);
    return build_configuration(v, surface);
}

inline Configuration singleton(SurfaceModel surface = SurfaceModel::plane()) { return make({{1, {}}}, surface); }

// The twelve-point configuration with three origins.
inline Configuration example12(SurfaceModel surface = SurfaceModel::plane()) {
    return make({{1, {}},
                 {2, {1}},
                 {3, {2}},
                 {4, {2}},
                 {5, {4, 2}},
                 {6, {}},
                 {7, {6}},
                 {8, {7, 6}},
                 {9, {8}},
                 {10, {}},
                 {11, {10}},
                 {12, {10}}},
                surface);
}

inline std::vector<Configuration> random_suite(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                               bool single_origin = false) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    GeneratorOptions opts;
    opts.single_origin = single_origin;
    std::vector<Configuration> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int delta = static_cast<int>(k % 4);
        const SurfaceModel surface = k % 2 ? SurfaceModel::hirzebruch(delta) : SurfaceModel::plane();
        out.push_back(random_configuration(rng, size(rng), surface, opts));
    }
    return out;
}

// Dense Gauss-Jordan inverse over the rationals, independent of the library's
// forward substitution.
inline std::vector<std::vector<Rational>> dense_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (a[pivot][col] == 0) ++pivot;
        std::swap(a[pivot], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// Multiplicities by the defining recursion, evaluated with memoized recursion
// from the origin side rather than a reverse sweep.
inline std::vector<Integer> multiplicities_oracle(const Configuration& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<PointId>> successors(n + 1);
    for (const auto& p : c.points())
        for (PointId t : p.proximities()) successors[t].push_back(p.id());
    std::vector<Integer> memo(n + 1, -1);
    auto value = [&](auto&& self, PointId q) -> Integer {
        if (memo[q] >= 0) return memo[q];
        Integer s = 0;
        for (PointId p : successors[q]) s += self(self, p);
        return memo[q] = successors[q].empty() ? Integer(1) : s;
    };
    std::vector<Integer> out;
    for (PointId q = 1; q <= static_cast<PointId>(n); ++q) out.push_back(value(value, q));
    return out;
}

// Least d >= 1 with P^-1 (d e_1 - m) > 0, scanning d = 1, 2, ... with the
// dense inverse.
inline Integer scan_d(const Configuration& hat) {
    const auto inv = dense_inverse(proximity_matrix(hat).entries);
    const auto m = multiplicities_oracle(hat);
    const std::size_t n = hat.size();
    for (Integer d = 1;; ++d) {
        bool positive = true;
        for (std::size_t i = 0; i < n && positive; ++i) {
            Rational v = inv[i][0] * d;
            for (std::size_t j = 0; j < n; ++j) v -= inv[i][j] * m[j];
            positive = v > 0;
        }
        if (positive) return d;
    }
}

}  // namespace testing
