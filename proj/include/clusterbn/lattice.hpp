#pragma once

// Exact intersection theory on Pic(S), S the sky of a configuration over P^2
// or F_delta. Classes are written in the total-transform basis
//   a L* - sum m_i E_i*            (plane)
//   a F* + b M* - sum m_i E_i*     (Hirzebruch)
// with L*^2 = 1, F*^2 = 0, F*.M* = 1, M*^2 = delta, E_i*.E_j* = -delta_ij.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clusterbn/configuration.hpp"
#include "clusterbn/exact.hpp"
#include "clusterbn/surface.hpp"

namespace clusterbn {

class DivisorClass {
public:
    /// The zero class on the sky of an n-point configuration over `surface`.
    DivisorClass(SurfaceModel surface, std::size_t n);

    /// a L* - sum m_i E_i* on the sky of an m.size()-point configuration over P^2.
    static DivisorClass plane(Rational a, std::vector<Rational> m);
    /// a F* + b M* - sum m_i E_i*. Throws NotHirzebruch for the plane.
    static DivisorClass hirzebruch(SurfaceModel surface, Rational a, Rational b, std::vector<Rational> m);
    /// L* (plane) or F* + M* (Hirzebruch): the ample pullback used by the bounds.
    static DivisorClass standard_ample(SurfaceModel surface, std::size_t n);
    /// E_i*, 1-based.
    static DivisorClass exceptional(SurfaceModel surface, std::size_t n, std::size_t i);

    const SurfaceModel& surface() const noexcept { return surface_; }
    std::size_t n() const noexcept { return m_.size(); }
    /// (a) for the plane, (a, b) for F_delta.
    const std::vector<Rational>& base() const noexcept { return base_; }
    /// m_i, i.e. the class carries -m_i E_i*.
    const std::vector<Rational>& multiplicities() const noexcept { return m_; }

    Rational& base(std::size_t k) { return base_.at(k); }
    Rational& multiplicity(std::size_t i) { return m_.at(i - 1); }
    const Rational& multiplicity(std::size_t i) const { return m_.at(i - 1); }

    bool is_pullback() const;

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    DivisorClass& operator*=(const Rational& scalar);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    void require_compatible(const DivisorClass& other) const;

    SurfaceModel surface_;
    std::vector<Rational> base_;
    std::vector<Rational> m_;
};

/// The intersection form. Throws SurfaceMismatch on different surfaces or n.
Rational pairing(const DivisorClass& x, const DivisorClass& y);
inline Rational self_intersection(const DivisorClass& x) { return pairing(x, x); }

/// E_q = E_q* - sum_{p -> q} E_p*.
DivisorClass strict_transform_of_exceptional(const Configuration& c, PointId q);

/// M0 = M* - delta F*, with M0^2 = -delta. Throws NotHirzebruch.
DivisorClass special_section_class(const SurfaceModel& surface, std::size_t n = 0);

/// Exceptional coordinates of a class in the strict-transform basis {E_q}:
/// s = P^-1 c where c_i = -m_i are the total-transform coordinates.
std::vector<Rational> to_strict_basis(const DivisorClass& x, const Configuration& c);
/// Inverse of to_strict_basis, keeping the base coefficients of `base_part`.
DivisorClass from_strict_basis(const DivisorClass& base_part, std::span<const Rational> strict, const Configuration& c);

struct MultiplicityBoundReport {
    /// a + b + delta b.
    Rational bound;
    /// Indices i (1-based) with m_i > bound.
    std::vector<std::size_t> violators;
    bool pass() const noexcept { return violators.empty(); }
};

/// Checks m_i <= a + b + delta b for a class a F* + b M* - sum m_i E_i*.
/// Throws NotHirzebruch.
MultiplicityBoundReport multiplicity_bound_check(const DivisorClass& cls);

struct InvariantBoundReport {
    Rational self_intersection;
    /// -K_F . C
    Rational lower_bound;
    bool pass = false;
};

/// C^2 >= -K_F . C, the inequality every curve with no invariant component
/// satisfies.
InvariantBoundReport invariant_bound_check(const DivisorClass& k_f, const DivisorClass& c);

enum class Chart { UX, UY, UZ, U00, U01, U10, U11 };

/// `UX`, `U01`, ... (case-insensitive). Throws UnknownChart.
Chart parse_chart(std::string_view name);
const char* chart_name(Chart chart) noexcept;
inline bool is_plane_chart(Chart chart) noexcept { return chart == Chart::UX || chart == Chart::UY || chart == Chart::UZ; }

struct ClosureDegree {
    bool plane = false;
    /// Plane: the degree of the closure.
    int degree = 0;
    /// Hirzebruch: d1 when it is determined, otherwise only d1 <= d1_upper.
    std::optional<int> d1;
    int d1_upper = 0;
    int d2 = 0;
};

/// Degree (plane chart) or bidegree (Hirzebruch chart) of the closure of an
/// affine curve f = 0 with the given total degree and x/y degrees.
/// `corner_nonzero` means f_{d0} f_{0d} != 0. Throws InvalidDegrees when the
/// degrees are inconsistent.
ClosureDegree bidegree_of_closure(Chart chart, int delta, int total_degree, int deg_x, int deg_y, bool corner_nonzero);

/// Divisor literal such as `3L - 2E1 - E4` or `2F + 1M - 1/2E3`.
/// Repeated generators add up. Throws ParseError, SurfaceMismatch (L on F_delta,
/// F/M on the plane) or UnknownPoint (E index outside 1..n).
DivisorClass parse_divisor(std::string_view text, SurfaceModel surface, std::size_t n);
std::string format_divisor(const DivisorClass& x);

}  // namespace clusterbn
