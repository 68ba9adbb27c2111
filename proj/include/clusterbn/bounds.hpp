#pragma once

// Lower bounds on C^2 / (D . C) for negative curves C on the sky S of a
// configuration, and tools to evaluate C^2 / (D . C) on explicit curve lists.
// Everything is exact; the inputs are n, d = total_d, gamma and delta.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterbn/configuration.hpp"
#include "clusterbn/exact.hpp"
#include "clusterbn/lattice.hpp"

namespace clusterbn {

/// Which point count the bound formulas use: the configuration's cardinality
/// (Stated) or the total size of the hat configurations (Example), the count
/// behind the printed numbers for the twelve-point configuration in data/example12.cfg.
enum class NConvention { Stated, Example };

const char* convention_name(NConvention convention) noexcept;
/// `stated` or `example`. Throws ParseError.
NConvention parse_convention(std::string_view text);

/// Combinatorial inputs of the bounds.
struct BoundInputs {
    std::size_t n_stated = 0;
    std::size_t n_example = 0;
    Integer d;
    int gamma = 0;

    Integer n(NConvention convention) const {
        return convention == NConvention::Stated ? Integer(n_stated) : Integer(n_example);
    }
};

/// n, hat size, total d and gamma of a configuration.
BoundInputs bound_inputs(const Configuration& c);

enum class BoundKind {
    /// Per-case bounds for D = L* (or F* + M*).
    NegativityByCase,
    /// D in Delta(S; L* or F*+M*, eps): every foliation term divided by eps, plus -gamma.
    EpsilonScaled,
    /// The same family in the compact form that drops -n-delta on F_delta.
    EpsilonScaledCompact,
    /// D the pullback of a nef divisor on S0.
    Pullback,
};

const char* bound_kind_name(BoundKind kind) noexcept;

struct BoundTerm {
    /// non_invariant | invariant | exceptional
    std::string group;
    std::string formula;
    Rational value;
};

struct BoundReport {
    BoundKind kind = BoundKind::Pullback;
    SurfaceModel surface = SurfaceModel::plane();
    BoundInputs inputs;
    NConvention convention = NConvention::Stated;
    std::optional<Rational> epsilon;
    std::vector<BoundTerm> terms;
    /// Minimum over all terms.
    Rational bound;

    Integer n() const { return inputs.n(convention); }
    bool conventions_differ() const noexcept { return inputs.n_stated != inputs.n_example; }
    /// Minimum over the terms of one group, if any.
    std::optional<Rational> minimum_of(std::string_view group) const;
};

/// Non-invariant case: 3-2d (plane), 2-2d-delta (F_delta).
/// Invariant case: d(1-n) (plane), min{-n-delta, -(delta+2)dn} (F_delta).
BoundReport teo2_bounds(const BoundInputs& inputs, SurfaceModel surface, NConvention convention = NConvention::Stated);
BoundReport teo2_bounds(const Configuration& c, NConvention convention = NConvention::Stated);

/// min{(3-2d)/eps, d(1-n)/eps, -gamma} on the plane and
/// min{(2-2d-delta)/eps, (-n-delta)/eps, (-delta-2)dn/eps, -gamma} on F_delta.
/// Throws NonPositiveEpsilon.
BoundReport cor_expl1_bounds(const BoundInputs& inputs, SurfaceModel surface, const Rational& epsilon,
                             NConvention convention = NConvention::Stated);
/// `gamma_override` replaces the configuration's gamma.
BoundReport cor_expl1_bounds(const Configuration& c, const Rational& epsilon, NConvention convention = NConvention::Stated,
                             std::optional<int> gamma_override = std::nullopt);

/// cor_expl1_bounds without the -n-delta term on F_delta (identical on the plane).
BoundReport compact_epsilon_bounds(const BoundInputs& inputs, SurfaceModel surface, const Rational& epsilon,
                                   NConvention convention = NConvention::Stated);

/// min{3-2d, d(1-n)} on the plane, min{2-2d-delta, -n-delta, -(delta+2)dn} on F_delta.
BoundReport cor_cotaejemplo_bounds(const BoundInputs& inputs, SurfaceModel surface,
                                   NConvention convention = NConvention::Stated);
BoundReport cor_cotaejemplo_bounds(const Configuration& c, NConvention convention = NConvention::Stated);

/// Degree r of a foliation on P^2 (canonical divisor (r-1)L) or bidegree
/// (r1, r2) on F_delta (canonical divisor r1 F + r2 M).
class FoliationDegree {
public:
    static FoliationDegree plane(int r);
    static FoliationDegree hirzebruch(int r1, int r2) noexcept { return FoliationDegree(false, 0, r1, r2); }

    bool is_plane() const noexcept { return plane_; }
    int r() const noexcept { return r_; }
    int r1() const noexcept { return r1_; }
    int r2() const noexcept { return r2_; }
    /// r - 1 on the plane, r1 + r2 on F_delta.
    Integer beta() const { return plane_ ? Integer(r_ - 1) : Integer(r1_) + r2_; }

private:
    FoliationDegree(bool plane, int r, int r1, int r2) noexcept : plane_(plane), r_(r), r1_(r1), r2_(r2) {}

    bool plane_;
    int r_;
    int r1_;
    int r2_;
};

struct BetaBound {
    Integer beta;
    /// -beta
    Rational bound;
    /// -beta / eps when eps was supplied.
    std::optional<Rational> scaled;
};

/// Throws SurfaceMismatch (plane degree on F_delta or vice versa) and
/// NonPositiveEpsilon.
BetaBound beta_bound(const FoliationDegree& f, const SurfaceModel& surface,
                     const std::optional<Rational>& epsilon = std::nullopt);

/// -1/eps: the bound for D in Delta(X; K_G, eps) and a foliation G whose
/// negative invariant curves are excluded. Same computation as beta_bound with
/// beta = 1. Throws NonPositiveEpsilon.
Rational generic_foliation_bound(const Rational& epsilon);

struct FoliationBoundReport {
    BetaBound beta;
    /// alpha-hat supplied by the caller (0 when no negative invariant curves are known).
    Rational alpha_hat;
    /// gamma, included only for the eps-scaled form.
    std::optional<int> gamma;
    /// min{-beta, -alpha} (pullbacks / D = L*, F*+M*) or
    /// min{-beta/eps, -alpha, -gamma} (D in Delta).
    Rational bound;
};

FoliationBoundReport foliation_bounds(const FoliationDegree& f, const SurfaceModel& surface,
                                      const std::optional<Rational>& epsilon, const Rational& alpha_hat, int gamma);

struct AttachedFoliationBounds {
    SurfaceModel surface = SurfaceModel::plane();
    Integer d;
    /// plane: r <= r_max; F_delta: r1 <= r1_max, r2 <= r2_max.
    Integer r_max;
    Integer r1_max;
    Integer r2_max;
    /// Degree d of the rational first integral (plane), or its bidegree
    /// (d1, d2) with d1 <= first_integral_d1_max and d2 = first_integral_d2.
    Integer first_integral_degree;
    Integer first_integral_d1_max;
    Integer first_integral_d2;
};

AttachedFoliationBounds attached_foliation_degree_bounds(const Configuration& c);
AttachedFoliationBounds attached_foliation_degree_bounds(const Integer& d, SurfaceModel surface);

struct NuEntry {
    Rational self_intersection;
    Rational d_dot_c;
    /// C^2 < 0 and D . C > 0.
    bool qualifies = false;
    std::optional<Rational> ratio;
};

struct EmpiricalNu {
    std::vector<NuEntry> entries;
    /// Minimum ratio over qualifying curves; empty when none qualifies.
    std::optional<Rational> value;
    std::optional<std::size_t> argmin;
};

/// min C^2 / (D . C) over the listed classes with C^2 < 0 and D . C > 0.
/// Throws SurfaceMismatch.
EmpiricalNu empirical_nu(std::span<const DivisorClass> curves, const DivisorClass& big_nef);

struct DeltaWitness {
    Rational d_dot_c;
    /// (D - eps G) . C
    Rational residual_dot_c;
    /// D . C > 0, so the membership inequality must hold.
    bool applies = false;
    bool ok = true;
};

struct DeltaMembershipReport {
    DivisorClass residual;
    std::vector<DeltaWitness> witnesses;
    /// Indices of witnesses with D . C > 0 and (D - eps G) . C < 0.
    std::vector<std::size_t> violations;
    /// (D - eps G) . C >= 0 for every witness, whatever D . C is.
    bool residual_nonnegative = true;
    bool pass() const noexcept { return violations.empty(); }
};

/// Tests (D - eps G) . C >= 0 on the witnesses with D . C > 0. A sufficient
/// check against a finite list, not a decision procedure.
/// Throws NonPositiveEpsilon, SurfaceMismatch.
DeltaMembershipReport delta_membership_check(const DivisorClass& d, const DivisorClass& g, const Rational& epsilon,
                                             std::span<const DivisorClass> witnesses);

}  // namespace clusterbn
