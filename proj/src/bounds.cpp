#include "clusterbn/bounds.hpp"

#include <algorithm>

#include "clusterbn/error.hpp"
#include "clusterbn/sufficiency.hpp"

namespace clusterbn {

const char* convention_name(NConvention convention) noexcept {
    return convention == NConvention::Stated ? "stated" : "example";
}

NConvention parse_convention(std::string_view text) {
    if (text == "stated") return NConvention::Stated;
    if (text == "example") return NConvention::Example;
    throw Error(Errc::ParseError, "n convention must be 'stated' or 'example', got '" + std::string(text) + "'");
}

const char* bound_kind_name(BoundKind kind) noexcept {
    switch (kind) {
    case BoundKind::NegativityByCase: return "by_case";
    case BoundKind::EpsilonScaled: return "epsilon_scaled";
    case BoundKind::EpsilonScaledCompact: return "epsilon_scaled_compact";
    case BoundKind::Pullback: return "pullback";
    }
    return "unknown";
}

std::optional<Rational> BoundReport::minimum_of(std::string_view group) const {
    std::optional<Rational> out;
    for (const auto& term : terms)
        if (term.group == group && (!out || term.value < *out)) out = term.value;
    return out;
}

BoundInputs bound_inputs(const Configuration& c) {
    const DValues dv = d_values(c);
    return {c.size(), dv.hat_points, dv.total, exceptional_self_intersections(c).gamma};
}

namespace {

void require_positive(const Rational& epsilon) {
    if (epsilon <= 0) throw Error(Errc::NonPositiveEpsilon, "epsilon must be positive, got " + to_string(epsilon));
}

// Foliation-derived terms shared by every bound family, before scaling.
std::vector<BoundTerm> foliation_terms(const BoundInputs& in, const SurfaceModel& surface, NConvention convention,
                                       bool include_n_delta) {
    const Integer& d = in.d;
    const Integer n = in.n(convention);
    if (surface.is_plane()) {
        return {
            {"non_invariant", "3-2d", Rational(3 - 2 * d)},
            {"invariant", "d(1-n)", Rational(d * (1 - n))},
        };
    }
    const Integer delta = surface.delta();
    std::vector<BoundTerm> terms{{"non_invariant", "2-2d-delta", Rational(2 - 2 * d - delta)}};
    if (include_n_delta) terms.push_back({"invariant", "-n-delta", Rational(-n - delta)});
    terms.push_back({"invariant", "-(delta+2)dn", Rational(-(delta + 2) * d * n)});
    return terms;
}

BoundReport finish(BoundKind kind, const BoundInputs& in, const SurfaceModel& surface, NConvention convention,
                   std::optional<Rational> epsilon, std::vector<BoundTerm> terms) {
    BoundReport report;
    report.kind = kind;
    report.surface = surface;
    report.inputs = in;
    report.convention = convention;
    report.epsilon = std::move(epsilon);
    report.terms = std::move(terms);
    report.bound = report.terms.front().value;
    for (const auto& term : report.terms) report.bound = std::min(report.bound, term.value);
    return report;
}

BoundReport epsilon_scaled(BoundKind kind, const BoundInputs& in, const SurfaceModel& surface, const Rational& epsilon,
                           NConvention convention, bool include_n_delta) {
    require_positive(epsilon);
    auto terms = foliation_terms(in, surface, convention, include_n_delta);
    for (auto& term : terms) {
        term.formula = "(" + term.formula + ")/eps";
        term.value /= epsilon;
    }
    terms.push_back({"exceptional", "-gamma", Rational(-in.gamma)});
    return finish(kind, in, surface, convention, epsilon, std::move(terms));
}

}  // namespace

BoundReport teo2_bounds(const BoundInputs& inputs, SurfaceModel surface, NConvention convention) {
    return finish(BoundKind::NegativityByCase, inputs, surface, convention, std::nullopt,
                  foliation_terms(inputs, surface, convention, true));
}

BoundReport teo2_bounds(const Configuration& c, NConvention convention) {
    return teo2_bounds(bound_inputs(c), c.surface(), convention);
}

BoundReport cor_expl1_bounds(const BoundInputs& inputs, SurfaceModel surface, const Rational& epsilon,
                             NConvention convention) {
    return epsilon_scaled(BoundKind::EpsilonScaled, inputs, surface, epsilon, convention, true);
}

BoundReport cor_expl1_bounds(const Configuration& c, const Rational& epsilon, NConvention convention,
                             std::optional<int> gamma_override) {
    BoundInputs inputs = bound_inputs(c);
    if (gamma_override) inputs.gamma = *gamma_override;
    return cor_expl1_bounds(inputs, c.surface(), epsilon, convention);
}

BoundReport compact_epsilon_bounds(const BoundInputs& inputs, SurfaceModel surface, const Rational& epsilon,
                                   NConvention convention) {
    return epsilon_scaled(BoundKind::EpsilonScaledCompact, inputs, surface, epsilon, convention, false);
}

BoundReport cor_cotaejemplo_bounds(const BoundInputs& inputs, SurfaceModel surface, NConvention convention) {
    return finish(BoundKind::Pullback, inputs, surface, convention, std::nullopt,
                  foliation_terms(inputs, surface, convention, true));
}

BoundReport cor_cotaejemplo_bounds(const Configuration& c, NConvention convention) {
    return cor_cotaejemplo_bounds(bound_inputs(c), c.surface(), convention);
}

FoliationDegree FoliationDegree::plane(int r) {
    if (r < 0) throw Error(Errc::InvalidDegrees, "foliation degree must be nonnegative");
    return FoliationDegree(true, r, 0, 0);
}

BetaBound beta_bound(const FoliationDegree& f, const SurfaceModel& surface, const std::optional<Rational>& epsilon) {
    if (f.is_plane() != surface.is_plane())
        throw Error(Errc::SurfaceMismatch, std::string(f.is_plane() ? "a degree" : "a bidegree") +
                                               " does not describe a foliation on " + surface.name());
    BetaBound out{f.beta(), Rational(-f.beta()), std::nullopt};
    if (epsilon) {
        require_positive(*epsilon);
        out.scaled = out.bound / *epsilon;
    }
    return out;
}

Rational generic_foliation_bound(const Rational& epsilon) {
    // beta = 1: a plane foliation of degree 2.
    return *beta_bound(FoliationDegree::plane(2), SurfaceModel::plane(), epsilon).scaled;
}

FoliationBoundReport foliation_bounds(const FoliationDegree& f, const SurfaceModel& surface,
                                      const std::optional<Rational>& epsilon, const Rational& alpha_hat, int gamma) {
    FoliationBoundReport out{beta_bound(f, surface, epsilon), alpha_hat, std::nullopt, Rational(0)};
    if (epsilon) {
        out.gamma = gamma;
        out.bound = std::min({*out.beta.scaled, Rational(-alpha_hat), Rational(-gamma)});
    } else {
        out.bound = std::min(out.beta.bound, Rational(-alpha_hat));
    }
    return out;
}

AttachedFoliationBounds attached_foliation_degree_bounds(const Integer& d, SurfaceModel surface) {
    AttachedFoliationBounds out;
    out.surface = surface;
    out.d = d;
    out.first_integral_degree = d;
    if (surface.is_plane()) {
        out.r_max = 2 * d - 2;
    } else {
        out.r1_max = 2 * d + surface.delta() - 2;
        out.r2_max = 2 * d - 2;
        out.first_integral_d1_max = d;
        out.first_integral_d2 = d;
    }
    return out;
}

AttachedFoliationBounds attached_foliation_degree_bounds(const Configuration& c) {
    return attached_foliation_degree_bounds(total_d(c), c.surface());
}

EmpiricalNu empirical_nu(std::span<const DivisorClass> curves, const DivisorClass& big_nef) {
    EmpiricalNu out;
    out.entries.reserve(curves.size());
    for (std::size_t k = 0; k < curves.size(); ++k) {
        NuEntry entry;
        entry.self_intersection = self_intersection(curves[k]);
        entry.d_dot_c = pairing(big_nef, curves[k]);
        entry.qualifies = entry.self_intersection < 0 && entry.d_dot_c > 0;
        if (entry.d_dot_c != 0) entry.ratio = entry.self_intersection / entry.d_dot_c;
        if (entry.qualifies && (!out.value || *entry.ratio < *out.value)) {
            out.value = entry.ratio;
            out.argmin = k;
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

DeltaMembershipReport delta_membership_check(const DivisorClass& d, const DivisorClass& g, const Rational& epsilon,
                                             std::span<const DivisorClass> witnesses) {
    require_positive(epsilon);
    DeltaMembershipReport report{d - epsilon * g, {}, {}, true};
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
        DeltaWitness w;
        w.d_dot_c = pairing(d, witnesses[k]);
        w.residual_dot_c = pairing(report.residual, witnesses[k]);
        w.applies = w.d_dot_c > 0;
        w.ok = !w.applies || w.residual_dot_c >= 0;
        if (!w.ok) report.violations.push_back(k);
        if (w.residual_dot_c < 0) report.residual_nonnegative = false;
        report.witnesses.push_back(std::move(w));
    }
    return report;
}

}  // namespace clusterbn
