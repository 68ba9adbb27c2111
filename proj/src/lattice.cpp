#include "clusterbn/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "clusterbn/error.hpp"

namespace clusterbn {

DivisorClass::DivisorClass(SurfaceModel surface, std::size_t n)
    : surface_(surface), base_(static_cast<std::size_t>(surface.base_rank())), m_(n) {}

DivisorClass DivisorClass::plane(Rational a, std::vector<Rational> m) {
    DivisorClass out(SurfaceModel::plane(), m.size());
    out.base_[0] = std::move(a);
    out.m_ = std::move(m);
    return out;
}

DivisorClass DivisorClass::hirzebruch(SurfaceModel surface, Rational a, Rational b, std::vector<Rational> m) {
    if (!surface.is_hirzebruch()) throw Error(Errc::NotHirzebruch, "F* and M* only exist on a Hirzebruch surface");
    DivisorClass out(surface, m.size());
    out.base_[0] = std::move(a);
    out.base_[1] = std::move(b);
    out.m_ = std::move(m);
    return out;
}

DivisorClass DivisorClass::standard_ample(SurfaceModel surface, std::size_t n) {
    DivisorClass out(surface, n);
    for (auto& coefficient : out.base_) coefficient = 1;
    return out;
}

DivisorClass DivisorClass::exceptional(SurfaceModel surface, std::size_t n, std::size_t i) {
    DivisorClass out(surface, n);
    out.multiplicity(i) = -1;
    return out;
}

bool DivisorClass::is_pullback() const {
    return std::all_of(m_.begin(), m_.end(), [](const Rational& v) { return v == 0; });
}

void DivisorClass::require_compatible(const DivisorClass& other) const {
    if (surface_ != other.surface_)
        throw Error(Errc::SurfaceMismatch, "classes live over " + surface_.name() + " and " + other.surface_.name());
    if (m_.size() != other.m_.size())
        throw Error(Errc::SurfaceMismatch, "classes have " + std::to_string(m_.size()) + " and " +
                                               std::to_string(other.m_.size()) + " exceptional generators");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require_compatible(other);
    for (std::size_t k = 0; k < base_.size(); ++k) base_[k] += other.base_[k];
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += other.m_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    require_compatible(other);
    for (std::size_t k = 0; k < base_.size(); ++k) base_[k] -= other.base_[k];
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= other.m_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
    for (auto& v : base_) v *= scalar;
    for (auto& v : m_) v *= scalar;
    return *this;
}

Rational pairing(const DivisorClass& x, const DivisorClass& y) {
    if (x.surface() != y.surface() || x.n() != y.n()) {
        DivisorClass probe = x;
        probe += y;  // raises the descriptive SurfaceMismatch
    }
    const auto& a = x.base();
    const auto& b = y.base();
    Rational out;
    if (x.surface().is_plane()) {
        out = a[0] * b[0];
    } else {
        // (aF + bM).(a'F + b'M) = ab' + a'b + delta bb'
        out = a[0] * b[1] + a[1] * b[0] + Rational(x.surface().delta()) * a[1] * b[1];
    }
    const auto& mx = x.multiplicities();
    const auto& my = y.multiplicities();
    for (std::size_t i = 0; i < mx.size(); ++i) out -= mx[i] * my[i];
    return out;
}

DivisorClass strict_transform_of_exceptional(const Configuration& c, PointId q) {
    c.point(q);
    DivisorClass out(c.surface(), c.size());
    out.multiplicity(static_cast<std::size_t>(q)) = -1;
    for (PointId p : c.proximate_to(q)) out.multiplicity(static_cast<std::size_t>(p)) = 1;
    return out;
}

DivisorClass special_section_class(const SurfaceModel& surface, std::size_t n) {
    if (!surface.is_hirzebruch()) throw Error(Errc::NotHirzebruch, "the special section exists only on F_delta");
    return DivisorClass::hirzebruch(surface, Rational(-surface.delta()), Rational(1), std::vector<Rational>(n));
}

std::vector<Rational> to_strict_basis(const DivisorClass& x, const Configuration& c) {
    if (x.n() != c.size() || x.surface() != c.surface())
        throw Error(Errc::SurfaceMismatch, "class and configuration do not match");
    // s = P^-1 c, i.e. s_i = c_i + sum_{i -> k} s_k.
    std::vector<Rational> s(c.size());
    for (const Point& q : c.points()) {
        Rational v = -x.multiplicity(static_cast<std::size_t>(q.id()));
        for (PointId k : q.proximities()) v += s[k - 1];
        s[q.id() - 1] = std::move(v);
    }
    return s;
}

DivisorClass from_strict_basis(const DivisorClass& base_part, std::span<const Rational> strict, const Configuration& c) {
    if (base_part.n() != c.size() || base_part.surface() != c.surface() || strict.size() != c.size())
        throw Error(Errc::SurfaceMismatch, "class and configuration do not match");
    // c = P s, i.e. c_i = s_i - sum_{i -> k} s_k.
    DivisorClass out = base_part;
    for (const Point& q : c.points()) {
        Rational v = strict[q.id() - 1];
        for (PointId k : q.proximities()) v -= strict[k - 1];
        out.multiplicity(static_cast<std::size_t>(q.id())) = -v;
    }
    return out;
}

MultiplicityBoundReport multiplicity_bound_check(const DivisorClass& cls) {
    if (!cls.surface().is_hirzebruch()) throw Error(Errc::NotHirzebruch, "the multiplicity bound is stated on F_delta");
    const Rational& a = cls.base()[0];
    const Rational& b = cls.base()[1];
    MultiplicityBoundReport report{a + b + Rational(cls.surface().delta()) * b, {}};
    for (std::size_t i = 1; i <= cls.n(); ++i)
        if (cls.multiplicity(i) > report.bound) report.violators.push_back(i);
    return report;
}

InvariantBoundReport invariant_bound_check(const DivisorClass& k_f, const DivisorClass& c) {
    InvariantBoundReport report{self_intersection(c), -pairing(k_f, c), false};
    report.pass = report.self_intersection >= report.lower_bound;
    return report;
}

Chart parse_chart(std::string_view name) {
    std::string upper;
    for (char ch : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    static constexpr std::pair<const char*, Chart> table[] = {
        {"UX", Chart::UX},   {"UY", Chart::UY},   {"UZ", Chart::UZ},   {"U00", Chart::U00},
        {"U01", Chart::U01}, {"U10", Chart::U10}, {"U11", Chart::U11},
    };
    for (const auto& [label, chart] : table)
        if (upper == label) return chart;
    throw Error(Errc::UnknownChart, "unknown affine chart '" + std::string(name) + "'");
}

const char* chart_name(Chart chart) noexcept {
    switch (chart) {
    case Chart::UX: return "UX";
    case Chart::UY: return "UY";
    case Chart::UZ: return "UZ";
    case Chart::U00: return "U00";
    case Chart::U01: return "U01";
    case Chart::U10: return "U10";
    case Chart::U11: return "U11";
    }
    return "?";
}

ClosureDegree bidegree_of_closure(Chart chart, int delta, int total_degree, int deg_x, int deg_y, bool corner_nonzero) {
    if (total_degree < 0 || deg_x < 0 || deg_y < 0 || deg_x > total_degree || deg_y > total_degree)
        throw Error(Errc::InvalidDegrees, "need 0 <= deg_x, deg_y <= total degree");
    if (corner_nonzero && (deg_x != total_degree || deg_y != total_degree))
        throw Error(Errc::InvalidDegrees, "f_{d0} f_{0d} != 0 forces deg_x = deg_y = total degree");

    ClosureDegree out;
    if (is_plane_chart(chart)) {
        out.plane = true;
        out.degree = total_degree;
        return out;
    }
    if (delta < 0) throw Error(Errc::InvalidDegrees, "Hirzebruch index must be nonnegative");
    out.d2 = deg_y;
    out.d1_upper = deg_x;
    if (corner_nonzero) {
        const bool first_case = chart == Chart::U00 || chart == Chart::U10 || delta == 0;
        out.d1 = first_case ? total_degree : 0;
        out.d1_upper = *out.d1;
    }
    return out;
}

namespace {

class DivisorParser {
public:
    DivisorParser(std::string_view text, SurfaceModel surface, std::size_t n) : original_(text), result_(surface, n) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }

    DivisorClass parse() {
        if (text_.empty()) fail("empty divisor literal");
        if (text_ == "0") return result_;
        bool first = true;
        while (pos_ < text_.size()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            first = false;
            Rational coefficient = sign * parse_coefficient();
            if (peek() == '*') take();
            apply(coefficient);
        }
        return result_;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError, why + " in divisor '" + std::string(original_) + "'");
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
        return out;
    }

    Rational parse_coefficient() {
        std::string num = digits();
        if (num.empty()) return 1;
        if (peek() != '/') return Rational(Integer(num));
        take();
        std::string den = digits();
        if (den.empty()) fail("missing denominator");
        return parse_rational(num + "/" + den);
    }

    void apply(const Rational& coefficient) {
        const char gen = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
        if (gen == '\0') fail("coefficient without a generator");
        take();
        const SurfaceModel& surface = result_.surface();
        switch (gen) {
        case 'L':
            if (!surface.is_plane()) throw Error(Errc::SurfaceMismatch, "L is a plane generator; surface is " + surface.name());
            result_.base(0) += coefficient;
            return;
        case 'F':
        case 'M':
            if (!surface.is_hirzebruch())
                throw Error(Errc::SurfaceMismatch, std::string(1, gen) + " is a Hirzebruch generator; surface is p2");
            result_.base(gen == 'F' ? 0 : 1) += coefficient;
            return;
        case 'E': {
            const std::string index = digits();
            if (index.empty()) fail("E needs an index");
            const auto i = std::stoul(index);
            if (i < 1 || i > result_.n())
                throw Error(Errc::UnknownPoint, "E" + index + " outside 1.." + std::to_string(result_.n()), static_cast<int>(i));
            result_.multiplicity(i) -= coefficient;
            return;
        }
        default: fail(std::string("unknown generator '") + gen + "'");
        }
    }

    std::string_view original_;
    std::string text_;
    std::size_t pos_ = 0;
    DivisorClass result_;
};

void append_term(std::ostringstream& out, bool& first, const Rational& coefficient, const std::string& generator) {
    if (coefficient == 0) return;
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
        if (negative) out << '-';
    } else {
        out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) out << to_string(magnitude);
    out << generator;
    first = false;
}

}  // namespace

DivisorClass parse_divisor(std::string_view text, SurfaceModel surface, std::size_t n) {
    return DivisorParser(text, surface, n).parse();
}

std::string format_divisor(const DivisorClass& x) {
    std::ostringstream out;
    bool first = true;
    if (x.surface().is_plane()) {
        append_term(out, first, x.base()[0], "L");
    } else {
        append_term(out, first, x.base()[0], "F");
        append_term(out, first, x.base()[1], "M");
    }
    for (std::size_t i = 1; i <= x.n(); ++i) append_term(out, first, -x.multiplicity(i), "E" + std::to_string(i));
    return first ? "0" : out.str();
}

}  // namespace clusterbn
