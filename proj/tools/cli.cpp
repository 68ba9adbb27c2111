#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "clusterbn/bounds.hpp"
#include "clusterbn/config_io.hpp"
#include "clusterbn/configuration.hpp"
#include "clusterbn/error.hpp"
#include "clusterbn/lattice.hpp"
#include "clusterbn/report_json.hpp"
#include "clusterbn/sufficiency.hpp"

namespace clusterbn::cli {

namespace {

struct Options {
    std::string input;
    bool json = false;
    std::string output;
    std::string surface;
    // bounds
    std::string epsilon;
    std::string convention = "stated";
    bool pullback = false;
    // nu
    std::string divisor;
    std::string curves;
};

std::string exact_and_decimal(const Rational& value) {
    const std::string exact = to_string(value);
    if (boost::multiprecision::denominator(value) == 1) return exact;
    return exact + " (~" + to_decimal(value) + ")";
}

std::string join_ids(const std::vector<PointId>& ids, const char* prefix = "p") {
    std::string out;
    for (std::size_t k = 0; k < ids.size(); ++k) out += (k ? ", " : "") + std::string(prefix) + std::to_string(ids[k]);
    return out;
}

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + to_string(values[k]);
    return out + ")";
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j) out << " " << std::setw(static_cast<int>(width)) << m(i, j).str();
        out << "\n";
    }
}

Configuration load(const Options& opt) {
    Configuration c = read_configuration_file(opt.input);
    if (!opt.surface.empty()) c = c.with_surface(parse_surface(opt.surface));
    return c;
}

void analyze(const Options& opt, std::ostream& out) {
    const Configuration c = load(opt);
    if (opt.json) {
        out << analyze_json(c).dump(2) << "\n";
        return;
    }
    const auto e_sq = exceptional_self_intersections(c);
    const auto m = multiplicity_vector(c);
    out << "surface: " << c.surface().name() << "\n";
    out << "points: " << c.size() << "\n\n";
    out << "  id  level  kind       end  proximities  E^2  m\n";
    for (const auto& pc : classify(c)) {
        std::string prox;
        for (PointId t : c.point(pc.id).proximities()) prox += (prox.empty() ? "" : ",") + std::to_string(t);
        out << std::setw(4) << pc.id << "  " << std::setw(5) << pc.level << "  " << std::left << std::setw(9)
            << kind_name(pc.kind) << "  " << std::setw(3) << (pc.end ? "yes" : "no") << "  " << std::setw(11)
            << (prox.empty() ? "-" : prox) << std::right << "  " << std::setw(3) << e_sq.values[pc.id - 1] << "  "
            << m[pc.id - 1] << "\n";
    }
    out << "\norigins: " << join_ids(c.origins()) << "\n";
    out << "ends: " << join_ids(c.ends()) << "\n";
    out << "gamma: " << e_sq.gamma << "\n";
    const auto p = proximity_matrix(c);
    out << "\nproximity matrix:\n";
    print_matrix(out, p.entries);
    out << "inverse:\n";
    print_matrix(out, p.inverse);
}

void dvalue(const Options& opt, std::ostream& out) {
    const Configuration c = load(opt);
    const DValues values = d_values(c);
    if (opt.json) {
        out << dvalue_json(values).dump(2) << "\n";
        return;
    }
    const auto labels = hat_labels(values);
    for (std::size_t k = 0; k < values.per_origin.size(); ++k) {
        const auto& entry = values.per_origin[k];
        const auto& dv = entry.value;
        out << "origin p" << entry.origin << ": d = " << dv.d << "\n";
        out << "  hat: {";
        for (std::size_t j = 0; j < labels[k].size(); ++j) out << (j ? ", " : "") << labels[k][j];
        out << "} (" << dv.hat.extended.size() << " points)\n";
        for (const auto& [new_id, end] : dv.hat.added)
            out << "  added " << labels[k][new_id - 1] << " proximate to " << labels[k][end - 1] << " and "
                << labels[k][*dv.hat.extended.point(end).parent() - 1] << "\n";
        out << "  v_d     = " << tuple_text(dv.certificate) << "\n";
        out << "  v_(d-1) = " << tuple_text(dv.previous) << "\n";
    }
    out << "total d = " << values.total << "\n";
    out << "n = " << c.size() << " (hat points: " << values.hat_points << ")\n";
}

void warn_conventions(const BoundReport& report, std::ostream& err) {
    if (!report.conventions_differ()) return;
    err << "warning: the point count differs between conventions (stated n = " << report.inputs.n_stated
        << ", hat-based n = " << report.inputs.n_example << "); using " << convention_name(report.convention)
        << "\n";
}

void bounds(const Options& opt, std::ostream& out, std::ostream& err) {
    const Configuration c = load(opt);
    const NConvention convention = parse_convention(opt.convention);
    const BoundReport report =
        opt.pullback ? cor_cotaejemplo_bounds(c, convention) : cor_expl1_bounds(c, parse_rational(opt.epsilon), convention);
    const AttachedFoliationBounds attached = attached_foliation_degree_bounds(report.inputs.d, c.surface());
    warn_conventions(report, err);
    if (opt.json) {
        auto j = bound_report_json(report);
        j["attached_foliation"] = attached_bounds_json(attached);
        out << j.dump(2) << "\n";
        return;
    }
    out << "surface: " << c.surface().name() << "\n";
    out << "n = " << report.n() << " (" << convention_name(convention) << "; stated " << report.inputs.n_stated
        << ", hat-based " << report.inputs.n_example << ")\n";
    out << "d = " << report.inputs.d << ", gamma = " << report.inputs.gamma << "\n";
    if (report.epsilon) out << "epsilon = " << exact_and_decimal(*report.epsilon) << "\n";
    out << (opt.pullback ? "bound on nu_D for D pulled back from a nef divisor on the base:\n"
                         : "bound on nu_D for nef D with (D - eps G).C >= 0 whenever D.C > 0:\n");
    for (const auto& term : report.terms)
        out << "  " << std::left << std::setw(22) << term.formula << std::right << " = " << exact_and_decimal(term.value)
            << "   [" << term.group << "]\n";
    out << "bound = " << exact_and_decimal(report.bound) << "\n";
    if (c.surface().is_plane()) {
        out << "attached foliation: degree r <= " << attached.r_max << ", rational first integral of degree "
            << attached.first_integral_degree << "\n";
    } else {
        out << "attached foliation: bidegree r1 <= " << attached.r1_max << ", r2 <= " << attached.r2_max
            << ", rational first integral of bidegree (d1 <= " << attached.first_integral_d1_max << ", "
            << attached.first_integral_d2 << ")\n";
    }
}

std::vector<DivisorClass> read_curves(const std::string& path, const Configuration& c) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::vector<DivisorClass> curves;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            curves.push_back(parse_divisor(line, c.surface(), c.size()));
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), e.point(), line_no);
        }
    }
    return curves;
}

void nu(const Options& opt, std::ostream& out) {
    const Configuration c = load(opt);
    const DivisorClass d = parse_divisor(opt.divisor, c.surface(), c.size());
    const auto curves = read_curves(opt.curves, c);
    const EmpiricalNu result = empirical_nu(curves, d);
    if (opt.json) {
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t k = 0; k < curves.size(); ++k) {
            const auto& e = result.entries[k];
            entries.push_back({{"class", format_divisor(curves[k])},
                               {"self_intersection", to_string(e.self_intersection)},
                               {"d_dot_c", to_string(e.d_dot_c)},
                               {"qualifies", e.qualifies},
                               {"ratio", e.ratio ? nlohmann::json(to_string(*e.ratio)) : nlohmann::json(nullptr)}});
        }
        out << nlohmann::json{{"divisor", format_divisor(d)},
                              {"curves", std::move(entries)},
                              {"nu", result.value ? nlohmann::json(to_string(*result.value)) : nlohmann::json(nullptr)}}
                   .dump(2)
            << "\n";
        return;
    }
    out << "D = " << format_divisor(d) << "\n";
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& e = result.entries[k];
        out << "  " << format_divisor(curves[k]) << ": C^2 = " << to_string(e.self_intersection)
            << ", D.C = " << to_string(e.d_dot_c);
        if (e.qualifies) out << ", ratio = " << exact_and_decimal(*e.ratio);
        else out << " (skipped: needs C^2 < 0 and D.C > 0)";
        out << "\n";
    }
    out << "nu over listed curves = " << (result.value ? exact_and_decimal(*result.value) : std::string("undefined"))
        << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounded-negativity bounds for rational surfaces given by configurations of infinitely near points",
                 "clusterbn"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("file", opt.input, "Configuration file")->required();
        sub->add_option("--surface", opt.surface, "Override the base surface: p2 or 'f <delta>'");
        sub->add_option("-o,--output", opt.output, "Write the report to this file");
    };
    auto add_json = [&opt](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit JSON"); };

    auto* analyze_cmd = app.add_subcommand("analyze", "Points, proximity matrix, multiplicities, E^2 and gamma");
    add_common(analyze_cmd);
    add_json(analyze_cmd);

    auto* dvalue_cmd = app.add_subcommand("dvalue", "Hat configurations and d per origin");
    add_common(dvalue_cmd);
    add_json(dvalue_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on C^2/(D.C)");
    add_common(bounds_cmd);
    add_json(bounds_cmd);
    auto* eps_opt = bounds_cmd->add_option("--epsilon", opt.epsilon, "Positive rational p/q");
    auto* pull_opt = bounds_cmd->add_flag("--pullback", opt.pullback, "Bound for pullbacks of nef divisors on the base");
    eps_opt->excludes(pull_opt);
    bounds_cmd->add_option("--n-convention", opt.convention, "stated (n = #C) or example (n = total hat size)")
        ->check(CLI::IsMember({"stated", "example"}));

    auto* nu_cmd = app.add_subcommand("nu", "min C^2/(D.C) over a list of classes");
    add_common(nu_cmd);
    add_json(nu_cmd);
    nu_cmd->add_option("--divisor", opt.divisor, "Divisor literal, e.g. '3L - E2'")->required();
    nu_cmd->add_option("--curves", opt.curves, "File with one divisor literal per line")->required();

    auto* dot_cmd = app.add_subcommand("dot", "Proximity graph in DOT");
    add_common(dot_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    if (bounds_cmd->parsed() && !opt.pullback && opt.epsilon.empty()) {
        err << "usage error: bounds needs --epsilon p/q unless --pullback is given\n";
        return kUsage;
    }

    std::ostringstream report;
    try {
        if (analyze_cmd->parsed()) analyze(opt, report);
        else if (dvalue_cmd->parsed()) dvalue(opt, report);
        else if (bounds_cmd->parsed()) bounds(opt, report, err);
        else if (nu_cmd->parsed()) nu(opt, report);
        else if (dot_cmd->parsed()) report << dot_export(load(opt));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    if (opt.output.empty()) {
        out << report.str();
    } else {
        std::ofstream file(opt.output);
        if (!file) {
            err << "error: cannot write " << opt.output << "\n";
            return kInvalidInput;
        }
        file << report.str();
    }
    return kSuccess;
}

}  // namespace clusterbn::cli
