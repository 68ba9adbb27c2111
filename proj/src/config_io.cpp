#include "clusterbn/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "clusterbn/error.hpp"

namespace clusterbn {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

int parse_id(const std::string& word, int line) {
    if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::ParseError, "expected a point id, got '" + word + "'", 0, line);
    try {
        return std::stoi(word);
    } catch (const std::out_of_range&) {
        throw Error(Errc::ParseError, "point id out of range: '" + word + "'", 0, line);
    }
}

}  // namespace

SurfaceModel parse_surface(std::string_view text) {
    const auto words = split_words(text);
    if (words.size() == 1 && (words[0] == "p2" || words[0] == "P2")) return SurfaceModel::plane();
    std::string delta;
    if (words.size() == 2 && (words[0] == "f" || words[0] == "F")) delta = words[1];
    if (words.size() == 1 && words[0].size() > 1 && (words[0][0] == 'f' || words[0][0] == 'F')) delta = words[0].substr(1);
    if (!delta.empty() && delta.find_first_not_of("0123456789") == std::string::npos) {
        try {
            return SurfaceModel::hirzebruch(std::stoi(delta));
        } catch (const std::out_of_range&) {
        }
    }
    throw Error(Errc::ParseError, "surface must be 'p2' or 'f <delta>' with delta >= 0, got '" + std::string(text) + "'");
}

Configuration parse_configuration(std::string_view text) {
    std::optional<SurfaceModel> surface;
    std::vector<PointSpec> specs;
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto words = split_words(raw);
        if (words.empty()) continue;

        if (words[0] == "surface") {
            if (surface) throw Error(Errc::ParseError, "surface given twice", 0, line_no);
            if (!specs.empty()) throw Error(Errc::ParseError, "the surface line must come before the points", 0, line_no);
            std::string rest;
            for (std::size_t k = 1; k < words.size(); ++k) rest += words[k] + " ";
            try {
                surface = parse_surface(rest);
            } catch (const Error& e) {
                throw Error(Errc::ParseError, e.what(), 0, line_no);
            }
            continue;
        }
        if (!surface) throw Error(Errc::ParseError, "expected 'surface p2' or 'surface f <delta>' first", 0, line_no);

        PointSpec spec{parse_id(words[0], line_no), {}};
        if (words.size() == 2 && words[1] == "origin") {
            // no proximities
        } else if ((words.size() == 3 || words.size() == 4) && words[1] == "->") {
            for (std::size_t k = 2; k < words.size(); ++k) {
                const int target = parse_id(words[k], line_no);
                const bool defined = std::any_of(specs.begin(), specs.end(), [&](const PointSpec& s) { return s.id == target; });
                if (!defined)
                    throw Error(Errc::ParseError, "point " + std::to_string(target) + " is not defined on an earlier line",
                                spec.id, line_no);
                spec.proximities.push_back(target);
            }
        } else {
            throw Error(Errc::ParseError, "expected '<id> origin' or '<id> -> <parent> [<second>]'", 0, line_no);
        }
        specs.push_back(std::move(spec));
    }
    if (!surface) throw Error(Errc::ParseError, "missing surface line", 0, line_no);
    return build_configuration(specs, *surface);
}

Configuration read_configuration_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_configuration(buffer.str());
}

std::string to_config_text(const Configuration& c) {
    std::ostringstream out;
    out << "surface " << c.surface().name() << "\n";
    for (const Point& p : c.points()) {
        out << p.id();
        if (p.is_origin()) {
            out << " origin";
        } else {
            out << " ->";
            for (PointId target : p.proximities()) out << " " << target;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace clusterbn
