#include "fatpoints/schemeio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fatpoints {

namespace {

Rat json_rational(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
        if (v.is_string()) return parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
        throw MalformedScheme(where + ": " + e.what());
    }
    throw MalformedScheme(where + ": expected an integer or a rational string");
}

FatPointScheme parse_points(const nlohmann::json& arr) {
    if (!arr.is_array()) throw MalformedScheme("\"points\" must be an array");
    std::vector<FatEntry> entries;
    for (size_t k = 0; k < arr.size(); ++k) {
        const auto& e = arr[k];
        std::string where = "points[" + std::to_string(k) + "]";
        if (!e.is_object() || !e.contains("x") || !e.contains("y"))
            throw MalformedScheme(where + ": expected an object with \"x\" and \"y\"");
        const auto &x = e["x"], &y = e["y"];
        if (!x.is_array() || x.size() != 2 || !y.is_array() || y.size() != 2)
            throw MalformedScheme(where + ": \"x\" and \"y\" must be pairs");
        int m = 1;
        if (e.contains("m")) {
            if (!e["m"].is_number_integer() || e["m"].get<long long>() < 1)
                throw MalformedScheme(where + ": \"m\" must be a positive integer");
            m = static_cast<int>(e["m"].get<long long>());
        }
        PointP1P1 p;
        try {
            p = PointP1P1::make(json_rational(x[0], where), json_rational(x[1], where),
                                json_rational(y[0], where), json_rational(y[1], where));
        } catch (const MalformedScheme&) {
            throw;
        } catch (const std::exception& ex) {
            throw MalformedScheme(where + ": " + ex.what());
        }
        entries.push_back({p, m});
    }
    try {
        return FatPointScheme(std::move(entries));
    } catch (const std::exception& ex) {
        throw MalformedScheme(std::string("points: ") + ex.what());
    }
}

std::vector<BiPoly> parse_generators(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty())
        throw MalformedScheme("\"generators\" must be a non-empty array");
    std::vector<BiPoly> gens;
    for (size_t k = 0; k < arr.size(); ++k) {
        std::string where = "generators[" + std::to_string(k) + "]";
        if (!arr[k].is_string()) throw MalformedScheme(where + ": expected a polynomial string");
        BiPoly g;
        try {
            g = BiPoly::parse(arr[k].get<std::string>());
        } catch (const std::exception& ex) {
            throw MalformedScheme(where + ": " + ex.what());
        }
        if (!g.is_bihomogeneous())
            throw MalformedScheme(where + ": generator is not bihomogeneous");
        if (g.is_zero()) throw MalformedScheme(where + ": zero generator");
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

SchemeFile parse_scheme_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw MalformedScheme(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedScheme("top level must be an object");
    bool points = doc.contains("points"), gens = doc.contains("generators");
    if (points == gens)
        throw MalformedScheme("expected exactly one of \"points\" or \"generators\"");
    SchemeFile file;
    if (points)
        file.scheme = parse_points(doc["points"]);
    else
        file.generators = parse_generators(doc["generators"]);
    return file;
}

SchemeFile load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open scheme file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scheme_text(buf.str());
}

}  // namespace fatpoints
