#include "nzeta/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nzeta {

using nlohmann::json;

const Curve* Catalog::find(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

const char* builtin_catalog_json() {
    return R"({
  "curves": [
    {"name": "E0", "q": 2, "g": 1, "point_counts": [3]},
    {"name": "E1", "q": 2, "g": 1, "point_counts": [4]},
    {"name": "C5", "q": 2, "g": 2, "point_counts": [3, 5]},
    {"name": "G2Q3", "q": 3, "g": 2, "p_coefficients": ["1", "1", "4", "3", "9"]},
    {"name": "G3Q2", "q": 2, "g": 3, "p_coefficients": ["1", "0", "5", "0", "10", "0", "8"]}
  ]
})";
}

Catalog parse_catalog(const std::string& text, const ValidationOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
        throw ParseError("catalog: top level must be an object with a \"curves\" array");

    Catalog cat;
    std::size_t idx = 0;
    for (const auto& entry : doc["curves"]) {
        ++idx;
        std::string name = entry.value("name", "entry#" + std::to_string(idx));
        try {
            if (!entry.is_object()) throw ParseError("entry is not an object");
            if (!entry.contains("q") || !entry.contains("g"))
                throw ParseError("entry needs integer fields q and g");
            long q = entry["q"].get<long>();
            int g = entry["g"].get<int>();

            for (const auto& existing : cat.curves)
                if (existing.name == name) throw ParseError("duplicate curve name");

            std::optional<std::vector<long>> counts;
            if (entry.contains("point_counts"))
                counts = entry["point_counts"].get<std::vector<long>>();
            std::optional<std::vector<Rational>> coeffs;
            if (entry.contains("p_coefficients")) {
                std::vector<Rational> v;
                for (const auto& s : entry["p_coefficients"])
                    v.push_back(Rational::from_string(s.get<std::string>()));
                coeffs = std::move(v);
            }
            if (!counts && !coeffs)
                throw ParseError("entry needs point_counts or p_coefficients");

            Curve curve;
            if (counts) {
                curve = curve_from_point_counts(name, q, g, *counts, opts);
                if (coeffs && *coeffs != curve.p_coeffs)
                    throw ParseError("p_coefficients inconsistent with point_counts");
            }
            if (coeffs) curve = curve_from_coefficients(name, q, g, *coeffs, opts);

            if (!is_prime_power(q)) {
                if (opts.reject_non_prime_power_q)
                    throw ParseError("q = " + std::to_string(q) + " is not a prime power");
                cat.warnings.push_back("curve '" + name + "': q = " + std::to_string(q) +
                                      " is not a prime power");
            }
            cat.curves.push_back(std::move(curve));
        } catch (const Error& e) {
            cat.errors.push_back({name, e.what()});
        } catch (const json::exception& e) {
            cat.errors.push_back({name, std::string("malformed entry: ") + e.what()});
        }
    }
    return cat;
}

Catalog load_catalog(const std::string& path, const ValidationOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), opts);
}

}  // namespace nzeta
