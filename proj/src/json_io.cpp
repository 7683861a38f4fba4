#include "polyhodge/json_io.hpp"

#include "polyhodge/errors.hpp"

namespace polyhodge {

Rational rational_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
    if (value.is_string()) return rational_from_string(value.get<std::string>());
    throw Error("rational literals must be integers or strings, got: " + value.dump());
}

nlohmann::json rational_to_json(const Rational& value) {
    if (value.get_den() == 1 && value.get_num().fits_slong_p())
        return value.get_num().get_si();
    return rational_to_string(value);
}

nlohmann::json polytope_to_json(const Polytope& p) {
    nlohmann::json j;
    j["name"] = p.name();
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : p.vertices()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(rational_to_json(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

Polytope polytope_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error("polytope JSON needs a \"vertices\" array");
    std::vector<RatVec> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array()) throw Error("each vertex must be an array of coordinates");
        RatVec v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        pts.push_back(std::move(v));
    }
    std::string name = j.value("name", std::string{});
    return Polytope::from_vertices(std::move(pts), std::move(name));
}

}  // namespace polyhodge
