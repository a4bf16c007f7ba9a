#include "ogs/json_io.hpp"

#include "ogs/errors.hpp"

namespace ogs {

using nlohmann::json;

json id_to_json(const IdElement& a) { return json(a.entries()); }

json monomial_to_json(const Monomial& m) {
    json out = json::array();
    for (const auto& [root, mult] : m.items())
        out.push_back(json{{"r", root.r}, {"c", root.c}, {"mult", mult}});
    return out;
}

Monomial monomial_from_json(const RootRegions& rr, const json& j, Region tag) {
    if (!j.is_array()) throw validation_error("monomial JSON must be an array");
    Monomial out(tag);
    for (const json& item : j) {
        int mult = item.value("mult", 1);
        out.add(Root{item.at("r").get<int>(), item.at("c").get<int>()}, mult);
    }
    verify_region(rr, out);
    return out;
}

json sm_to_json(const StandardMonomial& sm, const IdElement& v) {
    json thetas = json::array();
    for (const IdElement& theta : sm.thetas()) thetas.push_back(theta.entries());
    return json{{"thetas", thetas}, {"degree", sm.degree(v)}};
}

json path_tuple_to_json(const PathTuple& tuple) {
    json out = json::array();
    for (const Path& path : tuple.paths) {
        json p = json::array();
        for (Root a : path) p.push_back(json{{"r", a.r}, {"c", a.c}});
        out.push_back(p);
    }
    return out;
}

PathTuple path_tuple_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("path tuple JSON must be an array of paths");
    PathTuple out;
    for (const json& p : j) {
        Path path;
        for (const json& item : p)
            path.push_back(Root{item.at("r").get<int>(), item.at("c").get<int>()});
        out.paths.push_back(std::move(path));
    }
    return out;
}

Instance instance_from_json(const json& j) {
    try {
        int d = j.at("d").get<int>();
        IdElement v = validate(d, j.at("v").get<std::vector<int>>(), true);
        IdElement w = validate(d, j.at("w").get<std::vector<int>>(), true);
        return Instance{std::move(v), std::move(w)};
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed instance JSON: ") + e.what());
    }
}

} // namespace ogs
