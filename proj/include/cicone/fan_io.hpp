/**
 * Fan files: a JSON object with "rays" (list of integer triples) and
 * "max_cones" (list of 0-based ray index triples).
 */
#pragma once

#include <istream>
#include <ostream>

#include <json.hpp>

#include "toric.hpp"

namespace cicone::toric {

struct FanFileError : std::runtime_error {
    explicit FanFileError(const std::string& what) : std::runtime_error(what) {}
};

inline Fan fan_from_json(std::istream& in)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FanFileError(e.what());
    }
    if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
        throw FanFileError("fan file must be an object with 'rays' and 'max_cones'");
    Fan fan;
    for (const auto& r : j.at("rays")) {
        if (!r.is_array() || r.size() != 3)
            throw FanFileError("each ray must be a list of 3 integers");
        IntVec v(3);
        for (int k = 0; k < 3; ++k) {
            if (!r[static_cast<std::size_t>(k)].is_number_integer())
                throw FanFileError("ray entries must be integers");
            v[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)].get<long long>();
        }
        fan.rays.push_back(std::move(v));
    }
    for (const auto& c : j.at("max_cones")) {
        if (!c.is_array() || c.size() != 3)
            throw FanFileError("each maximal cone must be a list of 3 ray indices");
        std::array<int, 3> mc{};
        for (int k = 0; k < 3; ++k) {
            if (!c[static_cast<std::size_t>(k)].is_number_integer())
                throw FanFileError("cone entries must be integer ray indices");
            mc[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].get<int>();
        }
        fan.max_cones.push_back(mc);
    }
    return fan;
}

inline void fan_to_json(std::ostream& out, const Fan& fan)
{
    nlohmann::json j;
    j["rays"] = nlohmann::json::array();
    for (const IntVec& r : fan.rays) {
        nlohmann::json row = nlohmann::json::array();
        for (const Int& x : r) row.push_back(static_cast<long long>(x));
        j["rays"].push_back(std::move(row));
    }
    j["max_cones"] = nlohmann::json::array();
    for (const auto& mc : fan.max_cones) j["max_cones"].push_back({mc[0], mc[1], mc[2]});
    out << j.dump(2) << "\n";
}

}  // namespace cicone::toric
