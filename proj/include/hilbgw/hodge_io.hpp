/**
 * @file hodge_io.hpp
 * @brief JSON form of the Hodge integral table:
 *        {"entries": [{"g": 2, "lambda_exponents": [3, 0], "value": "1/2880"}, ...]}.
 */
#pragma once

#include "hodge.hpp"
#include "wk_cache.hpp"

#include <json.hpp>

namespace hilbgw {

inline nlohmann::json hodge_table_to_json(const HodgeTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [g, row] : t.values)
        for (const auto& [exps, value] : row)
            entries.push_back({{"g", g}, {"lambda_exponents", exps}, {"value", fraction_string(value)}});
    return {{"entries", entries}};
}

inline HodgeTable hodge_table_from_json(const nlohmann::json& doc) {
    HodgeTable t;
    for (const auto& e : doc.at("entries"))
        t.values[e.at("g").get<int>()][e.at("lambda_exponents").get<std::vector<int>>()] = Rational::parse(e.at("value").get<std::string>());
    return t;
}

}  // namespace hilbgw
