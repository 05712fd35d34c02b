/**
 * @file report.hpp
 * @brief JSON encoding of exact values and the versioned report envelope
 *        shared by the command-line tool and its self-test.
 *
 * Envelope:
 * @code
 * {"schema_version": 1, "library_version": "1.0.0", "command": "...",
 *  "config": {...}, "result": {...}}
 * @endcode
 * Scalars are written in their canonical "(P)/(Q)" string form; elements of
 * the extension by i and s = sqrt(t1 t2) as objects with keys "1", "i", "s",
 * "is"; series as arrays of coefficients, lowest order first.
 */
#pragma once

#include "ext_scalar.hpp"
#include "matrix.hpp"
#include "partitions.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "version.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hilbgw {

using Json = nlohmann::json;

inline Json to_json(const Scalar& x) { return x.str(); }
inline Json to_json(const Rational& x) { return x.str(); }
inline Json to_json(const ExtScalar& x) {
    return Json{{"1", x.coord(0).str()}, {"i", x.coord(1).str()}, {"s", x.coord(2).str()}, {"is", x.coord(3).str()}};
}
inline Json to_json(const Partition& p) { return p.parts(); }

template <class F>
Json to_json(const Series<F>& s) {
    Json a = Json::array();
    for (int k = 0; k <= s.order(); ++k) a.push_back(to_json(s[k]));
    return a;
}

template <class T>
Json to_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
Json to_json(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json partitions_json(const std::vector<Partition>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

/** @brief Wrap a result in the versioned envelope. */
inline Json make_report(const std::string& command, const Json& config, const Json& result) {
    return Json{{"schema_version", kSchemaVersion},
                {"library_version", kLibraryVersion},
                {"command", command},
                {"config", config},
                {"result", result}};
}

/** @brief Whether a JSON string is a well-formed Scalar. */
inline bool is_scalar_string(const Json& j) {
    if (!j.is_string()) return false;
    try {
        (void)Scalar::parse(j.get<std::string>());
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

namespace report_detail {

inline void check_scalar_array(const Json& a, const std::string& where, std::vector<std::string>& errors) {
    if (!a.is_array()) {
        errors.push_back(where + ": expected an array");
        return;
    }
    for (const auto& x : a)
        if (!is_scalar_string(x)) errors.push_back(where + ": malformed scalar");
}

}  // namespace report_detail

/**
 * @brief Validate a report against the envelope schema and the per-command
 *        result layout; returns the list of violations (empty when valid).
 */
inline std::vector<std::string> validate_report(const Json& doc) {
    using report_detail::check_scalar_array;
    std::vector<std::string> errors;
    if (!doc.is_object()) return {"report is not an object"};
    for (const char* key : {"schema_version", "library_version", "command", "config", "result"})
        if (!doc.contains(key)) errors.push_back(std::string("missing field ") + key);
    if (!errors.empty()) return errors;
    if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kSchemaVersion)
        errors.push_back("schema_version mismatch");
    if (!doc["library_version"].is_string()) errors.push_back("library_version must be a string");
    if (!doc["config"].is_object()) errors.push_back("config must be an object");
    const std::string cmd = doc["command"].is_string() ? doc["command"].get<std::string>() : "";
    const Json& r = doc["result"];
    if (!r.is_object()) {
        errors.push_back("result must be an object");
        return errors;
    }
    auto need = [&](const char* key) {
        if (!r.contains(key)) errors.push_back(cmd + ": missing result." + key);
        return r.contains(key);
    };
    if (cmd == "invariant") {
        if (need("coefficients")) check_scalar_array(r["coefficients"], "coefficients", errors);
    } else if (cmd == "degree0") {
        if (need("oracle") && !is_scalar_string(r["oracle"])) errors.push_back("degree0: malformed oracle");
        if (need("reconstruction") && !is_scalar_string(r["reconstruction"])) errors.push_back("degree0: malformed reconstruction");
    } else if (cmd == "md-matrix" || cmd == "rmatrix" || cmd == "eigen" || cmd == "fixed-points") {
        need("basis");
    } else if (cmd == "wk-table") {
        if (need("entries") && r["entries"].is_array())
            for (const auto& e : r["entries"])
                if (!e.contains("g") || !e.contains("exponents") || !e.contains("value")) errors.push_back("wk-table: malformed entry");
    } else if (cmd == "crepant-compare") {
        need("pole_at_minus_one");
        need("rational_form");
    } else if (cmd == "selftest") {
        need("criteria");
    } else {
        errors.push_back("unknown command '" + cmd + "'");
    }
    return errors;
}

}  // namespace hilbgw
