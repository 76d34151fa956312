#ifndef NILMAT_JSON_IO_HPP
#define NILMAT_JSON_IO_HPP

#include "nilmat/matrix.hpp"
#include "nilmat/riccati.hpp"
#include "nilmat/solver.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace nilmat {

using nlohmann::json;

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// {"rows": n, "cols": m, "entries": [["1/2", ...], ...]}
// Rationals travel as strings so the round trip is bit-exact.
inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Mat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw parse_error("matrix JSON must have rows, cols and entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw parse_error("matrix JSON: entries row count mismatch");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw parse_error("matrix JSON: entries column count mismatch");
        for (std::size_t jj = 0; jj < cols; ++jj) {
            auto q = try_parse_rational(row.at(jj).get<std::string>());
            if (!q) throw parse_error("matrix JSON: bad rational '" +
                                      row.at(jj).get<std::string>() + "'");
            m(i, jj) = *q;
        }
    }
    return m;
}

// {"n": int, "p": int, "free": {"2": "1/2", ...}}
inline json free_assignment_to_json(const FreeAssignment& a) {
    json fr = json::object();
    for (const auto& [idx, val] : a.values) fr[std::to_string(idx)] = to_string(val);
    return json{{"n", a.n}, {"p", a.p}, {"free", std::move(fr)}};
}

inline FreeAssignment free_assignment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("p") || !j.contains("free"))
        throw parse_error("free assignment JSON must have n, p and free");
    std::map<std::size_t, Rational> values;
    for (const auto& [key, val] : j.at("free").items()) {
        std::size_t idx = std::stoul(key);
        auto q = try_parse_rational(val.get<std::string>());
        if (!q) throw parse_error("free assignment JSON: bad rational for index " + key);
        values[idx] = *q;
    }
    return FreeAssignment(j.at("n").get<std::size_t>(), j.at("p").get<unsigned>(),
                          std::move(values));
}

inline json solution_report_to_json(const SolutionReport& r) {
    return json{{"x", matrix_to_json(r.x)},
                {"residual_zero", r.residual.is_zero()},
                {"nilpotency_index", r.nilpotency_index},
                {"strictly_upper", r.strictly_upper}};
}

// {"eigenvalue": "0", "chains": [[[...vector...], ...], ...]}
inline json chain_set_to_json(const ChainSet& cs) {
    json chains = json::array();
    for (const auto& chain : cs.chains) {
        json jc = json::array();
        for (const Mat& v : chain) {
            json vec = json::array();
            for (std::size_t i = 0; i < v.rows(); ++i) vec.push_back(to_string(v(i, 0)));
            jc.push_back(std::move(vec));
        }
        chains.push_back(std::move(jc));
    }
    return json{{"eigenvalue", to_string(cs.eigenvalue)}, {"chains", std::move(chains)}};
}

inline ChainSet chain_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("eigenvalue") || !j.contains("chains"))
        throw parse_error("chain set JSON must have eigenvalue and chains");
    ChainSet cs{parse_rational(j.at("eigenvalue").get<std::string>()), {}};
    for (const json& jc : j.at("chains")) {
        std::vector<Mat> chain;
        for (const json& vec : jc) {
            Mat v(vec.size(), 1);
            for (std::size_t i = 0; i < vec.size(); ++i)
                v(i, 0) = parse_rational(vec.at(i).get<std::string>());
            chain.push_back(std::move(v));
        }
        cs.chains.push_back(std::move(chain));
    }
    return cs;
}

}  // namespace nilmat

#endif
