#pragma once

// JSON and CSV formats for elements, matrices and verification reports.
//
//   element: {"basis": "M", "terms": [{"index": "2,1", "coeff": "1/2"}, ...]}
//   matrix:  {"n": 3, "entries": [["1","2","0"], ...]}   (integers may be bare)
//   report:  {"items": [{"id", "expected", "got", "pass"}], "all_pass": bool}

#include "qimm/combinatorics.hpp"
#include "qimm/engine.hpp"
#include "qimm/qsym.hpp"
#include "qimm/verification.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qimm {

using json = nlohmann::json;

/// Malformed file contents (as opposed to a file that could not be read).
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The file could not be opened or read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json to_json(const QSymElement& q) {
    json terms = json::array();
    for (const auto& [alpha, c] : ordered_terms(q)) terms.push_back({{"index", to_string(alpha)}, {"coeff", to_string(c)}});
    return {{"basis", to_string(q.basis())}, {"terms", std::move(terms)}};
}

inline QSymElement qsym_from_json(const json& j) {
    try {
        QSymElement q(parse_basis(j.at("basis").get<std::string>()));
        for (const auto& t : j.at("terms")) q.add_term(parse_composition(t.at("index").get<std::string>()),
                                                      parse_rational(t.at("coeff").get<std::string>()));
        return q;
    } catch (const json::exception& e) {
        throw FormatError(std::string("element JSON: ") + e.what());
    }
}

inline json to_json(const SquareMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_string(a(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", a.size()}, {"entries", std::move(rows)}};
}

namespace detail {

inline Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
    throw FormatError("matrix entry must be an integer or a rational string, got " + v.dump());
}

}  // namespace detail

inline SquareMatrix matrix_from_json(const json& j) {
    try {
        const auto& rows = j.at("entries");
        if (!rows.is_array() || rows.empty()) throw FormatError("matrix JSON: 'entries' must be a nonempty array");
        std::vector<std::vector<Rational>> values;
        for (const auto& row : rows) {
            if (!row.is_array()) throw FormatError("matrix JSON: each row must be an array");
            auto& out = values.emplace_back();
            for (const auto& v : row) out.push_back(detail::rational_from_json(v));
        }
        if (j.contains("n") && j.at("n").get<std::size_t>() != values.size())
            throw FormatError("matrix JSON: 'n' does not match the number of rows");
        return SquareMatrix(values);
    } catch (const json::exception& e) {
        throw FormatError(std::string("matrix JSON: ") + e.what());
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("matrix JSON: ") + e.what());
    }
}

/// Plain numeric grid; entries separated by commas and/or whitespace.
inline SquareMatrix matrix_from_csv(std::istream& in) {
    std::vector<std::vector<Rational>> values;
    std::string line;
    try {
        while (std::getline(in, line)) {
            for (char& c : line)
                if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
            std::istringstream ls(line);
            std::vector<Rational> row;
            std::string tok;
            while (ls >> tok) row.push_back(parse_rational(tok));
            if (!row.empty()) values.push_back(std::move(row));
        }
        if (values.empty()) throw FormatError("matrix CSV: no rows");
        return SquareMatrix(values);
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("matrix CSV: ") + e.what());
    }
}

/// Reads a matrix from a .json file, or a CSV grid otherwise.
inline SquareMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file '" + path + "'");
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw FormatError("matrix JSON: " + std::string(e.what()));
        }
        return matrix_from_json(j);
    }
    return matrix_from_csv(in);
}

inline json to_json(const Report& report) {
    json items = json::array();
    for (const auto& i : report.items)
        items.push_back({{"id", i.id}, {"expected", i.expected}, {"got", i.got}, {"pass", i.pass}});
    return {{"items", std::move(items)}, {"all_pass", report.all_pass()}};
}

}  // namespace qimm
