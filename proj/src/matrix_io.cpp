#include "sdlab/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sdlab/errors.hpp"

namespace sdlab::io {

namespace {

double entry_to_double(const nlohmann::json& v, const char* what) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const char* begin = s.c_str();
        char* end = nullptr;
        const double parsed = std::strtod(begin, &end);
        if (end == begin || *end != '\0') {
            throw ParseError("entry " + std::string(what) + " is not a decimal number: \"" + s + "\"", 0);
        }
        return parsed;
    }
    if (v.is_number()) return v.get<double>();
    throw ParseError("entry " + std::string(what) + " must be a decimal string or number", 0);
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json matrix_to_json(const ComplexMatrix& x) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < x.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < x.n(); ++j) {
            row.push_back({format_double(x(i, j).real()), format_double(x(i, j).imag())});
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", x.n()}, {"rows", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw ParseError("matrix document needs \"n\" and \"rows\"", 0);
    }
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
    const int n = j["n"].get<int>();
    if (n <= 0) throw ParseError("\"n\" must be positive", 0);
    const auto& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw ParseError("\"rows\" must be an array of " + std::to_string(n) + " rows", 0);
    }
    ComplexMatrix x(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(n) +
                                 " entries",
                             0);
        }
        for (int k = 0; k < n; ++k) {
            const auto& e = row[k];
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(k) +
                                     ") must be a [re, im] pair",
                                 0);
            }
            x(i, k) = cplx(entry_to_double(e[0], "re"), entry_to_double(e[1], "im"));
        }
    }
    x.validate("matrix document");
    return x;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& x) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing", 0);
    out << matrix_to_json(x).dump(2) << "\n";
}

} // namespace sdlab::io
