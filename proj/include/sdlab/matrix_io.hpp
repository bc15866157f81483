#pragma once

#include <string>

#include <json.hpp>

#include "sdlab/complex_matrix.hpp"

namespace sdlab::io {

// Shortest text that parses back to exactly the same double (%.17g).
std::string format_double(double v);

// {"n": 2, "rows": [[["1", "0"], ...], ...]} with re/im as decimal strings,
// so serialization round-trips bit-exactly and is platform independent.
nlohmann::json matrix_to_json(const ComplexMatrix& x);

// Accepts entries as [re, im] pairs of decimal strings or plain numbers.
// Throws ParseError on malformed documents, DomainError on non-finite values.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& x);

} // namespace sdlab::io
