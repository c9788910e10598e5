#ifndef HULLCERT_JSON_IO_HPP
#define HULLCERT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hullcert/classes.hpp"
#include "hullcert/hull.hpp"
#include "hullcert/snr.hpp"

namespace hullcert {

/// Malformed or out-of-schema input files.
class ParseError : public Error {
public:
    using Error::Error;
};

// Matrix schema: {"rows": m, "cols": n, "data": [[row...], ...]}; rejected if
// ragged, non-finite, or inconsistent with rows/cols.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

// Hull schema: {"A": <matrix>, "B": <matrix>}, or the center-radius form
// {"center": <matrix>, "radius": <matrix>} converted as A = c - r, B = c + r
// (radius must be entrywise nonnegative).
IntervalHull hull_from_json(const nlohmann::json& j);

Matrix load_matrix(const std::string& path);
IntervalHull load_hull(const std::string& path);

// Report serialization (all indices 1-based).
nlohmann::json to_json(const ClassVerdict& v);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SnrReport& r);
nlohmann::json to_json(const ValidationReport& r);

} // namespace hullcert

#endif
