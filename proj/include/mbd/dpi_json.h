/// @file dpi_json.h
/// JSON file format for DPIs.
///
///     {
///       "variables":  ["A", "B"],
///       "components": [{"name": "ax1", "cnf": [["-A", "-B"]]}, ...],
///       "background": [["A", "B"]],          // clauses
///       "positive":   [],                    // clauses
///       "negative":   [[["-A"]]],            // sentences (clause lists)
///       "explicit_conflicts": [["ax1", "ax2"]],
///       "probabilities": {"ax1": 0.1, ...}
///     }
///
/// Literals are variable names, negated by a leading '-'. Either components
/// carry CNF sentences or explicit_conflicts is given, never both.
#ifndef MBD_DPI_JSON_H_
#define MBD_DPI_JSON_H_

#include <string>

#include "mbd/dpi.h"

namespace mbd {

/// Throws ParseError (with line and column for syntax errors, or the
/// offending field for schema errors) and DomainError for semantic errors.
Dpi ParseDpi(const std::string& text);
Dpi LoadDpi(const std::string& path);

/// Canonical serialization: keys sorted, two-space indent, trailing newline.
/// ParseDpi(SerializeDpi(d)) == d, and re-serializing is byte-stable.
std::string SerializeDpi(const Dpi& dpi);
void SaveDpi(const Dpi& dpi, const std::string& path);

}  // namespace mbd

#endif  // MBD_DPI_JSON_H_
