#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nzeta/curve.hpp"

namespace nzeta {

struct IngestError {
    std::string name;
    std::string message;
};

/// A validated set of curves plus per-entry diagnostics. Ingestion collects
/// errors per entry instead of failing fast.
struct Catalog {
    std::vector<Curve> curves;
    std::vector<IngestError> errors;
    std::vector<std::string> warnings;

    const Curve* find(const std::string& name) const;
};

/// Parses and validates the JSON catalog schema
/// {"curves":[{"name","q","g","point_counts"?,"p_coefficients"?}]}.
/// When both inputs are present they are cross-validated and the explicit
/// coefficients win. Throws ParseError only for malformed JSON; per-entry
/// problems land in Catalog::errors.
Catalog parse_catalog(const std::string& json_text, const ValidationOptions& opts = {});

/// parse_catalog over a file.
Catalog load_catalog(const std::string& path, const ValidationOptions& opts = {});

/// The built-in demo catalog (same content as data/demo_catalog.json).
const char* builtin_catalog_json();

}  // namespace nzeta
