/**
 * JSON encodings of configurations, subdivisions, rationals and catalogs.
 * Rationals are strings "p/q" or "p"; point indices are 0-based.
 */
#pragma once

#include "secfan/enumerate.hpp"

#include <json.hpp>

#include <string>

namespace secfan {

using Json = nlohmann::json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_json(const QVector& v);
QVector vector_from_json(const Json& j);

/** Decimal rendering next to the exact value, {"exact": "p/q", "decimal": "0.12345678"}. */
Json exact_and_decimal(const Rational& q);

Json cells_json(const Subdivision& s);
/** Accepts {"cells": [...]} or a bare array of cells. */
Subdivision subdivision_from_json(const Json& j);

Json configuration_json(const PointConfiguration& config);
PointConfiguration configuration_from_json(const Json& j);

Json catalog_json(const OrbitCatalog& catalog);
OrbitCatalog catalog_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace secfan
