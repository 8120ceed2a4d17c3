#pragma once

#include <string>

#include "hyptom/constructions.hpp"

#include "json.hpp"

namespace hyptom {

using json = nlohmann::json;

json to_json(const ModelPoint& mp);
ModelPoint modelpoint_from_json(const json& j);

json to_json(const Geodesic& g);
Geodesic geodesic_from_json(const json& j);

json to_json(const Body& K);
Body body_from_json(const json& j);

std::string to_csv(const MeasurementTable& T);
MeasurementTable table_from_csv(const std::string& text);
json to_json(const MeasurementTable& T);

std::string to_csv(const std::vector<ProjectionDatum>& data);
// Rebuilds each L as the pencil line of P at the row's theta.
std::vector<ProjectionDatum> data_from_csv(const std::string& text, const Pencil& P);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace hyptom
