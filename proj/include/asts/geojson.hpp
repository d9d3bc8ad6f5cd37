#pragma once

#include <map>
#include <string>

#include "asts/geometry.hpp"

namespace asts {

/// Default AoI radius per element kind, in meters. Values come from the run
/// configuration; this table is only consulted when a feature does not carry
/// its own aoi_radius property.
using AoiRadiusTable = std::map<ElementKind, double>;

AoiRadiusTable default_aoi_radii();

/// Parse a floor-plan FeatureCollection. Coordinates are metric meters; the
/// collection-level properties carry {anchor_lat, anchor_lon,
/// gross_floor_area}. Feature properties: {element_type, id, aoi_radius?}.
FloorPlan floor_plan_from_geojson(const std::string& text, const AoiRadiusTable& radii);

/// Canonical re-emission of a floor plan (meters, deterministic field order).
std::string floor_plan_to_geojson(const FloorPlan& plan);

/// Zoning export. Coordinates are projected to WGS84 about the plan anchor;
/// features carry {zone_id, cell_count, member_cell_ids}.
std::string zoning_to_geojson(const Zoning& zoning, const FloorPlan& plan);

/// Mesh export/import (library artifact format, meters).
std::string mesh_to_json(const MeshGrid& mesh);
MeshGrid mesh_from_json(const std::string& text);

}  // namespace asts
