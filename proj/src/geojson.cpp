#include "asts/geojson.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace asts {

using nlohmann::json;

AoiRadiusTable default_aoi_radii() {
    return {
        {ElementKind::ceiling_fan, 2.5}, {ElementKind::stand_fan, 1.5},
        {ElementKind::window, 2.0},      {ElementKind::door, 1.5},
        {ElementKind::ac_outlet, 2.0},   {ElementKind::wall, 1.0},
        {ElementKind::curtain_wall, 2.0}, {ElementKind::stair_landing, 1.5},
        {ElementKind::furniture, 1.0},
    };
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error("geojson: " + where + ": " + what);
}

Vec2 parse_position(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() < 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(where, "expected [x, y] position");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Ring parse_ring(const json& j, const std::string& where) {
    Ring ring;
    for (const json& pos : j) ring.push_back(parse_position(pos, where));
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) fail(where, "ring needs at least 3 distinct vertices");
    return ring;
}

json ring_to_coords(const Ring& ring) {
    json out = json::array();
    for (Vec2 p : ring) out.push_back(json::array({p.x, p.y}));
    out.push_back(json::array({ring.front().x, ring.front().y}));  // close
    return out;
}

json ring_to_coords_wgs84(const Ring& ring, LatLon anchor) {
    json out = json::array();
    auto emit = [&](Vec2 p) {
        const LatLon ll = project_to_wgs84(p, anchor);
        out.push_back(json::array({ll.lon, ll.lat}));  // GeoJSON order: lon, lat
    };
    for (Vec2 p : ring) emit(p);
    emit(ring.front());
    return out;
}

json geometry_to_json(const ElementGeometry& g) {
    if (const Vec2* p = std::get_if<Vec2>(&g)) {
        return {{"type", "Point"}, {"coordinates", json::array({p->x, p->y})}};
    }
    if (const Polyline* line = std::get_if<Polyline>(&g)) {
        json coords = json::array();
        for (Vec2 p : *line) coords.push_back(json::array({p.x, p.y}));
        return {{"type", "LineString"}, {"coordinates", coords}};
    }
    const Polygon& poly = std::get<Polygon>(g);
    json rings = json::array();
    rings.push_back(ring_to_coords(poly.outer));
    for (const Ring& h : poly.holes) rings.push_back(ring_to_coords(h));
    return {{"type", "Polygon"}, {"coordinates", rings}};
}

ElementGeometry parse_geometry(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type")) fail(where, "missing geometry type");
    const std::string type = j.at("type").get<std::string>();
    const json& coords = j.at("coordinates");
    if (type == "Point") return parse_position(coords, where);
    if (type == "LineString") {
        Polyline line;
        for (const json& pos : coords) line.push_back(parse_position(pos, where));
        if (line.size() < 2) fail(where, "LineString needs at least 2 points");
        return line;
    }
    if (type == "Polygon") {
        if (!coords.is_array() || coords.empty()) fail(where, "Polygon needs rings");
        Polygon poly;
        poly.outer = parse_ring(coords[0], where);
        for (std::size_t i = 1; i < coords.size(); ++i) {
            poly.holes.push_back(parse_ring(coords[i], where));
        }
        return poly;
    }
    fail(where, "unsupported geometry type '" + type + "'");
}

void check_id_token(const std::string& id, const std::string& where) {
    if (id.empty()) fail(where, "empty id");
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c))) fail(where, "id contains whitespace");
    }
}

}  // namespace

FloorPlan floor_plan_from_geojson(const std::string& text, const AoiRadiusTable& radii) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("parse", e.what());
    }
    if (j.value("type", "") != "FeatureCollection") fail("root", "expected FeatureCollection");
    if (!j.contains("properties")) fail("root", "missing properties");
    const json& props = j.at("properties");
    for (const char* key : {"anchor_lat", "anchor_lon", "gross_floor_area"}) {
        if (!props.contains(key) || !props.at(key).is_number()) {
            fail("properties", std::string("missing numeric field '") + key + "'");
        }
    }

    FloorPlan plan;
    plan.anchor = {props.at("anchor_lat").get<double>(), props.at("anchor_lon").get<double>()};
    plan.gross_floor_area = props.at("gross_floor_area").get<double>();

    std::set<std::string> seen_ids;
    std::size_t index = 0;
    for (const json& feature : j.value("features", json::array())) {
        const std::string where = "features[" + std::to_string(index++) + "]";
        if (feature.value("type", "") != "Feature") fail(where, "expected Feature");
        const json& fprops = feature.at("properties");
        if (!fprops.contains("element_type")) fail(where, "missing element_type");
        const std::string type_name = fprops.at("element_type").get<std::string>();
        const auto kind = element_kind_from_string(type_name);
        if (!kind) fail(where, "unknown element_type '" + type_name + "'");
        const std::string id = fprops.value("id", "");
        check_id_token(id, where);
        if (!seen_ids.insert(id).second) fail(where, "duplicate id '" + id + "'");

        ElementGeometry geom = parse_geometry(feature.at("geometry"), where);
        if (*kind == ElementKind::space) {
            const Polygon* poly = std::get_if<Polygon>(&geom);
            if (poly == nullptr) fail(where, "space must be a Polygon");
            plan.spaces.push_back(Space{id, *poly});
            continue;
        }
        SpatialElement el;
        el.id = id;
        el.kind = *kind;
        el.geometry = std::move(geom);
        if (fprops.contains("aoi_radius")) {
            el.aoi_radius = fprops.at("aoi_radius").get<double>();
        } else {
            const auto it = radii.find(*kind);
            if (it == radii.end()) fail(where, "no aoi_radius and no default for kind");
            el.aoi_radius = it->second;
        }
        if (!(el.aoi_radius > 0.0)) fail(where, "aoi_radius must be > 0");
        plan.elements.push_back(std::move(el));
    }

    plan.validate();
    return plan;
}

std::string floor_plan_to_geojson(const FloorPlan& plan) {
    json features = json::array();
    for (const Space& s : plan.spaces) {
        features.push_back({{"type", "Feature"},
                            {"properties", {{"element_type", "space"}, {"id", s.id}}},
                            {"geometry", geometry_to_json(ElementGeometry{s.boundary})}});
    }
    for (const SpatialElement& e : plan.elements) {
        features.push_back({{"type", "Feature"},
                            {"properties",
                             {{"element_type", std::string(to_string(e.kind))},
                              {"id", e.id},
                              {"aoi_radius", e.aoi_radius}}},
                            {"geometry", geometry_to_json(e.geometry)}});
    }
    const json root = {{"type", "FeatureCollection"},
                       {"properties",
                        {{"anchor_lat", plan.anchor.lat},
                         {"anchor_lon", plan.anchor.lon},
                         {"gross_floor_area", plan.gross_floor_area}}},
                       {"features", features}};
    return root.dump(2) + "\n";
}

std::string zoning_to_geojson(const Zoning& zoning, const FloorPlan& plan) {
    json features = json::array();
    for (const Zone& z : zoning.zones) {
        json polys = json::array();
        for (const Polygon& poly : z.polygons) {
            json rings = json::array();
            rings.push_back(ring_to_coords_wgs84(poly.outer, plan.anchor));
            for (const Ring& h : poly.holes) rings.push_back(ring_to_coords_wgs84(h, plan.anchor));
            polys.push_back(rings);
        }
        features.push_back(
            {{"type", "Feature"},
             {"properties",
              {{"zone_id", z.zone_id},
               {"cell_count", z.member_cell_ids.size()},
               {"member_cell_ids", z.member_cell_ids}}},
             {"geometry", {{"type", "MultiPolygon"}, {"coordinates", polys}}}});
    }
    const json root = {{"type", "FeatureCollection"},
                       {"properties",
                        {{"zoning_method", std::string(to_string(zoning.method))},
                         {"anchor_lat", plan.anchor.lat},
                         {"anchor_lon", plan.anchor.lon}}},
                       {"features", features}};
    return root.dump(2) + "\n";
}

std::string mesh_to_json(const MeshGrid& mesh) {
    // Cells stored as integer (col,row,space) triples so reload is bit-exact.
    json cells = json::array();
    for (const MeshCell& cell : mesh.cells) {
        const double fc = std::floor((cell.centroid.x - mesh.origin.x) / mesh.cell_size);
        const double fr = std::floor((cell.centroid.y - mesh.origin.y) / mesh.cell_size);
        cells.push_back(json::array({static_cast<int>(fc), static_cast<int>(fr), cell.space_index}));
    }
    const json root = {{"cell_size", mesh.cell_size},
                       {"origin", json::array({mesh.origin.x, mesh.origin.y})},
                       {"cols", mesh.cols},
                       {"rows", mesh.rows},
                       {"cells", cells}};
    return root.dump() + "\n";
}

MeshGrid mesh_from_json(const std::string& text) {
    const json j = json::parse(text);
    MeshGrid mesh;
    mesh.cell_size = j.at("cell_size").get<double>();
    mesh.origin = {j.at("origin")[0].get<double>(), j.at("origin")[1].get<double>()};
    mesh.cols = j.at("cols").get<std::uint32_t>();
    mesh.rows = j.at("rows").get<std::uint32_t>();
    mesh.grid_to_cell.assign(static_cast<std::size_t>(mesh.cols) * mesh.rows, -1);
    for (const json& c : j.at("cells")) {
        const auto col = c[0].get<std::uint32_t>();
        const auto row = c[1].get<std::uint32_t>();
        MeshCell cell;
        cell.cell_id = static_cast<std::uint32_t>(mesh.cells.size());
        cell.centroid = {mesh.origin.x + (col + 0.5) * mesh.cell_size,
                         mesh.origin.y + (row + 0.5) * mesh.cell_size};
        cell.space_index = c[2].get<std::int32_t>();
        mesh.grid_to_cell[static_cast<std::size_t>(row) * mesh.cols + col] =
            static_cast<std::int32_t>(cell.cell_id);
        mesh.cells.push_back(cell);
    }
    return mesh;
}

}  // namespace asts
