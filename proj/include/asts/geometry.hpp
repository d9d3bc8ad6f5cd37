#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace asts {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

double dot(Vec2 a, Vec2 b);
double norm(Vec2 a);
double distance(Vec2 a, Vec2 b);
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Ring: open vertex list (last vertex implicitly connects to the first).
using Ring = std::vector<Vec2>;

/// Simple polygon with optional holes. First-class closed set: boundary
/// points are treated as inside everywhere in this library.
struct Polygon {
    Ring outer;
    std::vector<Ring> holes;
};

using MultiPolygon = std::vector<Polygon>;
using Polyline = std::vector<Vec2>;

/// Shoelace area (holes subtracted). Ring orientation is normalized away.
double ring_area(const Ring& r);
double polygon_area(const Polygon& p);
double multipolygon_area(const MultiPolygon& mp);

struct BoundingBox {
    Vec2 min{0, 0};
    Vec2 max{0, 0};
    void expand(Vec2 p);
    void merge(const BoundingBox& other);
};

BoundingBox ring_bbox(const Ring& r);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

enum class ElementKind {
    space,
    wall,
    curtain_wall,
    door,
    window,
    ceiling_fan,
    stand_fan,
    ac_outlet,
    stair_landing,
    furniture,
};

std::string_view to_string(ElementKind k);
std::optional<ElementKind> element_kind_from_string(std::string_view s);

using ElementGeometry = std::variant<Vec2, Polyline, Polygon>;

struct SpatialElement {
    std::string id;
    ElementKind kind = ElementKind::wall;
    ElementGeometry geometry;
    double aoi_radius = 0.0;  // meters; resolved from the radii table at ingest
};

struct Space {
    std::string id;
    Polygon boundary;
};

struct LatLon {
    double lat = 0.0;
    double lon = 0.0;
};

/// Geometric ground truth for one floor. Coordinates are metric meters;
/// `anchor` maps the metric origin onto WGS84.
struct FloorPlan {
    std::vector<Space> spaces;
    std::vector<SpatialElement> elements;
    LatLon anchor;
    double gross_floor_area = 0.0;  // m^2

    BoundingBox bbox() const;  // over space boundaries
    void validate() const;     // throws std::invalid_argument on violation
};

struct MeshCell {
    std::uint32_t cell_id = 0;      // ordinal, row-major by centroid
    Vec2 centroid;
    std::int32_t space_index = -1;  // containing space in FloorPlan::spaces
};

/// Uniform axis-aligned square grid clipped to the floor plan: exactly the
/// cells whose centroid lies inside some space polygon.
struct MeshGrid {
    double cell_size = 0.5;
    Vec2 origin;  // minimum corner of the floor-plan bounding box
    std::uint32_t cols = 0;
    std::uint32_t rows = 0;
    std::vector<MeshCell> cells;
    std::vector<std::int32_t> grid_to_cell;  // rows*cols slots, -1 = no cell

    Polygon cell_polygon(std::uint32_t cell_index) const;
    /// Cell containing the point, by grid arithmetic. nullopt when the point
    /// falls on no mesh cell.
    std::optional<std::uint32_t> cell_at(Vec2 p) const;
    double total_area() const { return static_cast<double>(cells.size()) * cell_size * cell_size; }
};

enum class ZoningMethod { spaces, square_grid, build2vec };

std::string_view to_string(ZoningMethod m);
std::optional<ZoningMethod> zoning_method_from_string(std::string_view s);

struct Zone {
    int zone_id = 0;
    MultiPolygon polygons;
    std::vector<std::uint32_t> member_cell_ids;  // ascending
};

/// A zoning partitions the mesh cells: every cell belongs to exactly one zone.
struct Zoning {
    ZoningMethod method = ZoningMethod::spaces;
    std::vector<Zone> zones;

    std::size_t total_cells() const;
    /// cell ordinal -> zone_id lookup table (size = mesh cell count).
    std::vector<int> cell_to_zone(std::size_t cell_count) const;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Local equirectangular projection about the anchor. Valid for |x|,|y| under
/// ~10 km; round trip error stays below 1e-6 m at building scale.
LatLon project_to_wgs84(Vec2 p, LatLon anchor);
Vec2 project_from_wgs84(LatLon q, LatLon anchor);

/// Cut the plan into cell_size squares from the bbox minimum corner and keep
/// the cells whose centroids fall inside a space. Deterministic row-major
/// ordering.
MeshGrid discretize(const FloorPlan& plan, double cell_size = 0.5);

/// Minkowski sum of the element geometry with a disc of radius aoi_radius
/// (arcs approximated by 32-segment circles). Zero-length geometry degrades
/// to a point buffer.
MultiPolygon buffer_aoi(const SpatialElement& element);
MultiPolygon buffer_geometry(const ElementGeometry& geometry, double radius);

/// Ray-casting containment, boundary-inclusive (closed polygon).
bool point_in_ring(Vec2 p, const Ring& ring);
bool point_in_polygon(Vec2 p, const Polygon& poly);
bool point_in_multipolygon(Vec2 p, const MultiPolygon& mp);

/// Distance from a point to an element geometry. Points strictly inside a
/// polygon are at distance zero (the polygon is a filled region).
double distance_to_geometry(Vec2 p, const ElementGeometry& g);

/// Merge cells with equal labels into geofenced multipolygons. `labels` maps
/// cell ordinal -> zone label (>= 0); zones are emitted compacted to
/// zone_id 0..K-1 in ascending label order. Total area is conserved.
Zoning dissolve_cells(const MeshGrid& mesh, const std::vector<int>& labels, ZoningMethod method);

}  // namespace asts
