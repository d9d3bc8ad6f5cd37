#include "asts/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/linestring.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

namespace asts {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
double distance(Vec2 a, Vec2 b) { return norm(a - b); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double ring_area(const Ring& r) {
    if (r.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        s += r[j].x * r[i].y - r[i].x * r[j].y;
    }
    return std::abs(s) * 0.5;
}

double polygon_area(const Polygon& p) {
    double a = ring_area(p.outer);
    for (const Ring& h : p.holes) a -= ring_area(h);
    return a;
}

double multipolygon_area(const MultiPolygon& mp) {
    double a = 0.0;
    for (const Polygon& p : mp) a += polygon_area(p);
    return a;
}

void BoundingBox::expand(Vec2 p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
}

void BoundingBox::merge(const BoundingBox& other) {
    expand(other.min);
    expand(other.max);
}

BoundingBox ring_bbox(const Ring& r) {
    BoundingBox bb{{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()},
                   {std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()}};
    for (Vec2 p : r) bb.expand(p);
    return bb;
}

namespace {

constexpr std::array<std::pair<ElementKind, std::string_view>, 10> kKindNames{{
    {ElementKind::space, "space"},
    {ElementKind::wall, "wall"},
    {ElementKind::curtain_wall, "curtain_wall"},
    {ElementKind::door, "door"},
    {ElementKind::window, "window"},
    {ElementKind::ceiling_fan, "ceiling_fan"},
    {ElementKind::stand_fan, "stand_fan"},
    {ElementKind::ac_outlet, "ac_outlet"},
    {ElementKind::stair_landing, "stair_landing"},
    {ElementKind::furniture, "furniture"},
}};

}  // namespace

std::string_view to_string(ElementKind k) {
    for (auto [kind, name] : kKindNames) {
        if (kind == k) return name;
    }
    return "unknown";
}

std::optional<ElementKind> element_kind_from_string(std::string_view s) {
    for (auto [kind, name] : kKindNames) {
        if (name == s) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(ZoningMethod m) {
    switch (m) {
        case ZoningMethod::spaces: return "spaces";
        case ZoningMethod::square_grid: return "square_grid";
        case ZoningMethod::build2vec: return "build2vec";
    }
    return "unknown";
}

std::optional<ZoningMethod> zoning_method_from_string(std::string_view s) {
    if (s == "spaces") return ZoningMethod::spaces;
    if (s == "square_grid" || s == "grid") return ZoningMethod::square_grid;
    if (s == "build2vec") return ZoningMethod::build2vec;
    return std::nullopt;
}

BoundingBox FloorPlan::bbox() const {
    if (spaces.empty()) throw std::invalid_argument("no spaces");
    BoundingBox bb = ring_bbox(spaces.front().boundary.outer);
    for (const Space& s : spaces) bb.merge(ring_bbox(s.boundary.outer));
    return bb;
}

namespace {

bool ring_is_simple(const Ring& r) {
    // Non-adjacent edge pairs must not intersect. O(n^2), rings are small.
    const std::size_t n = r.size();
    if (n < 3) return false;
    auto seg = [&](std::size_t i) { return std::pair<Vec2, Vec2>{r[i], r[(i + 1) % n]}; };
    auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
        double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        return (v > 1e-12) - (v < -1e-12);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            auto [a, b] = seg(i);
            auto [c, d] = seg(j);
            if (orient(a, b, c) != orient(a, b, d) && orient(c, d, a) != orient(c, d, b)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

void FloorPlan::validate() const {
    if (spaces.empty()) throw std::invalid_argument("no spaces");
    if (!(gross_floor_area > 0.0)) throw std::invalid_argument("gross_floor_area must be > 0");
    for (const Space& s : spaces) {
        if (s.boundary.outer.size() < 3) {
            throw std::invalid_argument("space '" + s.id + "' has a degenerate boundary");
        }
        if (!ring_is_simple(s.boundary.outer)) {
            throw std::invalid_argument("space '" + s.id + "' is self-intersecting");
        }
    }
    for (const SpatialElement& e : elements) {
        if (!(e.aoi_radius > 0.0)) {
            throw std::invalid_argument("element '" + e.id + "' has non-positive aoi_radius");
        }
    }
}

// ---------------------------------------------------------------------------
// Projection
// ---------------------------------------------------------------------------

namespace {

constexpr double kMetersPerDegree = 111320.0;
constexpr double kDegToRad = 0.017453292519943295;

void check_anchor(LatLon anchor) {
    if (!std::isfinite(anchor.lat) || !std::isfinite(anchor.lon) || std::abs(anchor.lat) > 85.0) {
        throw std::invalid_argument("anchor latitude out of local-tangent validity");
    }
}

}  // namespace

LatLon project_to_wgs84(Vec2 p, LatLon anchor) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument("non-finite point");
    }
    if (std::abs(p.x) >= 10000.0 || std::abs(p.y) >= 10000.0) {
        throw std::invalid_argument("point outside local-tangent validity (|x|,|y| < 10 km)");
    }
    check_anchor(anchor);
    const double lon_scale = kMetersPerDegree * std::cos(anchor.lat * kDegToRad);
    return {anchor.lat + p.y / kMetersPerDegree, anchor.lon + p.x / lon_scale};
}

Vec2 project_from_wgs84(LatLon q, LatLon anchor) {
    if (!std::isfinite(q.lat) || !std::isfinite(q.lon)) {
        throw std::invalid_argument("non-finite coordinate");
    }
    check_anchor(anchor);
    const double lon_scale = kMetersPerDegree * std::cos(anchor.lat * kDegToRad);
    return {(q.lon - anchor.lon) * lon_scale, (q.lat - anchor.lat) * kMetersPerDegree};
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

namespace {

constexpr double kBoundaryEps = 1e-9;  // meters

bool on_ring_boundary(Vec2 p, const Ring& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (point_segment_distance(p, ring[j], ring[i]) <= kBoundaryEps) return true;
    }
    return false;
}

bool ray_parity(Vec2 p, const Ring& ring) {
    const std::size_t n = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2 a = ring[j];
        const Vec2 b = ring[i];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

bool point_in_ring(Vec2 p, const Ring& ring) {
    if (ring.size() < 3) return false;
    return on_ring_boundary(p, ring) || ray_parity(p, ring);
}

bool point_in_polygon(Vec2 p, const Polygon& poly) {
    if (poly.outer.size() < 3) return false;
    if (on_ring_boundary(p, poly.outer)) return true;
    for (const Ring& h : poly.holes) {
        if (on_ring_boundary(p, h)) return true;
    }
    if (!ray_parity(p, poly.outer)) return false;
    for (const Ring& h : poly.holes) {
        if (ray_parity(p, h)) return false;
    }
    return true;
}

bool point_in_multipolygon(Vec2 p, const MultiPolygon& mp) {
    return std::any_of(mp.begin(), mp.end(),
                       [&](const Polygon& poly) { return point_in_polygon(p, poly); });
}

double distance_to_geometry(Vec2 p, const ElementGeometry& g) {
    if (const Vec2* pt = std::get_if<Vec2>(&g)) return distance(p, *pt);
    if (const Polyline* line = std::get_if<Polyline>(&g)) {
        if (line->empty()) throw std::invalid_argument("empty polyline");
        if (line->size() == 1) return distance(p, line->front());
        double best = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i + 1 < line->size(); ++i) {
            best = std::min(best, point_segment_distance(p, (*line)[i], (*line)[i + 1]));
        }
        return best;
    }
    const Polygon& poly = std::get<Polygon>(g);
    if (point_in_polygon(p, poly)) return 0.0;
    double best = std::numeric_limits<double>::max();
    auto ring_dist = [&](const Ring& r) {
        for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
            best = std::min(best, point_segment_distance(p, r[j], r[i]));
        }
    };
    ring_dist(poly.outer);
    for (const Ring& h : poly.holes) ring_dist(h);
    return best;
}

// ---------------------------------------------------------------------------
// Discretization
// ---------------------------------------------------------------------------

MeshGrid discretize(const FloorPlan& plan, double cell_size) {
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
        throw std::invalid_argument("cell_size must be > 0");
    }
    if (plan.spaces.empty()) throw std::invalid_argument("no spaces");

    const BoundingBox bb = plan.bbox();
    MeshGrid mesh;
    mesh.cell_size = cell_size;
    mesh.origin = bb.min;
    mesh.cols = static_cast<std::uint32_t>(
        std::max(1.0, std::ceil((bb.max.x - bb.min.x) / cell_size - 1e-9)));
    mesh.rows = static_cast<std::uint32_t>(
        std::max(1.0, std::ceil((bb.max.y - bb.min.y) / cell_size - 1e-9)));
    mesh.grid_to_cell.assign(static_cast<std::size_t>(mesh.cols) * mesh.rows, -1);

    for (std::uint32_t r = 0; r < mesh.rows; ++r) {
        for (std::uint32_t c = 0; c < mesh.cols; ++c) {
            const Vec2 centroid{mesh.origin.x + (c + 0.5) * cell_size,
                                mesh.origin.y + (r + 0.5) * cell_size};
            std::int32_t space_index = -1;
            for (std::size_t s = 0; s < plan.spaces.size(); ++s) {
                if (point_in_polygon(centroid, plan.spaces[s].boundary)) {
                    space_index = static_cast<std::int32_t>(s);
                    break;
                }
            }
            if (space_index < 0) continue;
            MeshCell cell;
            cell.cell_id = static_cast<std::uint32_t>(mesh.cells.size());
            cell.centroid = centroid;
            cell.space_index = space_index;
            mesh.grid_to_cell[static_cast<std::size_t>(r) * mesh.cols + c] =
                static_cast<std::int32_t>(cell.cell_id);
            mesh.cells.push_back(cell);
        }
    }
    return mesh;
}

Polygon MeshGrid::cell_polygon(std::uint32_t cell_index) const {
    const Vec2 c = cells.at(cell_index).centroid;
    const double h = cell_size * 0.5;
    return Polygon{{{c.x - h, c.y - h}, {c.x + h, c.y - h}, {c.x + h, c.y + h}, {c.x - h, c.y + h}},
                   {}};
}

std::optional<std::uint32_t> MeshGrid::cell_at(Vec2 p) const {
    const double fc = std::floor((p.x - origin.x) / cell_size);
    const double fr = std::floor((p.y - origin.y) / cell_size);
    if (fc < 0 || fr < 0 || fc >= cols || fr >= rows) return std::nullopt;
    const auto c = static_cast<std::size_t>(fc);
    const auto r = static_cast<std::size_t>(fr);
    const std::int32_t idx = grid_to_cell[r * cols + c];
    if (idx < 0) return std::nullopt;
    return static_cast<std::uint32_t>(idx);
}

std::size_t Zoning::total_cells() const {
    std::size_t n = 0;
    for (const Zone& z : zones) n += z.member_cell_ids.size();
    return n;
}

std::vector<int> Zoning::cell_to_zone(std::size_t cell_count) const {
    std::vector<int> lookup(cell_count, -1);
    for (const Zone& z : zones) {
        for (std::uint32_t cell : z.member_cell_ids) {
            if (cell >= cell_count) throw std::out_of_range("zone references unknown cell");
            lookup[cell] = z.zone_id;
        }
    }
    return lookup;
}

// ---------------------------------------------------------------------------
// AoI buffering (Boost.Geometry behind the contract)
// ---------------------------------------------------------------------------

namespace {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;
using BLinestring = bg::model::linestring<BPoint>;

constexpr int kArcSegments = 32;

MultiPolygon from_boost(const BMultiPolygon& mp) {
    MultiPolygon out;
    out.reserve(mp.size());
    for (const BPolygon& bp : mp) {
        Polygon p;
        auto copy_ring = [](const auto& src, Ring& dst) {
            dst.reserve(src.size());
            for (const BPoint& q : src) dst.push_back({bg::get<0>(q), bg::get<1>(q)});
            // Boost rings are closed; our rings are open.
            if (dst.size() > 1 && dst.front() == dst.back()) dst.pop_back();
        };
        copy_ring(bp.outer(), p.outer);
        p.holes.resize(bp.inners().size());
        for (std::size_t i = 0; i < bp.inners().size(); ++i) copy_ring(bp.inners()[i], p.holes[i]);
        out.push_back(std::move(p));
    }
    return out;
}

template <typename Geometry>
MultiPolygon boost_buffer(const Geometry& g, double radius) {
    BMultiPolygon result;
    bg::buffer(g, result, bg::strategy::buffer::distance_symmetric<double>(radius),
               bg::strategy::buffer::side_straight(), bg::strategy::buffer::join_round(kArcSegments),
               bg::strategy::buffer::end_round(kArcSegments),
               bg::strategy::buffer::point_circle(kArcSegments));
    return from_boost(result);
}

}  // namespace

MultiPolygon buffer_geometry(const ElementGeometry& geometry, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("aoi_radius must be > 0");
    }
    if (const Vec2* pt = std::get_if<Vec2>(&geometry)) {
        return boost_buffer(BPoint(pt->x, pt->y), radius);
    }
    if (const Polyline* line = std::get_if<Polyline>(&geometry)) {
        if (line->empty()) throw std::invalid_argument("empty polyline");
        // Degenerate (zero-length) polylines buffer as a point.
        const bool degenerate = std::all_of(line->begin(), line->end(),
                                            [&](Vec2 p) { return p == line->front(); });
        if (degenerate) return boost_buffer(BPoint(line->front().x, line->front().y), radius);
        BLinestring ls;
        for (Vec2 p : *line) ls.emplace_back(p.x, p.y);
        return boost_buffer(ls, radius);
    }
    const Polygon& poly = std::get<Polygon>(geometry);
    if (poly.outer.size() < 3) throw std::invalid_argument("degenerate polygon");
    BPolygon bp;
    for (Vec2 p : poly.outer) bp.outer().emplace_back(p.x, p.y);
    for (const Ring& h : poly.holes) {
        bp.inners().emplace_back();
        for (Vec2 p : h) bp.inners().back().emplace_back(p.x, p.y);
    }
    bg::correct(bp);
    return boost_buffer(bp, radius);
}

MultiPolygon buffer_aoi(const SpatialElement& element) {
    return buffer_geometry(element.geometry, element.aoi_radius);
}

// ---------------------------------------------------------------------------
// Dissolution: merge labeled grid cells into rectilinear multipolygons
// ---------------------------------------------------------------------------

namespace {

// Directions on the vertex grid: 0=+x, 1=+y, 2=-x, 3=-y.
constexpr std::array<std::pair<int, int>, 4> kDirStep{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

struct OutEdge {
    std::uint8_t dir;
    bool used = false;
};

using EdgeMap = std::map<std::uint64_t, std::vector<OutEdge>>;  // vertex key -> outgoing

std::uint64_t vertex_key(std::uint32_t c, std::uint32_t r, std::uint32_t cols) {
    return static_cast<std::uint64_t>(r) * (cols + 1) + c;
}

// Preference for the next edge: sharpest left turn first. Interior stays on
// the left, which also splits corner-touching cells into separate rings.
int leftness(std::uint8_t incoming, std::uint8_t outgoing) {
    const int rel = (outgoing - incoming + 4) & 3;
    switch (rel) {
        case 1: return 3;  // left
        case 0: return 2;  // straight
        case 3: return 1;  // right
        default: return 0; // back
    }
}

void drop_collinear(Ring& ring) {
    if (ring.size() < 4) return;
    Ring out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 prev = ring[(i + n - 1) % n];
        const Vec2 cur = ring[i];
        const Vec2 next = ring[(i + 1) % n];
        const double cross =
            (cur.x - prev.x) * (next.y - cur.y) - (cur.y - prev.y) * (next.x - cur.x);
        if (std::abs(cross) > 1e-12) out.push_back(cur);
    }
    if (out.size() >= 3) ring = std::move(out);
}

double signed_ring_area(const Ring& r) {
    double s = 0.0;
    for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        s += r[j].x * r[i].y - r[i].x * r[j].y;
    }
    return s * 0.5;
}

}  // namespace

Zoning dissolve_cells(const MeshGrid& mesh, const std::vector<int>& labels, ZoningMethod method) {
    if (labels.size() != mesh.cells.size()) {
        throw std::invalid_argument("label count does not match cell count");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) {
            throw std::invalid_argument("cell " + std::to_string(i) + " has no zone label");
        }
    }

    // Compact distinct labels to 0..K-1 in ascending order.
    std::set<int> distinct(labels.begin(), labels.end());
    std::map<int, int> zone_of_label;
    for (int lab : distinct) {
        const int id = static_cast<int>(zone_of_label.size());
        zone_of_label.emplace(lab, id);
    }

    Zoning zoning;
    zoning.method = method;
    zoning.zones.resize(zone_of_label.size());
    for (auto [lab, id] : zone_of_label) zoning.zones[id].zone_id = id;

    // Cell (col,row) per ordinal, recovered from the row-major grid table.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_cr(mesh.cells.size());
    for (std::uint32_t r = 0; r < mesh.rows; ++r) {
        for (std::uint32_t c = 0; c < mesh.cols; ++c) {
            const std::int32_t idx = mesh.grid_to_cell[static_cast<std::size_t>(r) * mesh.cols + c];
            if (idx >= 0) cell_cr[static_cast<std::size_t>(idx)] = {c, r};
        }
    }

    std::vector<std::vector<std::uint32_t>> members(zone_of_label.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        members[zone_of_label.at(labels[i])].push_back(static_cast<std::uint32_t>(i));
    }

    auto grid_vertex_to_meters = [&](std::uint64_t key) {
        const std::uint32_t c = static_cast<std::uint32_t>(key % (mesh.cols + 1));
        const std::uint32_t r = static_cast<std::uint32_t>(key / (mesh.cols + 1));
        return Vec2{mesh.origin.x + c * mesh.cell_size, mesh.origin.y + r * mesh.cell_size};
    };

    for (std::size_t z = 0; z < members.size(); ++z) {
        Zone& zone = zoning.zones[z];
        zone.member_cell_ids = members[z];

        std::set<std::uint64_t> member_cells;  // keyed col + row*cols
        for (std::uint32_t cell : members[z]) {
            const auto [c, r] = cell_cr[cell];
            member_cells.insert(static_cast<std::uint64_t>(r) * mesh.cols + c);
        }
        auto is_member = [&](std::int64_t c, std::int64_t r) {
            if (c < 0 || r < 0 || c >= mesh.cols || r >= mesh.rows) return false;
            return member_cells.count(static_cast<std::uint64_t>(r) * mesh.cols + c) > 0;
        };

        // Boundary edges, directed with the zone interior on the left.
        EdgeMap edges;
        for (std::uint32_t cell : members[z]) {
            const auto [c, r] = cell_cr[cell];
            if (!is_member(c, static_cast<std::int64_t>(r) - 1)) {
                edges[vertex_key(c, r, mesh.cols)].push_back({0});  // bottom, +x
            }
            if (!is_member(static_cast<std::int64_t>(c) + 1, r)) {
                edges[vertex_key(c + 1, r, mesh.cols)].push_back({1});  // right, +y
            }
            if (!is_member(c, static_cast<std::int64_t>(r) + 1)) {
                edges[vertex_key(c + 1, r + 1, mesh.cols)].push_back({2});  // top, -x
            }
            if (!is_member(static_cast<std::int64_t>(c) - 1, r)) {
                edges[vertex_key(c, r + 1, mesh.cols)].push_back({3});  // left, -y
            }
        }
        for (auto& [key, outs] : edges) {
            std::sort(outs.begin(), outs.end(),
                      [](const OutEdge& a, const OutEdge& b) { return a.dir < b.dir; });
        }

        std::vector<Ring> outers;
        std::vector<std::pair<Ring, Vec2>> holes;  // ring + a point inside the hole region

        auto advance = [&](std::uint64_t key, std::uint8_t dir) {
            const auto c = static_cast<std::int64_t>(key % (mesh.cols + 1)) + kDirStep[dir].first;
            const auto r = static_cast<std::int64_t>(key / (mesh.cols + 1)) + kDirStep[dir].second;
            return vertex_key(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r),
                              mesh.cols);
        };

        for (auto& [start_key, start_outs] : edges) {
            for (OutEdge& start_edge : start_outs) {
                if (start_edge.used) continue;

                Ring ring_keys_as_points;
                start_edge.used = true;
                std::uint64_t cur = advance(start_key, start_edge.dir);
                std::uint8_t incoming = start_edge.dir;
                ring_keys_as_points.push_back(grid_vertex_to_meters(start_key));

                while (true) {
                    auto& outs = edges.at(cur);
                    OutEdge* best = nullptr;
                    for (OutEdge& e : outs) {
                        if (best == nullptr || leftness(incoming, e.dir) > leftness(incoming, best->dir)) {
                            best = &e;
                        }
                    }
                    if (best == nullptr) throw std::logic_error("dissolve: open boundary");
                    if (best->used) {
                        if (cur == start_key && best->dir == start_edge.dir) break;  // ring closed
                        throw std::logic_error("dissolve: boundary walk revisited a used edge");
                    }
                    best->used = true;
                    ring_keys_as_points.push_back(grid_vertex_to_meters(cur));
                    incoming = best->dir;
                    cur = advance(cur, best->dir);
                }

                const double area = signed_ring_area(ring_keys_as_points);
                if (area > 0.0) {
                    drop_collinear(ring_keys_as_points);
                    outers.push_back(std::move(ring_keys_as_points));
                } else {
                    // Hole (CW). Representative point: center of the non-member
                    // square to the right of the first directed edge.
                    const Vec2 a = grid_vertex_to_meters(start_key);
                    const Vec2 b = grid_vertex_to_meters(advance(start_key, start_edge.dir));
                    const Vec2 mid = 0.5 * (a + b);
                    const Vec2 dirv = b - a;
                    const Vec2 right{dirv.y, -dirv.x};
                    const Vec2 rep = mid + (0.5 / norm(right)) * mesh.cell_size * right;
                    drop_collinear(ring_keys_as_points);
                    holes.emplace_back(std::move(ring_keys_as_points), rep);
                }
            }
        }

        for (Ring& outer : outers) zone.polygons.push_back(Polygon{std::move(outer), {}});
        for (auto& [hole, rep] : holes) {
            Polygon* owner = nullptr;
            double owner_area = std::numeric_limits<double>::max();
            for (Polygon& poly : zone.polygons) {
                if (ray_parity(rep, poly.outer)) {
                    const double a = ring_area(poly.outer);
                    if (a < owner_area) {
                        owner = &poly;
                        owner_area = a;
                    }
                }
            }
            if (owner == nullptr) throw std::logic_error("dissolve: hole without enclosing ring");
            owner->holes.push_back(std::move(hole));
        }
    }
    return zoning;
}

}  // namespace asts
