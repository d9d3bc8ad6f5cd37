#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "asts/geometry.hpp"

namespace asts {

enum class NodeKind { cell, element };
enum class EdgeKind { proximity, adjacency };

struct GraphNode {
    std::string id;  // "cell/<n>" or "elem/<element id>"
    NodeKind kind = NodeKind::cell;
    std::uint32_t ref = 0;  // cell ordinal or element index
    ElementKind element_kind = ElementKind::space;  // element nodes only
};

struct GraphEdge {
    std::uint32_t source = 0;  // node indices, source < target
    std::uint32_t target = 0;
    EdgeKind kind = EdgeKind::proximity;
};

/// Heterogeneous proximity graph: mesh cells plus spatial elements.
/// Undirected, no self-loops, no duplicate edges. Cell nodes come first (mesh
/// order), element nodes follow in input order.
struct SpatialGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::uint32_t>> neighbors;  // sorted ascending
    std::uint32_t cell_count = 0;

    std::uint32_t element_node_index(std::uint32_t element_index) const {
        return cell_count + element_index;
    }
};

/// Spaces participate in the graph as elements; this prepends one polygon
/// element per space (id "space/<space id>") to the plan's element list.
std::vector<SpatialElement> elements_with_spaces(const FloorPlan& plan);

/// Links every cell to the elements whose area of influence contains its
/// centroid (containment for space elements) and, when enabled, to its
/// 4-connected grid neighbors.
SpatialGraph build_graph(const MeshGrid& mesh, const std::vector<SpatialElement>& elements,
                         bool include_adjacency = true);

/// Elements (kind, id) whose AoI covers the cell, canonically ordered.
/// Space containment is not part of the signature.
std::vector<std::pair<ElementKind, std::string>> aoi_signature(const SpatialGraph& graph,
                                                               std::uint32_t cell_ordinal);

std::string signature_string(const std::vector<std::pair<ElementKind, std::string>>& sig);

/// Node-link JSON ({nodes: [...], links: [...]}) for inspection.
std::string graph_to_node_link_json(const SpatialGraph& graph);

}  // namespace asts
