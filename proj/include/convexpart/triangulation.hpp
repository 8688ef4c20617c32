#pragma once

#include <array>
#include <span>
#include <vector>

#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

// Counterclockwise triangle.
using Triangle = std::array<PointId, 3>;

/// Triangulation of conv(ids) using every id as a vertex (collinear points
/// included). Incremental insertion in lexicographic order. Returns no
/// triangles when the ids are collinear.
std::vector<Triangle> triangulate(const PointSet& points, std::span<const PointId> ids);

/// Triangulation of conv(ids) in which every constraint appears as a union of
/// triangle edges. Constraint endpoints must be in `ids` and constraints must
/// not cross; they are split at any id lying in their interior.
std::vector<Triangle> constrained_triangulation(const PointSet& points, std::span<const PointId> ids,
                                                std::span<const Edge> constraints);

std::vector<Edge> triangle_edges(std::span<const Triangle> triangles);

}  // namespace convexpart
