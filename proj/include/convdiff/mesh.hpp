#pragma once

#include <Eigen/Core>

#include <array>
#include <vector>

namespace convdiff {

enum class BoundaryMarker { Left, Right, Bottom, Top };

const char* to_string(BoundaryMarker m);

// A boundary facet: a vertex in 1D (second index -1), an edge in 2D.
struct BoundaryFacet {
    std::array<int, 2> vertices{-1, -1};
    BoundaryMarker marker = BoundaryMarker::Left;
};

/// Conforming simplex mesh of [0,1] (dim 1) or the unit square (dim 2).
/// Cells store vertex indices, counterclockwise in 2D; the third index is
/// -1 for interval cells. Immutable after construction.
struct Mesh {
    int dim = 1;
    int cells_per_side = 0; // n of the structured constructors
    std::vector<Eigen::Vector2d> vertices;
    std::vector<std::array<int, 3>> cells;
    std::vector<BoundaryFacet> boundary_facets;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int cell_count() const { return static_cast<int>(cells.size()); }
    int vertices_per_cell() const { return dim + 1; }
};

struct MeshStats {
    double h_min = 0.0;
    double h_max = 0.0;
    int cell_count = 0;
    int vertex_count = 0;
};

/// n uniform cells on [0,1]; markers Left at x=0, Right at x=1.
Mesh build_interval_mesh(int n);

/// Uniform (n+1)^2 grid on the unit square, each square split into two
/// right triangles; boundary edges are marked by side. The triangulation
/// is invariant under the coordinate swap (x,y) -> (y,x).
Mesh build_unit_square_mesh(int n);

/// h is the cell length (1D) or the longest edge (2D).
MeshStats mesh_stats(const Mesh& mesh);

/// Length (1D) or signed area (2D, positive for CCW cells).
double cell_measure(const Mesh& mesh, int cell);

/// Per-vertex sets of markers of incident boundary facets; empty for
/// interior vertices. 2D corner vertices carry exactly two markers.
std::vector<std::vector<BoundaryMarker>> boundary_vertex_markers(const Mesh& mesh);

} // namespace convdiff
