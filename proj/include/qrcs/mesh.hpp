#pragma once

// Regular lattice meshes with one degree of freedom per edge.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qrcs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class MeshKind {
    Square2D,
    Triangular2D,      // squares cut by one diagonal, all diagonals parallel
    Cubic3D,
    TetSixPerCube3D,   // six tetrahedra around each cube's (0,0,0)-(1,1,1) diagonal
    TetFivePerCube3D,  // one central tetrahedron plus four corners, parity-alternating
};

enum class ElementType { Square, Triangle, Cube, Tetrahedron };

std::string_view to_string(MeshKind k);
/// Accepts square2d, triangular2d, cubic3d, tet6, tet5.
MeshKind parse_mesh_kind(std::string_view tag);
int dimension_of(MeshKind k);

/// Edges per element: 4, 3, 12, 6.
int edges_per_element(ElementType t);

/// A mesh kind with m vertices along every axis.
struct MeshTopology {
    MeshKind kind = MeshKind::Square2D;
    int m = 2;

    friend bool operator==(const MeshTopology&, const MeshTopology&) = default;
};

/// Vertices per axis for a box of arbitrary shape. Unused axes must be 1.
struct GridExtent {
    int nx = 2;
    int ny = 2;
    int nz = 1;
};

/// Undirected edge, stored with a < b.
struct Edge {
    VertexId a;
    VertexId b;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable mesh: lattice vertices, unique edges, and cells given as lists of edge ids
/// (flat storage with offsets). The constructor enforces all structural invariants.
class Mesh {
public:
    Mesh(int dimension, std::vector<std::array<int, 3>> vertices, std::vector<Edge> edges,
         std::vector<ElementType> cell_types, std::vector<std::size_t> cell_offsets,
         std::vector<EdgeId> cell_edges);

    int dimension() const noexcept { return dimension_; }
    std::span<const std::array<int, 3>> vertices() const noexcept { return vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t cell_count() const noexcept { return cell_types_.size(); }
    ElementType cell_type(std::size_t cell) const { return cell_types_.at(cell); }
    std::span<const EdgeId> cell_edges(std::size_t cell) const;

private:
    int dimension_;
    std::vector<std::array<int, 3>> vertices_;
    std::vector<Edge> edges_;
    std::vector<ElementType> cell_types_;
    std::vector<std::size_t> cell_offsets_;  // cell_count() + 1 entries
    std::vector<EdgeId> cell_edges_;
};

/// Throws ParameterError when m < 2 or the mesh would not fit 32-bit ids.
Mesh build_mesh(const MeshTopology& t);

/// Same lattice constructions on a box; each used axis needs >= 2 vertices.
Mesh build_mesh(MeshKind kind, const GridExtent& extent);

/// Closed-form number of edges build_mesh(t) produces.
std::uint64_t edge_count(const MeshTopology& t);

}  // namespace qrcs
