#include "qrcs/mesh.hpp"

#include "qrcs/errors.hpp"

#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

namespace qrcs {

std::string_view to_string(MeshKind k) {
    switch (k) {
        case MeshKind::Square2D: return "square2d";
        case MeshKind::Triangular2D: return "triangular2d";
        case MeshKind::Cubic3D: return "cubic3d";
        case MeshKind::TetSixPerCube3D: return "tet6";
        case MeshKind::TetFivePerCube3D: return "tet5";
    }
    return "?";
}

MeshKind parse_mesh_kind(std::string_view tag) {
    if (tag == "square2d") return MeshKind::Square2D;
    if (tag == "triangular2d") return MeshKind::Triangular2D;
    if (tag == "cubic3d") return MeshKind::Cubic3D;
    if (tag == "tet6") return MeshKind::TetSixPerCube3D;
    if (tag == "tet5") return MeshKind::TetFivePerCube3D;
    throw ParameterError("topology", "unknown mesh kind '" + std::string(tag) +
                                         "' (expected square2d, triangular2d, cubic3d, tet6, tet5)");
}

int dimension_of(MeshKind k) {
    return (k == MeshKind::Square2D || k == MeshKind::Triangular2D) ? 2 : 3;
}

int edges_per_element(ElementType t) {
    switch (t) {
        case ElementType::Square: return 4;
        case ElementType::Triangle: return 3;
        case ElementType::Cube: return 12;
        case ElementType::Tetrahedron: return 6;
    }
    return 0;
}

Mesh::Mesh(int dimension, std::vector<std::array<int, 3>> vertices, std::vector<Edge> edges,
           std::vector<ElementType> cell_types, std::vector<std::size_t> cell_offsets,
           std::vector<EdgeId> cell_edges)
    : dimension_(dimension),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      cell_types_(std::move(cell_types)),
      cell_offsets_(std::move(cell_offsets)),
      cell_edges_(std::move(cell_edges)) {
    if (dimension_ != 2 && dimension_ != 3)
        throw ParameterError("dimension", "must be 2 or 3, got " + std::to_string(dimension_));
    if (vertices_.size() > std::numeric_limits<VertexId>::max() ||
        edges_.size() > std::numeric_limits<EdgeId>::max())
        throw ParameterError("mesh", "too many vertices or edges for 32-bit ids");

    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.a >= vertices_.size() || ed.b >= vertices_.size())
            throw ParameterError("edges", "edge " + std::to_string(e) + " references a missing vertex");
        if (!(ed.a < ed.b))
            throw ParameterError("edges", "edge " + std::to_string(e) +
                                              " must join two distinct vertices, smaller id first");
        const std::uint64_t key = (std::uint64_t{ed.a} << 32) | ed.b;
        if (!seen.emplace(key, static_cast<EdgeId>(e)).second)
            throw ParameterError("edges", "edge " + std::to_string(e) + " duplicates edge " +
                                              std::to_string(seen[key]));
    }

    if (cell_offsets_.size() != cell_types_.size() + 1 || cell_offsets_.front() != 0 ||
        cell_offsets_.back() != cell_edges_.size())
        throw ParameterError("cells", "offset table does not match the cell list");
    for (std::size_t c = 0; c < cell_types_.size(); ++c) {
        if (cell_offsets_[c + 1] < cell_offsets_[c])
            throw ParameterError("cells", "offsets must be non-decreasing");
        const auto n = cell_offsets_[c + 1] - cell_offsets_[c];
        if (n != static_cast<std::size_t>(edges_per_element(cell_types_[c])))
            throw ParameterError("cells", "cell " + std::to_string(c) + " has " + std::to_string(n) +
                                              " edges, element type needs " +
                                              std::to_string(edges_per_element(cell_types_[c])));
    }
    for (EdgeId e : cell_edges_)
        if (e >= edges_.size())
            throw ParameterError("cells", "edge id " + std::to_string(e) + " out of range");
}

std::span<const EdgeId> Mesh::cell_edges(std::size_t cell) const {
    const std::size_t begin = cell_offsets_.at(cell);
    return std::span<const EdgeId>(cell_edges_).subspan(begin, cell_offsets_[cell + 1] - begin);
}

namespace {

class LatticeBuilder {
public:
    LatticeBuilder(int dimension, const GridExtent& ext) : dim_(dimension), ext_(ext) {
        const std::uint64_t nv = std::uint64_t(ext.nx) * ext.ny * ext.nz;
        if (nv > std::numeric_limits<VertexId>::max())
            throw ParameterError("m", "mesh too large for 32-bit vertex ids");
        vertices_.reserve(nv);
        for (int k = 0; k < ext.nz; ++k)
            for (int j = 0; j < ext.ny; ++j)
                for (int i = 0; i < ext.nx; ++i) vertices_.push_back({i, j, k});
        offsets_.push_back(0);
    }

    VertexId vertex(int i, int j, int k = 0) const {
        return static_cast<VertexId>((std::size_t(k) * ext_.ny + j) * ext_.nx + i);
    }

    /// Adds a cell spanned by the given vertices. Squares and cubes connect only lattice
    /// neighbours (coordinates differ along one axis); simplices connect every pair.
    void add_cell(ElementType type, std::span<const VertexId> corners) {
        const bool simplex = type == ElementType::Triangle || type == ElementType::Tetrahedron;
        for (std::size_t p = 0; p < corners.size(); ++p) {
            for (std::size_t q = p + 1; q < corners.size(); ++q) {
                if (!simplex && axes_differing(corners[p], corners[q]) != 1) continue;
                cell_edges_.push_back(intern(corners[p], corners[q]));
            }
        }
        types_.push_back(type);
        offsets_.push_back(cell_edges_.size());
    }

    Mesh finish() && {
        return Mesh(dim_, std::move(vertices_), std::move(edges_), std::move(types_),
                    std::move(offsets_), std::move(cell_edges_));
    }

private:
    int axes_differing(VertexId a, VertexId b) const {
        int n = 0;
        for (int ax = 0; ax < 3; ++ax) n += vertices_[a][ax] != vertices_[b][ax];
        return n;
    }

    EdgeId intern(VertexId a, VertexId b) {
        if (b < a) std::swap(a, b);
        const std::uint64_t key = (std::uint64_t{a} << 32) | b;
        auto [it, inserted] = lookup_.try_emplace(key, static_cast<EdgeId>(edges_.size()));
        if (inserted) {
            if (edges_.size() >= std::numeric_limits<EdgeId>::max())
                throw ParameterError("m", "mesh too large for 32-bit edge ids");
            edges_.push_back({a, b});
        }
        return it->second;
    }

    int dim_;
    GridExtent ext_;
    std::vector<std::array<int, 3>> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, EdgeId> lookup_;
    std::vector<ElementType> types_;
    std::vector<std::size_t> offsets_;
    std::vector<EdgeId> cell_edges_;
};

void check_extent(MeshKind kind, const GridExtent& ext) {
    auto need = [](const char* field, int v) {
        if (v < 2) throw ParameterError(field, "needs at least 2 vertices, got " + std::to_string(v));
    };
    need("nx", ext.nx);
    need("ny", ext.ny);
    if (dimension_of(kind) == 3)
        need("nz", ext.nz);
    else if (ext.nz != 1)
        throw ParameterError("nz", "must be 1 for a 2D mesh, got " + std::to_string(ext.nz));
}

// Bit b of a corner index selects +1 along axis b.
constexpr int kX = 1, kY = 2, kZ = 4;

}  // namespace

Mesh build_mesh(MeshKind kind, const GridExtent& ext) {
    check_extent(kind, ext);
    LatticeBuilder lb(dimension_of(kind), ext);

    if (dimension_of(kind) == 2) {
        for (int j = 0; j + 1 < ext.ny; ++j) {
            for (int i = 0; i + 1 < ext.nx; ++i) {
                const VertexId v00 = lb.vertex(i, j), v10 = lb.vertex(i + 1, j);
                const VertexId v01 = lb.vertex(i, j + 1), v11 = lb.vertex(i + 1, j + 1);
                if (kind == MeshKind::Square2D) {
                    const std::array quad{v00, v10, v01, v11};
                    lb.add_cell(ElementType::Square, quad);
                } else {
                    const std::array lower{v00, v10, v11};
                    const std::array upper{v00, v01, v11};
                    lb.add_cell(ElementType::Triangle, lower);
                    lb.add_cell(ElementType::Triangle, upper);
                }
            }
        }
        return std::move(lb).finish();
    }

    for (int k = 0; k + 1 < ext.nz; ++k) {
        for (int j = 0; j + 1 < ext.ny; ++j) {
            for (int i = 0; i + 1 < ext.nx; ++i) {
                std::array<VertexId, 8> c{};
                for (int b = 0; b < 8; ++b)
                    c[b] = lb.vertex(i + (b & kX ? 1 : 0), j + (b & kY ? 1 : 0), k + (b & kZ ? 1 : 0));

                switch (kind) {
                    case MeshKind::Cubic3D:
                        lb.add_cell(ElementType::Cube, c);
                        break;
                    case MeshKind::TetSixPerCube3D: {
                        // Monotone lattice paths from corner 0 to corner 7, one per axis order.
                        constexpr std::array<std::array<int, 3>, 6> orders{{
                            {kX, kY, kZ}, {kX, kZ, kY}, {kY, kX, kZ},
                            {kY, kZ, kX}, {kZ, kX, kY}, {kZ, kY, kX},
                        }};
                        for (const auto& o : orders) {
                            const std::array tet{c[0], c[o[0]], c[o[0] | o[1]], c[7]};
                            lb.add_cell(ElementType::Tetrahedron, tet);
                        }
                        break;
                    }
                    case MeshKind::TetFivePerCube3D: {
                        // Central tetrahedron on the corners of one bit parity; which parity
                        // alternates with the cube so that shared faces carry the same diagonal.
                        const int central = (i + j + k) & 1;
                        std::array<VertexId, 4> mid{};
                        int n = 0;
                        for (int b = 0; b < 8; ++b)
                            if ((std::popcount(unsigned(b)) & 1) == central) mid[n++] = c[b];
                        lb.add_cell(ElementType::Tetrahedron, mid);
                        for (int b = 0; b < 8; ++b) {
                            if ((std::popcount(unsigned(b)) & 1) == central) continue;
                            const std::array tet{c[b], c[b ^ kX], c[b ^ kY], c[b ^ kZ]};
                            lb.add_cell(ElementType::Tetrahedron, tet);
                        }
                        break;
                    }
                    default:
                        break;
                }
            }
        }
    }
    return std::move(lb).finish();
}

Mesh build_mesh(const MeshTopology& t) {
    if (t.m < 2) throw ParameterError("m", "must be >= 2, got " + std::to_string(t.m));
    const GridExtent ext{t.m, t.m, dimension_of(t.kind) == 3 ? t.m : 1};
    return build_mesh(t.kind, ext);
}

std::uint64_t edge_count(const MeshTopology& t) {
    if (t.m < 2) throw ParameterError("m", "must be >= 2, got " + std::to_string(t.m));
    const std::uint64_t m = static_cast<std::uint64_t>(t.m);
    const std::uint64_t s = m - 1;
    const std::uint64_t cube_edges = 3 * m * m * s;
    const std::uint64_t face_diagonals = 3 * m * s * s;
    switch (t.kind) {
        case MeshKind::Square2D: return 2 * m * s;
        case MeshKind::Triangular2D: return 2 * m * s + s * s;
        case MeshKind::Cubic3D: return cube_edges;
        case MeshKind::TetSixPerCube3D: return cube_edges + face_diagonals + s * s * s;
        case MeshKind::TetFivePerCube3D: return cube_edges + face_diagonals;
    }
    return 0;
}

}  // namespace qrcs
