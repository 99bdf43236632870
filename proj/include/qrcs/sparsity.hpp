#pragma once

// Symbolic nonzero pattern of the edge-based FEM system matrix. Row i has a nonzero in
// column j exactly when edges i and j belong to a common cell, so the pattern depends
// only on mesh topology.

#include "qrcs/mesh.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace qrcs {

struct SparsityReport {
    int d = 0;                                 // max row count over all edges, boundary included
    std::map<int, std::uint64_t> histogram;    // row count -> number of edges
    int boundary_min = 0;                      // smallest row count observed
};

struct NonzeroPattern {
    std::vector<std::uint32_t> row_counts;     // indexed by edge id
    std::map<int, std::uint64_t> histogram;
    std::uint64_t total_nonzeros = 0;
};

/// Edges sharing at least one cell with `edge`, including the edge itself; sorted ascending.
std::vector<EdgeId> edge_neighbors(const Mesh& mesh, EdgeId edge);

/// Per-row nonzero counts. Throws DegenerateInputError for a mesh without cells.
NonzeroPattern row_nonzero_counts(const Mesh& mesh);

/// Sparsity parameter d: maximum over edges of the number of edges one cell away (self included).
/// Throws DegenerateInputError for a mesh without cells.
SparsityReport sparsity_parameter(const Mesh& mesh);

/// One line per cell: its edge ids separated by single spaces.
void write_adjacency(const Mesh& mesh, std::ostream& out);

}  // namespace qrcs
