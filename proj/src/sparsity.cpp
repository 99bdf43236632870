#include "qrcs/sparsity.hpp"

#include "qrcs/errors.hpp"

#include <algorithm>
#include <ostream>

namespace qrcs {

namespace {

// Edge -> incident cells, flat storage.
struct EdgeCells {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> cells;

    explicit EdgeCells(const Mesh& mesh) : offsets(mesh.edges().size() + 1, 0) {
        for (std::size_t c = 0; c < mesh.cell_count(); ++c)
            for (EdgeId e : mesh.cell_edges(c)) ++offsets[e + 1];
        for (std::size_t e = 0; e + 1 < offsets.size(); ++e) offsets[e + 1] += offsets[e];
        cells.resize(offsets.back());
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (std::size_t c = 0; c < mesh.cell_count(); ++c)
            for (EdgeId e : mesh.cell_edges(c)) cells[fill[e]++] = static_cast<std::uint32_t>(c);
    }

    std::span<const std::uint32_t> of(EdgeId e) const {
        return std::span<const std::uint32_t>(cells).subspan(offsets[e], offsets[e + 1] - offsets[e]);
    }
};

void require_cells(const Mesh& mesh) {
    if (mesh.cell_count() == 0) throw DegenerateInputError("sparsity: mesh has no cells");
}

}  // namespace

std::vector<EdgeId> edge_neighbors(const Mesh& mesh, EdgeId edge) {
    if (edge >= mesh.edges().size())
        throw ParameterError("edge", "id " + std::to_string(edge) + " out of range");
    std::vector<EdgeId> out{edge};
    for (std::size_t c = 0; c < mesh.cell_count(); ++c) {
        const auto ce = mesh.cell_edges(c);
        if (std::find(ce.begin(), ce.end(), edge) != ce.end()) out.insert(out.end(), ce.begin(), ce.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NonzeroPattern row_nonzero_counts(const Mesh& mesh) {
    require_cells(mesh);
    const EdgeCells incidence(mesh);
    const std::size_t n = mesh.edges().size();

    NonzeroPattern out;
    out.row_counts.resize(n);
    // stamp[j] == i + 1 marks column j as already counted for row i.
    std::vector<std::uint32_t> stamp(n, 0);
    for (EdgeId i = 0; i < n; ++i) {
        std::uint32_t count = 0;
        for (std::uint32_t c : incidence.of(i)) {
            for (EdgeId j : mesh.cell_edges(c)) {
                if (stamp[j] != i + 1) {
                    stamp[j] = i + 1;
                    ++count;
                }
            }
        }
        // An edge in no cell still has its diagonal entry.
        if (count == 0) count = 1;
        out.row_counts[i] = count;
        ++out.histogram[static_cast<int>(count)];
        out.total_nonzeros += count;
    }
    return out;
}

SparsityReport sparsity_parameter(const Mesh& mesh) {
    NonzeroPattern pattern = row_nonzero_counts(mesh);
    SparsityReport r;
    r.histogram = std::move(pattern.histogram);
    r.boundary_min = r.histogram.begin()->first;
    r.d = r.histogram.rbegin()->first;
    return r;
}

void write_adjacency(const Mesh& mesh, std::ostream& out) {
    for (std::size_t c = 0; c < mesh.cell_count(); ++c) {
        const auto ce = mesh.cell_edges(c);
        for (std::size_t k = 0; k < ce.size(); ++k) {
            if (k) out << ' ';
            out << ce[k];
        }
        out << '\n';
    }
}

}  // namespace qrcs
