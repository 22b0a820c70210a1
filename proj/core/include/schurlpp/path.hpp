#pragma once

#include <string>
#include <vector>

#include "schurlpp/partition.hpp"

namespace schurlpp {

/// Lattice point of the first quadrant (x = column, y = row-from-bottom).
struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Down-right lattice path: a start vertex plus a word over {R, D}, where
/// R steps by (+1, 0) and D by (0, -1). Every vertex must stay in the closed
/// first quadrant.
class DownRightPath {
public:
    DownRightPath() = default;
    DownRightPath(Vertex start, std::string word);

    const std::string& word() const { return word_; }
    Vertex start() const { return vertices_.front(); }
    Vertex end() const { return vertices_.back(); }

    /// Number of steps; there are steps()+1 vertices.
    int steps() const { return static_cast<int>(word_.size()); }
    Vertex vertex(int i) const { return vertices_.at(static_cast<size_t>(i)); }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    /// Letter of step i, 1-based to match vertex numbering: step i moves
    /// vertex(i-1) to vertex(i).
    char letter(int i) const { return word_.at(static_cast<size_t>(i) - 1); }

    friend bool operator==(const DownRightPath&, const DownRightPath&) = default;

private:
    std::string word_;
    std::vector<Vertex> vertices_;
};

/// True when the path runs from the y-axis (0, n) to the x-axis (m, 0).
bool spans_quadrant(const DownRightPath& gamma);

/// True when the path runs from the diagonal (n, n) to the x-axis (m+n, 0).
bool spans_half_quadrant(const DownRightPath& gamma);

/// Cells (i, j) >= (1, 1) such that (i+d, j+d) is a vertex of gamma for some
/// d >= 0, i.e. the cells weakly south-west of gamma along diagonals.
/// For a quadrant-spanning path this is a Young diagram, returned as its row
/// lengths (row j = cells at height j).
Partition shape_of(const DownRightPath& gamma);

/// The same cell set with no shape requirement, sorted lex; for a
/// half-quadrant path all cells satisfy col >= row.
std::vector<Cell> path_shape_cells(const DownRightPath& gamma);

/// Shape of a half-quadrant path together with its mirror image across the
/// diagonal. This is the region a symmetric weight array has to cover so that
/// every rectangle [1..u] x [1..v] with (u, v) on gamma is determined.
Partition symmetrized_shape(const DownRightPath& gamma);

/// The boundary path of a diagram inside the frame of down-right paths from
/// (0, n) to (m, 0). Requires shape to fit in the n x m box.
DownRightPath boundary_path(const Partition& shape, int m, int n);

/// Paths gamma_0, ..., gamma_r from the extreme path D^n R^m to gamma, each
/// consecutive pair differing by one DR -> RD flip (one cell added to the
/// shape). Cells are added bottom row first, left to right.
std::vector<DownRightPath> elementary_growth_sequence(const DownRightPath& gamma);

/// Vertex list weakly increasing in both coordinates, consecutive vertices
/// distinct. In the first-quadrant picture such chains point north-east.
bool is_ne_chain(const std::vector<Cell>& chain);

/// NE-chain whose consecutive vertices differ by exactly one unit step.
bool is_up_right_path(const std::vector<Cell>& chain);

} // namespace schurlpp
