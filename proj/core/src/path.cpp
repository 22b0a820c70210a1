#include "schurlpp/path.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schurlpp {

DownRightPath::DownRightPath(Vertex start, std::string word) : word_(std::move(word)) {
    if (start.x < 0 || start.y < 0)
        throw InputError("DownRightPath: start must lie in the first quadrant");
    vertices_.reserve(word_.size() + 1);
    vertices_.push_back(start);
    Vertex v = start;
    for (char s : word_) {
        if (s == 'R') {
            v.x += 1;
        } else if (s == 'D') {
            v.y -= 1;
        } else {
            throw InputError("DownRightPath: word must use only 'R' and 'D'");
        }
        if (v.y < 0)
            throw InputError("DownRightPath: path leaves the first quadrant");
        vertices_.push_back(v);
    }
}

bool spans_quadrant(const DownRightPath& gamma) {
    return gamma.start().x == 0 && gamma.end().y == 0;
}

bool spans_half_quadrant(const DownRightPath& gamma) {
    return gamma.start().x == gamma.start().y && gamma.end().y == 0;
}

namespace {

// Cells certified by the path's vertices: (vx - d, vy - d) for each vertex and
// each d >= 0 keeping both coordinates positive. Returns per-row column sets.
std::map<int, std::set<int>> certified_cells(const DownRightPath& gamma) {
    std::map<int, std::set<int>> rows;
    for (const Vertex& v : gamma.vertices()) {
        for (int d = 0; d <= std::min(v.x, v.y) - 1; ++d)
            rows[v.y - d].insert(v.x - d);
    }
    return rows;
}

Partition rows_to_partition(const std::map<int, std::set<int>>& rows) {
    int max_row = rows.empty() ? 0 : rows.rbegin()->first;
    std::vector<int> parts(static_cast<size_t>(max_row), 0);
    for (const auto& [j, cols] : rows) {
        // Each row has to be a contiguous run 1..len for the cell set to be a
        // diagram; a gap would mean the path shape is not downward closed.
        int len = static_cast<int>(cols.size());
        if (*cols.begin() != 1 || *cols.rbegin() != len)
            throw InternalError("shape_of: path shape is not a Young diagram");
        parts[static_cast<size_t>(j) - 1] = len;
    }
    return Partition(std::move(parts));
}

} // namespace

Partition shape_of(const DownRightPath& gamma) {
    if (!spans_quadrant(gamma))
        throw InputError("shape_of: path must run from (0, n) to (m, 0)");
    return rows_to_partition(certified_cells(gamma));
}

std::vector<Cell> path_shape_cells(const DownRightPath& gamma) {
    std::vector<Cell> out;
    for (const auto& [j, cols] : certified_cells(gamma))
        for (int i : cols) out.push_back({i, j});
    std::sort(out.begin(), out.end());
    return out;
}

Partition symmetrized_shape(const DownRightPath& gamma) {
    if (!spans_half_quadrant(gamma))
        throw InputError("symmetrized_shape: path must run from (n, n) to (m+n, 0)");
    std::map<int, std::set<int>> rows = certified_cells(gamma);
    std::map<int, std::set<int>> sym = rows;
    for (const auto& [j, cols] : rows)
        for (int i : cols) sym[i].insert(j);
    return rows_to_partition(sym);
}

DownRightPath boundary_path(const Partition& shape, int m, int n) {
    if (m < 0 || n < 0) throw InputError("boundary_path: frame must be non-negative");
    if (shape.length() > n || shape.part(1) > m)
        throw InputError("boundary_path: shape does not fit the frame");
    std::string word;
    word.reserve(static_cast<size_t>(m + n));
    // Walk the north-east profile: at height j the path sits at x = shape_j.
    for (int j = n; j >= 1; --j) {
        word.append(static_cast<size_t>(shape.part(j) - shape.part(j + 1)), 'R');
        word.push_back('D');
    }
    word.append(static_cast<size_t>(m - shape.part(1)), 'R');
    return DownRightPath({0, n}, std::move(word));
}

std::vector<DownRightPath> elementary_growth_sequence(const DownRightPath& gamma) {
    Partition target = shape_of(gamma);
    int n = gamma.start().y;
    int m = gamma.end().x;
    std::vector<DownRightPath> out;
    out.push_back(boundary_path(Partition(), m, n));
    std::vector<int> partial;
    for (int j = 1; j <= target.length(); ++j) {
        partial.push_back(0);
        for (int i = 1; i <= target.part(j); ++i) {
            partial.back() = i;
            out.push_back(boundary_path(Partition(partial), m, n));
        }
    }
    // Growing row by row from the longest row keeps every intermediate shape a
    // diagram, so each step is a single DR -> RD corner flip.
    if (out.back() != gamma)
        throw InternalError("elementary_growth_sequence: did not reach gamma");
    return out;
}

bool is_ne_chain(const std::vector<Cell>& chain) {
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        const Cell& a = chain[k];
        const Cell& b = chain[k + 1];
        if (a == b) return false;
        if (b.col < a.col || b.row < a.row) return false;
    }
    return true;
}

bool is_up_right_path(const std::vector<Cell>& chain) {
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        const Cell& a = chain[k];
        const Cell& b = chain[k + 1];
        int dc = b.col - a.col;
        int dr = b.row - a.row;
        if (!((dc == 1 && dr == 0) || (dc == 0 && dr == 1))) return false;
    }
    return true;
}

} // namespace schurlpp
