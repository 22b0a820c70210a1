#pragma once

#include <cstdint>
#include <vector>

#include "schurlpp/growth.hpp"
#include "schurlpp/matrix.hpp"
#include "schurlpp/path.hpp"
#include "schurlpp/rational.hpp"

namespace schurlpp {

/// Parameters of the full-space geometric environment: cell (i, j) holds an
/// independent geometric weight with ratio x_i * y_j. Components in [0, 1).
struct FsParams {
    std::vector<Rat> x;
    std::vector<Rat> y;

    /// Checks the vectors cover a cols x rows window with entries in [0, 1).
    void require_window(int cols, int rows) const;
    Rat q(int i, int j) const { return x[static_cast<size_t>(i) - 1] * y[static_cast<size_t>(j) - 1]; }
};

/// Parameters of the half-space environment on {(i, j) : i >= j}: off-diagonal
/// ratio x_i * x_j, diagonal ratio c * x_i, mirrored to the upper triangle.
struct HsParams {
    std::vector<Rat> x;
    Rat c = 0;

    void require_window(int size) const;
    Rat q(int i, int j) const {
        return i == j ? c * x[static_cast<size_t>(i) - 1]
                      : x[static_cast<size_t>(i) - 1] * x[static_cast<size_t>(j) - 1];
    }
};

/// Independent geometric weights on the m x n window. Each cell uses the
/// sub-stream keyed by (seed, replica, i, j).
WeightMatrix sample_full(const FsParams& p, int cols, int rows, uint64_t seed,
                         uint64_t replica = 0);

/// Symmetric geometric weights on the size x size window: lower wedge and
/// diagonal drawn, upper wedge mirrored.
WeightMatrix sample_half(const HsParams& p, int size, uint64_t seed,
                         uint64_t replica = 0);

struct LppObservation {
    DownRightPath path;
    std::vector<Partition> lambdas; // one per path vertex, empty on the axes
};

/// lambda(u, v) at every vertex of gamma, where lambda's prefix sums are the
/// multi-path last-passage times of the rectangle [1..u] x [1..v]. The
/// window must contain every vertex of gamma.
LppObservation observe(const WeightMatrix& w, const DownRightPath& gamma);

/// Prefix sums G_k of lambda at the given vertex, for k = 1..len(lambda)+1;
/// the final entry repeats the total, the value of every larger k.
std::vector<long long> g_times(const LppObservation& obs, int vertex_index);

} // namespace schurlpp
