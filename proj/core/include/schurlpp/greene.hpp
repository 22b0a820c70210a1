#pragma once

#include <utility>
#include <vector>

#include "schurlpp/matrix.hpp"
#include "schurlpp/partition.hpp"

namespace schurlpp {

/// Maximum total weight of k pairwise vertex-disjoint up-right paths through
/// the matrix, path i pinned to run from (1, i) to (cols, rows - k + i).
/// For k > min(cols, rows), where no such family exists, the value is the
/// total mass by convention. Exhaustive layered DP over column profiles,
/// independent of the growth engine; budget caps the explored state count.
long long brute_g(const WeightMatrix& a, int k, long long budget = 10'000'000);

/// Maximum total weight of k pairwise disjoint NE-chains (weakly increasing
/// in both coordinates; empty chains allowed). Memoized assignment search:
/// cells in column-major order, each chain tracked by the row of its last
/// member. For k >= min(cols, rows) this reaches the total mass.
long long brute_h(const WeightMatrix& a, int k, long long budget = 10'000'000);

/// brute_h value together with one family attaining it. Chains come back as
/// lex-sorted vertex lists; empty chains are kept so exactly k are returned.
std::pair<long long, std::vector<std::vector<Cell>>>
brute_h_witness(const WeightMatrix& a, int k, long long budget = 10'000'000);

/// True when the cell set (any order) is a NE-chain_set: sorted by (col, row)
/// the rows must be weakly increasing.
bool is_chain_set(const std::vector<Cell>& cells);

/// Grows the union of a k-chain family inside [1..cols] x [1..rows] until it
/// is maximal under set inclusion among unions of k disjoint chain sets: a
/// grid cell joins whenever the enlarged union still splits into k chains
/// (equivalently, its longest antichain stays at most k). The union is then
/// re-partitioned from scratch, so output chains need not extend the input
/// ones, but every input cell survives. Chains are padded with empty sets to
/// keep the family size at k.
std::vector<std::vector<Cell>> greedy_maximalize(std::vector<std::vector<Cell>> family,
                                                 int cols, int rows);

/// For a maximal k-chain family in an m x n grid the union must contain the
/// 2k off-diagonal corner cells (j, k-j+1) and (m-j+1, n-k+j), j = 1..k.
/// Returns whether it does. Requires k <= min(m, n).
bool check_offdiag(const std::vector<std::vector<Cell>>& family, int cols, int rows,
                   int k);

// --- Young-diagram-side constructions -------------------------------------
//
// Chains below live in canonical diagram coordinates (row 1 the longest row),
// where the same product order makes rows weakly DEcrease with the column.
// Matrix-side chains map onto these by flipping the row inside an n-row
// frame: (i, j) <-> (i, n + 1 - j).

/// Chain-set validity in diagram coordinates: sorted by (col asc, row desc),
/// rows weakly decreasing.
bool is_diagram_chain(const std::vector<Cell>& cells);

/// Diagram-coordinate flip of a cell family between the matrix picture and
/// the diagram picture inside an n-row frame.
std::vector<Cell> flip_rows(const std::vector<Cell>& cells, int rows);

/// Rewires two disjoint diagram chains into (chi1', chi2') where
///   chi1' = cells of the union on the boundary of max(shape1, shape2),
///   chi2' = the remaining cells of the union.
/// chi1' spans the same united shape as the pair did, and chi2' sinks into
/// its interior; the union of cells is preserved.
std::pair<std::vector<Cell>, std::vector<Cell>> twist(const std::vector<Cell>& chi1,
                                                      const std::vector<Cell>& chi2);

/// Splits a disjoint family of k diagram chains inside lambda into nested
/// shapes lambda^1 <= ... <= lambda^k with
///   - lambda^i contained in the interior of lambda^(i+1), and
///   - every chain cell covered by some boundary d(lambda^i).
/// Throws InputError when chains overlap or leave lambda.
std::vector<Partition> layers_decompose(std::vector<std::vector<Cell>> chains,
                                        const Partition& lambda);

/// Turns a disjoint family of k NE-chains (matrix coordinates, inside the
/// support) into k disjoint up-right paths pinned from (1, j) to
/// (cols, rows - k + j), of at least the same total weight. When the input is
/// optimal for brute_h the output weight equals brute_g. Requires
/// k <= min(cols, rows); throws InternalError if the weight ever drops.
std::vector<std::vector<Cell>> straighten(const std::vector<std::vector<Cell>>& family,
                                          const WeightMatrix& a, int k);

} // namespace schurlpp
