#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "schurlpp/matrix.hpp"
#include "schurlpp/partition.hpp"
#include "schurlpp/path.hpp"

namespace schurlpp {

/// Local growth rule. Given the three earlier corners of a grid square
/// (rho south-west, mu and nu the side neighbours, both containing rho with
/// interlacing) and the cell's multiplicity m, produces the north-east corner:
///
///   CARRY := m; i := 1
///   lambda_i := max(mu_i, nu_i) + CARRY
///   if lambda_i = 0 stop, else CARRY := min(mu_i, nu_i) - rho_i; i := i + 1
///
/// Throws InputError when rho does not interlace up to mu and nu or m < 0.
/// Every call re-checks the mass identity
///   |lambda| + |rho| = m + |mu| + |nu|
/// and throws InternalError if it ever fails.
Partition forward_rule(const Partition& rho, const Partition& mu, const Partition& nu,
                       int m);

/// Inverse local rule. Given the north-east corner lambda and side neighbours
/// mu, nu (both interlacing up to lambda), recovers (rho, m):
///
///   i := max { j : lambda_j > 0 }; CARRY := 0
///   rho_i := min(mu_i, nu_i) - CARRY
///   CARRY := lambda_i - max(mu_i, nu_i); i := i - 1
///   stop at i = 0; output rho and m = CARRY
///
/// forward_rule and backward_rule are mutually inverse on valid inputs.
std::pair<Partition, int> backward_rule(const Partition& lambda, const Partition& mu,
                                        const Partition& nu);

/// Number of forward_rule calls whose mass identity was checked so far.
/// The check itself is always on; this exists so suites can report coverage.
uint64_t forward_rule_mass_checks();

/// Multiplicity filling of a Young-diagram shape, row-major (row 1 first).
struct Filling {
    Partition shape;
    std::vector<int> values;

    Filling() = default;
    Filling(Partition s, std::vector<int> v);

    int at(int i, int j) const; // 0 outside the shape
    long long total() const;
};

/// Partition labels on the cells of a shape: entry (i, j) for every cell of
/// the shape, zero-extended to the axes. entry(i, j) with i = 0 or j = 0 is
/// the empty partition.
class GrowthTable {
public:
    GrowthTable() = default;
    explicit GrowthTable(Partition shape);

    const Partition& shape() const { return shape_; }
    const Partition& entry(int i, int j) const;
    void set_entry(int i, int j, Partition p);

private:
    Partition shape_;
    std::vector<Partition> cells_; // row-major over the shape
    std::vector<size_t> row_offset_;
};

/// Runs the forward rule over every cell of the filling's shape (bottom row
/// first; the result is order-independent). entry(u, v) ends up recording the
/// rectangle [1..u] x [1..v].
GrowthTable grow(const Filling& f);

/// grow() for a full m x n rectangle of weights.
GrowthTable grow_rectangle(const WeightMatrix& w);

/// Column-by-column variant for long rectangles: keeps only one column of
/// partitions. feed() consumes column i's weights (row 1 first) and returns
/// the new column of partitions at x = i (heights 0..n).
class ColumnGrowth {
public:
    explicit ColumnGrowth(int rows);

    const std::vector<Partition>& feed(const std::vector<int>& column);
    const std::vector<Partition>& column() const { return col_; }
    int columns_fed() const { return fed_; }

private:
    std::vector<Partition> col_;
    int fed_ = 0;
};

/// Table entries read along the path's vertices, empty on the axes. Every
/// positive vertex must be a cell of the table's shape.
std::vector<Partition> sequence_along(const GrowthTable& t, const DownRightPath& gamma);

/// Partitions read along gamma: lambda at every path vertex, empty on the
/// axes. The filling's shape must equal shape_of(gamma).
std::vector<Partition> rsk_map(const Filling& f, const DownRightPath& gamma);

/// Inverse of rsk_map: recovers the filling from the partition sequence along
/// gamma. Throws InputError when the sequence is not a valid image (wrong
/// length, endpoints not empty, or an interlacing violation along the word).
Filling rsk_inverse(const std::vector<Partition>& seq, const DownRightPath& gamma);

/// rsk_map for a symmetric path (word equal to its reversal with R and D
/// swapped) and symmetric filling; returns the second half of the sequence,
/// from the diagonal vertex to the end. The full sequence is a palindrome, so
/// nothing is lost.
std::vector<Partition> rsk_symmetric(const Filling& f, const DownRightPath& gamma);

/// True when the word read backwards with R <-> D swapped equals itself.
bool is_symmetric_path(const DownRightPath& gamma);

/// True when the filling assigns equal values to (i, j) and (j, i).
bool is_symmetric_filling(const Filling& f);

} // namespace schurlpp
