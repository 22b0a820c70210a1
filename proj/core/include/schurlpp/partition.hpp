#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "schurlpp/errors.hpp"
#include "schurlpp/rational.hpp"

namespace schurlpp {

/// One cell of a Young diagram in canonical coordinates: column i >= 1,
/// row j >= 1, with row 1 the longest row. A diagram contains (i, j)
/// exactly when i <= lambda_j.
struct Cell {
    int col = 0;
    int row = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition, stored trimmed: strictly positive, non-increasing parts.
/// Indexing past the length reads as 0, so interlacing and containment code can
/// ignore length bookkeeping.
class Partition {
public:
    Partition() = default;

    /// Accepts a non-increasing part list; zeros are allowed only as a tail and
    /// are stripped. Throws InputError on negative or out-of-order parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// lambda_i, 1-based; 0 for i beyond the length (and for i < 1).
    int part(int i) const {
        if (i < 1 || i > static_cast<int>(parts_.size())) return 0;
        return parts_[static_cast<size_t>(i) - 1];
    }

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;

    /// lambda_1 - lambda_2 + lambda_3 - ...
    long long alternating_sum() const;

    const std::vector<int>& parts() const { return parts_; }

    /// Diagram containment: other fits inside this componentwise.
    bool contains(const Partition& other) const;
    bool contains_cell(Cell c) const {
        return c.col >= 1 && c.row >= 1 && c.col <= part(c.row);
    }

    std::vector<Cell> cells() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda >= mu >= 0 with lambda_i >= mu_i >= lambda_{i+1} for all i.
bool interlaces(const Partition& lambda, const Partition& mu);

/// Componentwise min and max; as diagrams these are intersection and union.
Partition part_min(const Partition& a, const Partition& b);
Partition part_max(const Partition& a, const Partition& b);

/// Skew Schur polynomial in a single variable:
///   x^(|lambda| - |mu|) when mu interlaces up to lambda, else 0 (and 0^0 = 1).
Rat skew_schur_mono(const Partition& lambda, const Partition& mu, const Rat& x);
double skew_schur_mono(const Partition& lambda, const Partition& mu, double x);

/// c raised to the alternating sum of lambda (0^0 = 1).
Rat tau_weight(const Partition& lambda, const Rat& c);
double tau_weight(const Partition& lambda, double c);

/// Cells (i, j) whose south-east neighbour (i+1, j+1) is still in lambda.
/// Removing any single chain from lambda can never dig below this region.
Partition interior(const Partition& lambda);

/// Cells of lambda outside interior(lambda), row by row.
std::vector<Cell> boundary_cells(const Partition& lambda);

/// Smallest diagram containing every cell of the set.
Partition min_diagram_containing(const std::vector<Cell>& cells);

} // namespace schurlpp
