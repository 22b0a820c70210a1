#pragma once

#include <vector>

#include "schurlpp/errors.hpp"
#include "schurlpp/partition.hpp"

namespace schurlpp {

/// Non-negative integer weights on [1..cols] x [1..rows], first-quadrant
/// orientation: at(i, j) is column i, row j counted from the bottom.
/// Stored row-major, bottom row first.
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(int cols, int rows)
        : cols_(cols), rows_(rows), data_(static_cast<size_t>(cols) * rows, 0) {
        if (cols < 0 || rows < 0) throw InputError("WeightMatrix: negative dimensions");
    }
    WeightMatrix(int cols, int rows, std::vector<int> row_major)
        : cols_(cols), rows_(rows), data_(std::move(row_major)) {
        if (cols < 0 || rows < 0) throw InputError("WeightMatrix: negative dimensions");
        if (data_.size() != static_cast<size_t>(cols) * rows)
            throw InputError("WeightMatrix: data length does not match shape");
        for (int v : data_)
            if (v < 0) throw InputError("WeightMatrix: entries must be non-negative");
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }

    int at(int i, int j) const {
        check(i, j);
        return data_[idx(i, j)];
    }
    void set(int i, int j, int v) {
        check(i, j);
        if (v < 0) throw InputError("WeightMatrix: entries must be non-negative");
        data_[idx(i, j)] = v;
    }

    /// Entry with zero-extension outside the support; handy for chain weights.
    int at_or_zero(int i, int j) const {
        if (i < 1 || j < 1 || i > cols_ || j > rows_) return 0;
        return data_[idx(i, j)];
    }

    long long total() const {
        long long s = 0;
        for (int v : data_) s += v;
        return s;
    }

    WeightMatrix transposed() const {
        WeightMatrix t(rows_, cols_);
        for (int j = 1; j <= rows_; ++j)
            for (int i = 1; i <= cols_; ++i) t.set(j, i, at(i, j));
        return t;
    }

    bool is_symmetric() const {
        if (cols_ != rows_) return false;
        for (int j = 1; j <= rows_; ++j)
            for (int i = 1; i < j; ++i)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    const std::vector<int>& data() const { return data_; }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(j - 1) * cols_ + static_cast<size_t>(i - 1);
    }
    void check(int i, int j) const {
        if (i < 1 || j < 1 || i > cols_ || j > rows_)
            throw InputError("WeightMatrix: index out of range");
    }

    int cols_ = 0;
    int rows_ = 0;
    std::vector<int> data_;
};

/// Sum of matrix entries over the chain's vertices (zero outside the support).
long long chain_weight(const WeightMatrix& a, const std::vector<Cell>& chain);

} // namespace schurlpp
