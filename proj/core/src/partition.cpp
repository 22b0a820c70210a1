#include "schurlpp/partition.hpp"

#include <algorithm>

namespace schurlpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // Strip the zero tail first, then check what is left is a genuine
    // partition. A zero in the middle shows up as an ordering violation.
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw InputError("Partition: parts must be non-negative and zeros trailing");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw InputError("Partition: parts must be non-increasing");
    }
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

long long Partition::alternating_sum() const {
    long long s = 0;
    for (size_t k = 0; k < parts_.size(); ++k)
        s += (k % 2 == 0) ? parts_[k] : -parts_[k];
    return s;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(weight()));
    for (int j = 1; j <= length(); ++j)
        for (int i = 1; i <= part(j); ++i) out.push_back({i, j});
    return out;
}

bool interlaces(const Partition& lambda, const Partition& mu) {
    int n = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= n; ++i) {
        if (lambda.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lambda.part(i + 1)) return false;
    }
    return true;
}

Partition part_min(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int n = std::min(a.length(), b.length());
    parts.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) parts.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

Partition part_max(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    int n = std::max(a.length(), b.length());
    parts.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) parts.push_back(std::max(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

Rat skew_schur_mono(const Partition& lambda, const Partition& mu, const Rat& x) {
    if (!interlaces(lambda, mu)) return 0;
    return rat_pow(x, lambda.weight() - mu.weight());
}

double skew_schur_mono(const Partition& lambda, const Partition& mu, double x) {
    if (!interlaces(lambda, mu)) return 0.0;
    long long e = lambda.weight() - mu.weight();
    double acc = 1.0;
    for (long long k = 0; k < e; ++k) acc *= x;
    return acc;
}

Rat tau_weight(const Partition& lambda, const Rat& c) {
    return rat_pow(c, lambda.alternating_sum());
}

double tau_weight(const Partition& lambda, double c) {
    double acc = 1.0;
    for (long long k = 0; k < lambda.alternating_sum(); ++k) acc *= c;
    return acc;
}

Partition interior(const Partition& lambda) {
    // (i, j) is interior iff (i+1, j+1) is a cell, i.e. i <= lambda_{j+1} - 1.
    // Row j of the interior therefore has max(lambda_{j+1} - 1, 0) cells.
    std::vector<int> parts;
    for (int j = 1; j <= lambda.length(); ++j)
        parts.push_back(std::max(lambda.part(j + 1) - 1, 0));
    return Partition(std::move(parts));
}

std::vector<Cell> boundary_cells(const Partition& lambda) {
    Partition inner = interior(lambda);
    std::vector<Cell> out;
    for (int j = 1; j <= lambda.length(); ++j)
        for (int i = inner.part(j) + 1; i <= lambda.part(j); ++i) out.push_back({i, j});
    return out;
}

Partition min_diagram_containing(const std::vector<Cell>& cells) {
    int max_row = 0;
    for (const Cell& c : cells) {
        if (c.col < 1 || c.row < 1)
            throw InputError("min_diagram_containing: cells need col, row >= 1");
        max_row = std::max(max_row, c.row);
    }
    std::vector<int> parts(static_cast<size_t>(max_row), 0);
    for (const Cell& c : cells) {
        auto& p = parts[static_cast<size_t>(c.row) - 1];
        p = std::max(p, c.col);
    }
    // Rows above a deep cell must reach at least as far for the result to be a
    // diagram, so take suffix maxima.
    for (int j = max_row - 1; j >= 1; --j)
        parts[static_cast<size_t>(j) - 1] =
            std::max(parts[static_cast<size_t>(j) - 1], parts[static_cast<size_t>(j)]);
    return Partition(std::move(parts));
}

} // namespace schurlpp
