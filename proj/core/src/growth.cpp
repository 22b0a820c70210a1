#include "schurlpp/growth.hpp"

#include <algorithm>

namespace schurlpp {

namespace {
std::atomic<uint64_t> g_mass_checks{0};

const Partition& empty_partition() {
    static const Partition kEmpty;
    return kEmpty;
}
} // namespace

uint64_t forward_rule_mass_checks() { return g_mass_checks.load(); }

Partition forward_rule(const Partition& rho, const Partition& mu, const Partition& nu,
                       int m) {
    if (m < 0) throw InputError("forward_rule: multiplicity must be non-negative");
    if (!interlaces(mu, rho) || !interlaces(nu, rho))
        throw InputError("forward_rule: rho must interlace up to mu and nu");

    std::vector<int> lam;
    int carry = m;
    for (int i = 1;; ++i) {
        int li = std::max(mu.part(i), nu.part(i)) + carry;
        if (li == 0) break;
        lam.push_back(li);
        carry = std::min(mu.part(i), nu.part(i)) - rho.part(i);
    }
    Partition lambda(std::move(lam));

    if (lambda.weight() + rho.weight() !=
        static_cast<long long>(m) + mu.weight() + nu.weight())
        throw InternalError("forward_rule: mass identity violated");
    g_mass_checks.fetch_add(1, std::memory_order_relaxed);
    return lambda;
}

std::pair<Partition, int> backward_rule(const Partition& lambda, const Partition& mu,
                                        const Partition& nu) {
    if (!interlaces(lambda, mu) || !interlaces(lambda, nu))
        throw InputError("backward_rule: mu and nu must interlace up to lambda");

    int n = lambda.length();
    if (n == 0) return {Partition(), 0};
    std::vector<int> rho(static_cast<size_t>(n), 0);
    int carry = 0;
    for (int i = n; i >= 1; --i) {
        rho[static_cast<size_t>(i) - 1] = std::min(mu.part(i), nu.part(i)) - carry;
        carry = lambda.part(i) - std::max(mu.part(i), nu.part(i));
    }
    return {Partition(std::move(rho)), carry};
}

Filling::Filling(Partition s, std::vector<int> v) : shape(std::move(s)), values(std::move(v)) {
    if (values.size() != static_cast<size_t>(shape.weight()))
        throw InputError("Filling: value count does not match shape size");
    for (int x : values)
        if (x < 0) throw InputError("Filling: multiplicities must be non-negative");
}

int Filling::at(int i, int j) const {
    if (!shape.contains_cell({i, j})) return 0;
    size_t off = 0;
    for (int r = 1; r < j; ++r) off += static_cast<size_t>(shape.part(r));
    return values[off + static_cast<size_t>(i) - 1];
}

long long Filling::total() const {
    long long s = 0;
    for (int v : values) s += v;
    return s;
}

GrowthTable::GrowthTable(Partition shape) : shape_(std::move(shape)) {
    row_offset_.reserve(static_cast<size_t>(shape_.length()));
    size_t off = 0;
    for (int j = 1; j <= shape_.length(); ++j) {
        row_offset_.push_back(off);
        off += static_cast<size_t>(shape_.part(j));
    }
    cells_.resize(off);
}

const Partition& GrowthTable::entry(int i, int j) const {
    if (i == 0 || j == 0) return empty_partition();
    if (!shape_.contains_cell({i, j}))
        throw InputError("GrowthTable: cell outside the shape");
    return cells_[row_offset_[static_cast<size_t>(j) - 1] + static_cast<size_t>(i) - 1];
}

void GrowthTable::set_entry(int i, int j, Partition p) {
    if (!shape_.contains_cell({i, j}))
        throw InputError("GrowthTable: cell outside the shape");
    cells_[row_offset_[static_cast<size_t>(j) - 1] + static_cast<size_t>(i) - 1] =
        std::move(p);
}

GrowthTable grow(const Filling& f) {
    GrowthTable t(f.shape);
    size_t off = 0;
    for (int j = 1; j <= f.shape.length(); ++j) {
        for (int i = 1; i <= f.shape.part(j); ++i) {
            // Bottom-to-top, left-to-right keeps every prefix a diagram, so
            // the three earlier corners are always available.
            t.set_entry(i, j,
                        forward_rule(t.entry(i - 1, j - 1), t.entry(i, j - 1),
                                     t.entry(i - 1, j), f.values[off]));
            ++off;
        }
    }
    return t;
}

GrowthTable grow_rectangle(const WeightMatrix& w) {
    std::vector<int> parts(static_cast<size_t>(w.rows()), w.cols());
    return grow(Filling(Partition(std::move(parts)), w.data()));
}

ColumnGrowth::ColumnGrowth(int rows) {
    if (rows < 0) throw InputError("ColumnGrowth: negative row count");
    col_.assign(static_cast<size_t>(rows) + 1, Partition());
}

const std::vector<Partition>& ColumnGrowth::feed(const std::vector<int>& column) {
    if (column.size() + 1 != col_.size())
        throw InputError("ColumnGrowth: column length does not match row count");
    std::vector<Partition> next(col_.size());
    for (size_t j = 1; j < col_.size(); ++j)
        next[j] = forward_rule(col_[j - 1], next[j - 1], col_[j],
                               column[j - 1]);
    col_ = std::move(next);
    ++fed_;
    return col_;
}

std::vector<Partition> sequence_along(const GrowthTable& t, const DownRightPath& gamma) {
    std::vector<Partition> seq;
    seq.reserve(static_cast<size_t>(gamma.steps()) + 1);
    for (const Vertex& v : gamma.vertices())
        seq.push_back(v.x == 0 || v.y == 0 ? Partition() : t.entry(v.x, v.y));
    return seq;
}

std::vector<Partition> rsk_map(const Filling& f, const DownRightPath& gamma) {
    if (f.shape != shape_of(gamma))
        throw InputError("rsk_map: filling shape does not match the path shape");
    return sequence_along(grow(f), gamma);
}

Filling rsk_inverse(const std::vector<Partition>& seq_in, const DownRightPath& gamma) {
    Partition shape = shape_of(gamma);
    int r = gamma.steps();
    if (static_cast<int>(seq_in.size()) != r + 1)
        throw InputError("rsk_inverse: sequence length must be steps + 1");
    for (int i = 0; i <= r; ++i) {
        Vertex v = gamma.vertex(i);
        if ((v.x == 0 || v.y == 0) && !seq_in[static_cast<size_t>(i)].empty())
            throw InputError("rsk_inverse: not in the image (axis vertex not empty)");
    }
    for (int i = 1; i <= r; ++i) {
        const Partition& prev = seq_in[static_cast<size_t>(i) - 1];
        const Partition& cur = seq_in[static_cast<size_t>(i)];
        bool ok = gamma.letter(i) == 'R' ? interlaces(cur, prev) : interlaces(prev, cur);
        if (!ok)
            throw InputError("rsk_inverse: not in the image (interlacing violated)");
    }

    // Peel inner corners. Flipping an RD corner to DR removes one cell (u, v)
    // from the current shape and the inverse rule recovers its multiplicity.
    std::string word = gamma.word();
    std::vector<Partition> seq = seq_in;
    std::vector<Vertex> verts = gamma.vertices();
    Filling out(shape, std::vector<int>(static_cast<size_t>(shape.weight()), 0));

    auto value_slot = [&shape, &out](int i, int j) -> int& {
        size_t off = 0;
        for (int rr = 1; rr < j; ++rr) off += static_cast<size_t>(shape.part(rr));
        return out.values[off + static_cast<size_t>(i) - 1];
    };

    for (;;) {
        int p = 0;
        for (int k = 1; k < r; ++k) {
            if (word[static_cast<size_t>(k) - 1] == 'R' && word[static_cast<size_t>(k)] == 'D') {
                p = k;
                break;
            }
        }
        if (p == 0) break;
        Vertex corner = verts[static_cast<size_t>(p)];
        auto [rho, m] = backward_rule(seq[static_cast<size_t>(p)],
                                      seq[static_cast<size_t>(p) - 1],
                                      seq[static_cast<size_t>(p) + 1]);
        value_slot(corner.x, corner.y) = m;
        seq[static_cast<size_t>(p)] = std::move(rho);
        verts[static_cast<size_t>(p)] = {corner.x - 1, corner.y - 1};
        word[static_cast<size_t>(p) - 1] = 'D';
        word[static_cast<size_t>(p)] = 'R';
    }
    for (const Partition& p : seq)
        if (!p.empty()) throw InternalError("rsk_inverse: residue after peeling");
    return out;
}

bool is_symmetric_path(const DownRightPath& gamma) {
    const std::string& w = gamma.word();
    size_t n = w.size();
    for (size_t k = 0; k < n; ++k) {
        char mirrored = w[n - 1 - k] == 'R' ? 'D' : 'R';
        if (w[k] != mirrored) return false;
    }
    return true;
}

bool is_symmetric_filling(const Filling& f) {
    for (const Cell& c : f.shape.cells()) {
        if (!f.shape.contains_cell({c.row, c.col})) return false;
        if (f.at(c.col, c.row) != f.at(c.row, c.col)) return false;
    }
    return true;
}

std::vector<Partition> rsk_symmetric(const Filling& f, const DownRightPath& gamma) {
    if (!spans_quadrant(gamma) || !is_symmetric_path(gamma))
        throw InputError("rsk_symmetric: path must be symmetric across the diagonal");
    if (gamma.steps() % 2 != 0)
        throw InputError("rsk_symmetric: symmetric path must have even length");
    if (!is_symmetric_filling(f))
        throw InputError("rsk_symmetric: filling must be symmetric");
    std::vector<Partition> seq = rsk_map(f, gamma);
    size_t n = seq.size();
    for (size_t k = 0; k < n; ++k)
        if (seq[k] != seq[n - 1 - k])
            throw InternalError("rsk_symmetric: sequence is not a palindrome");
    size_t mid = static_cast<size_t>(gamma.steps()) / 2;
    return std::vector<Partition>(seq.begin() + static_cast<long>(mid), seq.end());
}

} // namespace schurlpp
