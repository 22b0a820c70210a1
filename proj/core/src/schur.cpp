#include "schurlpp/schur.hpp"

#include <algorithm>

namespace schurlpp {

namespace {

// The three successor generators all emit part lists in ascending
// lexicographic order: a node is emitted before its extensions and extension
// values increase.

void gen_free(int maxlen, int cap, std::vector<int>& cur,
              const std::function<void(const std::vector<int>&)>& emit) {
    emit(cur);
    if (static_cast<int>(cur.size()) == maxlen) return;
    int hi = cur.empty() ? cap : std::min(cap, cur.back());
    for (int v = 1; v <= hi; ++v) {
        cur.push_back(v);
        gen_free(maxlen, cap, cur, emit);
        cur.pop_back();
    }
}

// next with prev interlacing up to it (next covers prev from above).
void gen_up(const Partition& prev, int maxlen, int cap, std::vector<int>& cur,
            const std::function<void(const std::vector<int>&)>& emit) {
    int len = static_cast<int>(cur.size());
    if (len >= prev.length()) emit(cur);
    if (len == maxlen) return;
    int i = len + 1;
    int lo = std::max(prev.part(i), 1);
    int hi = i >= 2 ? std::min(cap, prev.part(i - 1)) : cap;
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        gen_up(prev, maxlen, cap, cur, emit);
        cur.pop_back();
    }
}

// next interlacing up to prev (next sits below prev).
void gen_down(const Partition& prev, int maxlen, int cap, std::vector<int>& cur,
              const std::function<void(const std::vector<int>&)>& emit) {
    int len = static_cast<int>(cur.size());
    if (prev.length() <= len + 1) emit(cur);
    if (len == maxlen) return;
    int i = len + 1;
    int lo = std::max(prev.part(i + 1), 1);
    int hi = std::min(cap, prev.part(i));
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        gen_down(prev, maxlen, cap, cur, emit);
        cur.pop_back();
    }
}

void enumerate_rec(const DownRightPath& gamma, int cap, int pos,
                   std::vector<Partition>& seq,
                   const std::function<void(const std::vector<Partition>&)>& emit) {
    int r = gamma.steps();
    if (pos == r + 1) {
        emit(seq);
        return;
    }
    Vertex v = gamma.vertex(pos);
    int maxlen = std::min(v.x, v.y);
    std::vector<int> cur;
    auto next = [&](const std::vector<int>& parts) {
        seq[static_cast<size_t>(pos)] = Partition(parts);
        enumerate_rec(gamma, cap, pos + 1, seq, emit);
    };
    if (pos == 0) {
        gen_free(maxlen, cap, cur, next);
    } else if (gamma.letter(pos) == 'R') {
        gen_up(seq[static_cast<size_t>(pos) - 1], maxlen, cap, cur, next);
    } else {
        gen_down(seq[static_cast<size_t>(pos) - 1], maxlen, cap, cur, next);
    }
}

} // namespace

void enumerate_sequences(const DownRightPath& gamma, int cap,
                         const std::function<void(const std::vector<Partition>&)>& emit) {
    if (cap < 0) throw InputError("enumerate_sequences: cap must be non-negative");
    std::vector<Partition> seq(static_cast<size_t>(gamma.steps()) + 1);
    enumerate_rec(gamma, cap, 0, seq, emit);
}

std::vector<std::vector<Partition>> enumerate_sequences(const DownRightPath& gamma,
                                                        int cap) {
    std::vector<std::vector<Partition>> out;
    enumerate_sequences(gamma, cap,
                        [&out](const std::vector<Partition>& s) { out.push_back(s); });
    return out;
}

namespace {

// Shared transition-factor walk; x_of / y_of map a variable index to its
// parameter value (the half-space case aliases y to x).
bool transition_factors(const DownRightPath& gamma, const std::vector<Partition>& seq,
                        const std::function<Rat(int)>& x_of,
                        const std::function<Rat(int)>& y_of, std::vector<QFactor>& factors,
                        Rat& prod) {
    bool alive = true;
    for (int i = 1; i <= gamma.steps(); ++i) {
        char s = gamma.letter(i);
        const Partition& prev = seq[static_cast<size_t>(i) - 1];
        const Partition& cur = seq[static_cast<size_t>(i)];
        QFactor f;
        f.step = i;
        f.letter = s;
        if (s == 'R') {
            // Entering column t: weight added in that column.
            f.var_index = gamma.vertex(i).x;
            f.exponent = cur.weight() - prev.weight();
            f.value = skew_schur_mono(cur, prev, x_of(f.var_index));
        } else {
            // Leaving row t: weight the row held.
            f.var_index = gamma.vertex(i - 1).y;
            f.exponent = prev.weight() - cur.weight();
            f.value = skew_schur_mono(prev, cur, y_of(f.var_index));
        }
        factors.push_back(f);
        if (f.value == 0)
            alive = false;
        else if (alive)
            prod *= f.value;
    }
    return alive;
}

} // namespace

SequenceWeight fs_weight(const DownRightPath& gamma, const FsParams& p,
                         const std::vector<Partition>& seq) {
    if (!spans_quadrant(gamma))
        throw InputError("fs_weight: path must run from (0, N) to (M, 0)");
    int n = gamma.start().y;
    int m = gamma.end().x;
    p.require_window(m, n);
    if (static_cast<int>(seq.size()) != gamma.steps() + 1)
        throw InputError("fs_weight: sequence length must be steps + 1");

    SequenceWeight out;
    out.sequence = seq;
    Partition shape = shape_of(gamma);
    Rat z = 1;
    for (int b = 1; b <= shape.length(); ++b)
        for (int a = 1; a <= shape.part(b); ++a) z *= 1 - p.q(a, b);
    out.normalizer = z;

    bool alive = seq.front().empty() && seq.back().empty();
    Rat prod = 1;
    auto x_of = [&p](int t) { return p.x[static_cast<size_t>(t) - 1]; };
    auto y_of = [&p](int t) { return p.y[static_cast<size_t>(t) - 1]; };
    alive = transition_factors(gamma, seq, x_of, y_of, out.factors, prod) && alive;
    out.probability = alive ? z * prod : Rat(0);
    return out;
}

Rat fs_probability(const DownRightPath& gamma, const FsParams& p,
                   const std::vector<Partition>& seq) {
    return fs_weight(gamma, p, seq).probability;
}

SequenceWeight hs_weight(const DownRightPath& gamma, const HsParams& p,
                         const std::vector<Partition>& seq) {
    if (!spans_half_quadrant(gamma))
        throw InputError("hs_weight: path must run from (N, N) to (M+N, 0)");
    int n = gamma.start().y;
    int total_cols = gamma.end().x;
    p.require_window(total_cols);
    if (static_cast<int>(seq.size()) != gamma.steps() + 1)
        throw InputError("hs_weight: sequence length must be steps + 1");

    SequenceWeight out;
    out.sequence = seq;
    Rat z = 1;
    for (int i = 1; i <= n; ++i) z *= 1 - p.c * p.x[static_cast<size_t>(i) - 1];
    for (const Cell& cell : path_shape_cells(gamma))
        if (cell.col > cell.row)
            z *= 1 - p.x[static_cast<size_t>(cell.col) - 1] * p.x[static_cast<size_t>(cell.row) - 1];
    out.normalizer = z;

    bool alive = seq.back().empty();
    Rat start = tau_weight(seq.front(), p.c);
    Rat prod = 1;
    auto x_of = [&p](int t) { return p.x[static_cast<size_t>(t) - 1]; };
    alive = transition_factors(gamma, seq, x_of, x_of, out.factors, prod) && alive;
    if (start == 0) alive = false;
    out.probability = alive ? z * start * prod : Rat(0);
    return out;
}

Rat hs_probability(const DownRightPath& gamma, const HsParams& p,
                   const std::vector<Partition>& seq) {
    return hs_weight(gamma, p, seq).probability;
}

Rat normalization_defect(const DownRightPath& gamma, const FsParams& p, int cap) {
    Rat total = 0;
    enumerate_sequences(gamma, cap, [&](const std::vector<Partition>& seq) {
        total += fs_probability(gamma, p, seq);
    });
    return 1 - total;
}

Rat normalization_defect(const DownRightPath& gamma, const HsParams& p, int cap) {
    Rat total = 0;
    enumerate_sequences(gamma, cap, [&](const std::vector<Partition>& seq) {
        total += hs_probability(gamma, p, seq);
    });
    return 1 - total;
}

} // namespace schurlpp
