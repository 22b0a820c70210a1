#include "schurlpp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "schurlpp/errors.hpp"
#include "schurlpp/greene.hpp"
#include "schurlpp/matrix.hpp"
#include "schurlpp/rng.hpp"

namespace schurlpp {

namespace {

WeightMatrix window_of(const Filling& f, int u, int v) {
    WeightMatrix w(u, v);
    for (int j = 1; j <= v; ++j)
        for (int i = 1; i <= u; ++i) w.set(i, j, f.at(i, j));
    return w;
}

// Re-derives every growth observable along gamma from scratch via brute_g on
// the corresponding window. Any disagreement is a library bug, never a
// statistical fluke, so it throws instead of failing the comparison.
void greene_firewall(const Filling& f, const DownRightPath& gamma,
                     const std::vector<Partition>& seq) {
    for (size_t t = 0; t < seq.size(); ++t) {
        Vertex v = gamma.vertex(static_cast<int>(t));
        if (v.x < 1 || v.y < 1) continue;
        WeightMatrix w = window_of(f, v.x, v.y);
        long long prefix = 0;
        for (int k = 1; k <= std::min(v.x, v.y); ++k) {
            prefix += seq[t].part(k);
            if (prefix != brute_g(w, k))
                throw InternalError("greene_firewall: growth observable disagrees with brute_g");
        }
    }
}

struct CellLaw {
    Cell cell;
    Rat ratio;
    std::vector<Rat> mass; // (1 - q) q^w for w = 0..trunc
    Rat tail;              // q^(trunc+1), the truncated probability mass
};

std::vector<CellLaw> truncated_laws(const std::vector<Cell>& cells, int trunc,
                                    const std::function<Rat(const Cell&)>& ratio_of) {
    std::vector<CellLaw> laws;
    laws.reserve(cells.size());
    for (const Cell& c : cells) {
        CellLaw law;
        law.cell = c;
        law.ratio = ratio_of(c);
        Rat pw = 1;
        for (int w = 0; w <= trunc; ++w) {
            law.mass.push_back((1 - law.ratio) * pw);
            pw *= law.ratio;
        }
        law.tail = pw;
        laws.push_back(std::move(law));
    }
    return laws;
}

void require_enumerable(size_t cells, int trunc, long long budget, const char* who) {
    long long states = 1;
    for (size_t i = 0; i < cells; ++i) {
        states *= trunc + 1;
        if (states > budget)
            throw BudgetError(std::string(who) + ": (trunc+1)^cells exceeds the budget");
    }
}

// Calls fn for every assignment of 0..trunc to the slots of w.
void for_each_assignment(std::vector<int>& w, int trunc, const std::function<void()>& fn) {
    for (;;) {
        fn();
        size_t i = 0;
        while (i < w.size() && w[i] == trunc) {
            w[i] = 0;
            ++i;
        }
        if (i == w.size()) return;
        ++w[i];
    }
}

void finalize_exact(ExactReport& r, std::map<std::vector<Partition>, Rat>& lhs,
                    const std::function<Rat(const std::vector<Partition>&)>& rhs_of) {
    Rat sum_abs = 0;
    for (auto& [seq, mass] : lhs) {
        SupportRow row;
        row.seq = seq;
        row.lhs = mass;
        row.rhs = rhs_of(seq);
        r.lhs_total += row.lhs;
        r.rhs_total += row.rhs;
        sum_abs += abs(row.lhs - row.rhs);
        r.support.push_back(std::move(row));
    }
    // Both sides are sub-probability vectors; complete each with an implicit
    // overflow state so the comparison is between genuine distributions.
    r.tv = (sum_abs + abs(r.lhs_total - r.rhs_total)) / 2;
    r.pass = r.tv <= r.bound;
}

} // namespace

ExactReport exact_compare_full(const DownRightPath& gamma, const FsParams& p, int trunc,
                               long long budget) {
    if (trunc < 0) throw InputError("exact_compare_full: trunc must be >= 0");
    if (!spans_quadrant(gamma))
        throw InputError("exact_compare_full: path must run from (0, N) to (M, 0)");
    p.require_window(gamma.end().x, gamma.start().y);

    Partition shape = shape_of(gamma);
    std::vector<Cell> cells = shape.cells();
    require_enumerable(cells.size(), trunc, budget, "exact_compare_full");
    auto laws = truncated_laws(cells, trunc, [&](const Cell& c) { return p.q(c.col, c.row); });

    ExactReport r;
    r.side = "full";
    r.path = gamma;
    r.trunc = trunc;
    for (const CellLaw& law : laws) r.bound += law.tail;

    std::map<std::vector<Partition>, Rat> lhs;
    std::vector<int> w(cells.size(), 0);
    for_each_assignment(w, trunc, [&] {
        Filling f(shape, w);
        std::vector<Partition> seq = rsk_map(f, gamma);
        greene_firewall(f, gamma, seq);
        Rat mass = 1;
        for (size_t i = 0; i < w.size(); ++i) mass *= laws[i].mass[static_cast<size_t>(w[i])];
        lhs[seq] += mass;
        ++r.assignments;
    });
    r.greene_checked = true;

    finalize_exact(r, lhs,
                   [&](const std::vector<Partition>& seq) { return fs_probability(gamma, p, seq); });
    return r;
}

ExactReport exact_compare_half(const DownRightPath& gamma, const HsParams& p, int trunc,
                               long long budget) {
    if (trunc < 0) throw InputError("exact_compare_half: trunc must be >= 0");
    if (!spans_half_quadrant(gamma))
        throw InputError("exact_compare_half: path must run from (N, N) to (M+N, 0)");
    p.require_window(gamma.end().x);

    // Free cells are the diagonal and below-diagonal cells certified by the
    // path; the mirrored upper cells are forced by symmetry.
    Partition sym = symmetrized_shape(gamma);
    std::vector<Cell> sym_cells = sym.cells();
    std::vector<Cell> free_cells = path_shape_cells(gamma);
    require_enumerable(free_cells.size(), trunc, budget, "exact_compare_half");
    auto laws = truncated_laws(free_cells, trunc, [&](const Cell& c) { return p.q(c.col, c.row); });

    std::map<Cell, size_t> slot;
    for (size_t i = 0; i < free_cells.size(); ++i) slot[free_cells[i]] = i;

    ExactReport r;
    r.side = "half";
    r.path = gamma;
    r.trunc = trunc;
    for (const CellLaw& law : laws) r.bound += law.tail;

    std::map<std::vector<Partition>, Rat> lhs;
    std::vector<int> w(free_cells.size(), 0);
    for_each_assignment(w, trunc, [&] {
        std::vector<int> values;
        values.reserve(sym_cells.size());
        for (const Cell& c : sym_cells) {
            Cell lower{std::max(c.col, c.row), std::min(c.col, c.row)};
            auto it = slot.find(lower);
            if (it == slot.end())
                throw InternalError("exact_compare_half: symmetrized cell has no source cell");
            values.push_back(w[it->second]);
        }
        Filling f(sym, values);
        std::vector<Partition> seq = sequence_along(grow(f), gamma);
        greene_firewall(f, gamma, seq);
        Rat mass = 1;
        for (size_t i = 0; i < w.size(); ++i) mass *= laws[i].mass[static_cast<size_t>(w[i])];
        lhs[seq] += mass;
        ++r.assignments;
    });
    r.greene_checked = true;

    finalize_exact(r, lhs,
                   [&](const std::vector<Partition>& seq) { return hs_probability(gamma, p, seq); });
    return r;
}

int effective_workers(int requested) {
    int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    if (const char* env = std::getenv("LPP_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) w = std::min(w, cap);
    }
    return w;
}

namespace {

McReport mc_core(std::string side, const DownRightPath& gamma, long long samples, uint64_t seed,
                 int cap, int workers,
                 const std::function<std::vector<Partition>(uint64_t)>& draw,
                 const std::function<Rat(const std::vector<Partition>&)>& rhs_of) {
    if (samples <= 0) throw InputError("mc_compare: samples must be positive");
    if (cap < 0) throw InputError("mc_compare: cap must be >= 0");

    std::vector<std::vector<Partition>> seqs = enumerate_sequences(gamma, cap);
    std::map<std::vector<Partition>, size_t> index;
    for (size_t i = 0; i < seqs.size(); ++i) index[seqs[i]] = i;
    const size_t S = seqs.size();

    McReport r;
    r.side = std::move(side);
    r.path = gamma;
    r.samples = samples;
    r.cap = cap;
    r.seed = seed;
    r.workers = effective_workers(workers);
    r.support_size = static_cast<long long>(S);

    // counts[S] is the overflow bin: any sample with a part beyond the cap.
    std::vector<long long> counts(S + 1, 0);
    auto run_range = [&](long long lo, long long hi, std::vector<long long>& local) {
        for (long long rep = lo; rep < hi; ++rep) {
            std::vector<Partition> seq = draw(static_cast<uint64_t>(rep));
            bool over = false;
            for (const Partition& lam : seq)
                if (lam.part(1) > cap) {
                    over = true;
                    break;
                }
            if (over) {
                ++local[S];
                continue;
            }
            auto it = index.find(seq);
            if (it == index.end())
                throw InternalError("mc_compare: sampled sequence missing from the support");
            ++local[it->second];
        }
    };

    if (r.workers <= 1) {
        run_range(0, samples, counts);
    } else {
        std::vector<std::vector<long long>> local(
            static_cast<size_t>(r.workers), std::vector<long long>(S + 1, 0));
        std::vector<std::exception_ptr> errors(static_cast<size_t>(r.workers));
        std::vector<std::thread> pool;
        for (int t = 0; t < r.workers; ++t) {
            long long lo = samples * t / r.workers;
            long long hi = samples * (t + 1) / r.workers;
            pool.emplace_back([&, t, lo, hi] {
                try {
                    run_range(lo, hi, local[static_cast<size_t>(t)]);
                } catch (...) {
                    errors[static_cast<size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& l : local)
            for (size_t i = 0; i <= S; ++i) counts[i] += l[i];
    }

    r.overflow_count = counts[S];
    Rat rhs_sum = 0;
    double sum_abs = 0;
    const double n = static_cast<double>(samples);
    for (size_t i = 0; i < S; ++i) {
        McRow row;
        row.seq = seqs[i];
        row.count = counts[i];
        row.rhs = rhs_of(seqs[i]);
        rhs_sum += row.rhs;
        sum_abs += std::abs(static_cast<double>(counts[i]) / n - to_double(row.rhs));
        r.support.push_back(std::move(row));
    }
    sum_abs += std::abs(static_cast<double>(r.overflow_count) / n - to_double(Rat(1 - rhs_sum)));
    r.tv = sum_abs / 2;
    r.tolerance = 3.0 * std::sqrt(static_cast<double>(S) / n);
    r.pass = r.tv <= r.tolerance;
    return r;
}

} // namespace

McReport mc_compare_full(const DownRightPath& gamma, const FsParams& p, long long samples,
                         uint64_t seed, int cap, int workers) {
    if (!spans_quadrant(gamma))
        throw InputError("mc_compare_full: path must run from (0, N) to (M, 0)");
    const int cols = gamma.end().x;
    const int rows = gamma.start().y;
    p.require_window(cols, rows);
    return mc_core(
        "full", gamma, samples, seed, cap, workers,
        [&, cols, rows](uint64_t rep) {
            WeightMatrix w = sample_full(p, cols, rows, seed, rep);
            return observe(w, gamma).lambdas;
        },
        [&](const std::vector<Partition>& seq) { return fs_probability(gamma, p, seq); });
}

McReport mc_compare_half(const DownRightPath& gamma, const HsParams& p, long long samples,
                         uint64_t seed, int cap, int workers) {
    if (!spans_half_quadrant(gamma))
        throw InputError("mc_compare_half: path must run from (N, N) to (M+N, 0)");
    const int size = gamma.end().x;
    p.require_window(size);
    return mc_core(
        "half", gamma, samples, seed, cap, workers,
        [&, size](uint64_t rep) {
            WeightMatrix w = sample_half(p, size, seed, rep);
            return observe(w, gamma).lambdas;
        },
        [&](const std::vector<Partition>& seq) { return hs_probability(gamma, p, seq); });
}

namespace {

struct FuzzRng {
    uint64_t state;
    explicit FuzzRng(uint64_t seed) : state(splitmix64(seed)) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return splitmix64(state);
    }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

std::string matrix_dump(const WeightMatrix& w) {
    std::ostringstream os;
    os << w.cols() << "x" << w.rows() << " [";
    for (int j = 1; j <= w.rows(); ++j)
        for (int i = 1; i <= w.cols(); ++i) os << (i == 1 && j == 1 ? "" : " ") << w.at(i, j);
    os << "]";
    return os.str();
}

std::string case_dump(const DownRightPath& gamma, const Filling& f) {
    std::ostringstream os;
    os << "path (" << gamma.start().x << "," << gamma.start().y << ")+" << gamma.word()
       << " values [";
    for (size_t i = 0; i < f.values.size(); ++i) os << (i ? " " : "") << f.values[i];
    os << "]";
    return os.str();
}

Partition random_partition(FuzzRng& g, int max_len, int max_part) {
    int len = g.below(max_len + 1);
    std::vector<int> parts;
    int cur = max_part;
    for (int i = 0; i < len && cur >= 1; ++i) {
        cur = 1 + g.below(cur);
        parts.push_back(cur);
    }
    return Partition(parts);
}

DownRightPath random_spanning_path(FuzzRng& g, int max_steps) {
    int n = g.below(max_steps + 1);
    std::string word;
    int downs = 0;
    for (int i = 0; i < n; ++i) {
        bool d = g.below(2) == 1;
        word.push_back(d ? 'D' : 'R');
        downs += d ? 1 : 0;
    }
    return DownRightPath({0, downs}, word);
}

WeightMatrix random_matrix(FuzzRng& g, int cols, int rows, int vmax) {
    WeightMatrix w(cols, rows);
    for (int j = 1; j <= rows; ++j)
        for (int i = 1; i <= cols; ++i) w.set(i, j, g.below(vmax + 1));
    return w;
}

Filling random_filling(FuzzRng& g, const Partition& shape, int vmax) {
    std::vector<int> values(static_cast<size_t>(shape.weight()));
    for (int& v : values) v = g.below(vmax + 1);
    return Filling(shape, values);
}

std::vector<Cell> random_diagram_chain(FuzzRng& g, int cols, int rows, int max_cells) {
    std::vector<Cell> out;
    int col = 1 + g.below(2);
    int row = 1 + g.below(rows);
    int want = g.below(max_cells + 1);
    int attempts = 0;
    while (static_cast<int>(out.size()) < want && col <= cols && row >= 1 && ++attempts <= 64) {
        if (out.empty() || !(out.back().col == col && out.back().row == row))
            out.push_back({col, row});
        col += g.below(3);
        row -= g.below(3);
    }
    return out;
}

std::optional<std::string> prop_rsk_roundtrip(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        DownRightPath gamma = random_spanning_path(g, 8);
        Filling f = random_filling(g, shape_of(gamma), 3);
        std::vector<Partition> seq = rsk_map(f, gamma);
        Filling back = rsk_inverse(seq, gamma);
        if (!(back.shape == f.shape) || back.values != f.values)
            return "inverse does not return the filling: " + case_dump(gamma, f);
    }
    return std::nullopt;
}

std::optional<std::string> prop_window_locality(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        DownRightPath gamma = random_spanning_path(g, 7);
        Partition shape = shape_of(gamma);
        int cols = gamma.end().x;
        int rows = gamma.start().y;
        WeightMatrix a = random_matrix(g, cols, rows, 3);
        WeightMatrix b = a;
        for (int j = 1; j <= rows; ++j)
            for (int i = 1; i <= cols; ++i)
                if (!shape.contains_cell({i, j})) b.set(i, j, g.below(4));
        if (observe(a, gamma).lambdas != observe(b, gamma).lambdas)
            return "cells outside the path shape changed the observables: path (0," +
                   std::to_string(rows) + ")+" + gamma.word() + " on " + matrix_dump(a);
    }
    return std::nullopt;
}

std::optional<std::string> prop_order_independence(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        Partition shape = random_partition(g, 5, 5);
        Filling f = random_filling(g, shape, 3);
        GrowthTable a = grow(f);
        GrowthTable b(shape);
        for (int i = 1; i <= shape.part(1); ++i)
            for (int j = 1; j <= shape.length() && shape.part(j) >= i; ++j)
                b.set_entry(i, j,
                            forward_rule(b.entry(i - 1, j - 1), b.entry(i, j - 1),
                                         b.entry(i - 1, j), f.at(i, j)));
        for (int j = 1; j <= shape.length(); ++j)
            for (int i = 1; i <= shape.part(j); ++i)
                if (!(a.entry(i, j) == b.entry(i, j)))
                    return "row-major and column-major growth disagree: " +
                           case_dump(boundary_path(shape, shape.part(1), shape.length()), f);
    }
    return std::nullopt;
}

std::optional<std::string> prop_symmetric_table(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        int n = 1 + g.below(4);
        WeightMatrix a(n, n);
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= j; ++i) {
                int v = g.below(4);
                a.set(i, j, v);
                a.set(j, i, v);
            }
        GrowthTable table = grow_rectangle(a);
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (!(table.entry(u, v) == table.entry(v, u)))
                    return "symmetric input broke table symmetry: " + matrix_dump(a);
    }
    return std::nullopt;
}

std::optional<std::string> prop_mass_conservation(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        int m = 1 + g.below(4);
        int n = 1 + g.below(4);
        WeightMatrix a = random_matrix(g, m, n, 4);
        GrowthTable table = grow_rectangle(a);
        for (int u = 1; u <= m; ++u)
            for (int v = 1; v <= n; ++v) {
                long long win = 0;
                for (int j = 1; j <= v; ++j)
                    for (int i = 1; i <= u; ++i) win += a.at(i, j);
                if (table.entry(u, v).weight() != win)
                    return "entry weight differs from window mass: " + matrix_dump(a);
            }
    }
    return std::nullopt;
}

std::optional<std::string> prop_concave_transpose(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        int m = 1 + g.below(4);
        int n = 1 + g.below(4);
        WeightMatrix a = random_matrix(g, m, n, 3);
        WeightMatrix at = a.transposed();
        long long prev_inc = -1;
        long long prev = 0;
        for (int k = 1; k <= std::min(m, n); ++k) {
            long long gk = brute_g(a, k);
            if (gk != brute_g(at, k)) return "paths value not transpose-invariant: " + matrix_dump(a);
            if (brute_h(a, k) != brute_h(at, k))
                return "chains value not transpose-invariant: " + matrix_dump(a);
            long long inc = gk - prev;
            if (prev_inc >= 0 && inc > prev_inc)
                return "paths value not concave in k: " + matrix_dump(a);
            prev_inc = inc;
            prev = gk;
        }
    }
    return std::nullopt;
}

std::optional<std::string> prop_twist_union(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        std::vector<Cell> chi1 = random_diagram_chain(g, 5, 5, 4);
        std::vector<Cell> chi2;
        for (const Cell& c : random_diagram_chain(g, 5, 5, 4))
            if (std::find(chi1.begin(), chi1.end(), c) == chi1.end()) chi2.push_back(c);
        auto [out1, out2] = twist(chi1, chi2);
        std::vector<Cell> before(chi1);
        before.insert(before.end(), chi2.begin(), chi2.end());
        std::vector<Cell> after(out1);
        after.insert(after.end(), out2.begin(), out2.end());
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        if (before != after) return "twist changed the union of cells (trial " + std::to_string(t) + ")";
        std::vector<Cell> all(before);
        if (!(min_diagram_containing(out1) == min_diagram_containing(all)))
            return "first twisted chain does not span the united shape (trial " +
                   std::to_string(t) + ")";
    }
    return std::nullopt;
}

std::optional<std::string> prop_sequence_pattern(uint64_t seed, long long trials) {
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        DownRightPath gamma = random_spanning_path(g, 8);
        Filling f = random_filling(g, shape_of(gamma), 3);
        std::vector<Partition> seq = rsk_map(f, gamma);
        if (!seq.front().empty() || !seq.back().empty())
            return "sequence endpoints not empty: " + case_dump(gamma, f);
        for (int i = 1; i <= gamma.steps(); ++i) {
            size_t s = static_cast<size_t>(i);
            bool ok = gamma.letter(i) == 'R' ? interlaces(seq[s], seq[s - 1])
                                             : interlaces(seq[s - 1], seq[s]);
            if (!ok) return "consecutive entries do not interlace: " + case_dump(gamma, f);
            Vertex v = gamma.vertex(i);
            if (seq[s].length() > std::min(v.x, v.y))
                return "entry longer than its window allows: " + case_dump(gamma, f);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> check_greene_consistency(uint64_t seed, long long trials,
                                                    const LocalRule& rule) {
    static const std::pair<int, int> sizes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1},
                                                {1, 3}, {3, 2}, {2, 3}, {3, 3}, {4, 2},
                                                {2, 4}, {4, 3}, {3, 4}, {4, 4}};
    const long long nsizes = static_cast<long long>(std::size(sizes));
    FuzzRng g(seed);
    for (long long t = 0; t < trials; ++t) {
        auto [m, n] = sizes[static_cast<size_t>(t % nsizes)];
        int vmax = 1 + static_cast<int>((t / nsizes) % 3);
        WeightMatrix a = random_matrix(g, m, n, vmax);
        try {
            std::vector<std::vector<Partition>> lab(static_cast<size_t>(m) + 1,
                                                    std::vector<Partition>(static_cast<size_t>(n) + 1));
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= m; ++i)
                    lab[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        rule(lab[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1],
                             lab[static_cast<size_t>(i)][static_cast<size_t>(j) - 1],
                             lab[static_cast<size_t>(i) - 1][static_cast<size_t>(j)], a.at(i, j));
            const Partition& lam = lab[static_cast<size_t>(m)][static_cast<size_t>(n)];
            long long prefix = 0;
            for (int k = 1; k <= std::min(m, n); ++k) {
                prefix += lam.part(k);
                long long gk = brute_g(a, k);
                long long hk = brute_h(a, k);
                if (prefix != gk || prefix != hk) {
                    std::ostringstream os;
                    os << "corner prefix sums disagree on " << matrix_dump(a) << ": k=" << k
                       << " growth=" << prefix << " paths=" << gk << " chains=" << hk;
                    return os.str();
                }
            }
        } catch (const std::exception& e) {
            return "rule failed on " + matrix_dump(a) + ": " + e.what();
        }
    }
    return std::nullopt;
}

std::vector<FuzzResult> run_fuzz(uint64_t seed, long long budget) {
    struct Prop {
        const char* name;
        std::function<std::optional<std::string>(uint64_t, long long)> run;
    };
    const std::vector<Prop> props = {
        {"rsk-roundtrip", prop_rsk_roundtrip},
        {"greene-growth",
         [](uint64_t s, long long n) { return check_greene_consistency(s, n, forward_rule); }},
        {"window-locality", prop_window_locality},
        {"order-independence", prop_order_independence},
        {"symmetric-table", prop_symmetric_table},
        {"mass-conservation", prop_mass_conservation},
        {"concave-transpose", prop_concave_transpose},
        {"twist-union", prop_twist_union},
        {"sequence-pattern", prop_sequence_pattern},
    };

    std::vector<FuzzResult> out;
    if (budget <= 0) return out;
    const long long count = static_cast<long long>(props.size());
    for (size_t i = 0; i < props.size(); ++i) {
        long long trials = budget / count + (static_cast<long long>(i) < budget % count ? 1 : 0);
        if (trials == 0) continue;
        FuzzResult res;
        res.name = props[i].name;
        res.trials = trials;
        auto bad = props[i].run(splitmix64(seed ^ (0x5bf03635u + 977 * i)), trials);
        if (bad) {
            res.pass = false;
            res.counterexample = *bad;
        }
        out.push_back(std::move(res));
    }
    return out;
}

bool all_pass(const std::vector<FuzzResult>& results) {
    for (const FuzzResult& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace schurlpp
