#include "schurlpp/greene.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "schurlpp/path.hpp"

namespace schurlpp {

long long chain_weight(const WeightMatrix& a, const std::vector<Cell>& chain) {
    long long s = 0;
    for (const Cell& c : chain) s += a.at_or_zero(c.col, c.row);
    return s;
}

namespace {

// All strictly increasing k-tuples in [1..n], lex order.
std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

long long brute_g(const WeightMatrix& a, int k, long long budget) {
    if (k < 1) throw InputError("brute_g: k must be positive");
    int m = a.cols();
    int n = a.rows();
    // More paths than the grid can hold disjointly: the value is the total
    // mass by convention.
    if (k > std::min(m, n)) return a.total();

    // Size the DP before materializing it: C(n, k) profiles and a quadratic
    // transition scan per column. The running product below is itself a
    // binomial at every step, so the division stays exact.
    long long profiles = 1;
    for (int i = 1; i <= k; ++i) {
        __int128 next = static_cast<__int128>(profiles) * (n - k + i) / i;
        if (next > budget) throw BudgetError("brute_g: state budget exceeded");
        profiles = static_cast<long long>(next);
    }
    if (static_cast<__int128>(profiles) * profiles * m > budget)
        throw BudgetError("brute_g: state budget exceeded");

    auto states = increasing_tuples(n, k);

    // Column prefix sums: csum[c][r] = sum of column c rows 1..r.
    std::vector<std::vector<long long>> csum(static_cast<size_t>(m) + 1,
                                             std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (int c = 1; c <= m; ++c)
        for (int r = 1; r <= n; ++r)
            csum[static_cast<size_t>(c)][static_cast<size_t>(r)] =
                csum[static_cast<size_t>(c)][static_cast<size_t>(r) - 1] + a.at(c, r);

    const long long NEG = LLONG_MIN / 4;
    // dp[s] = best weight with the k paths ending at rows states[s] in the
    // current column. Path i enters column 1 at row i.
    std::vector<int> entry(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) entry[static_cast<size_t>(i)] = i + 1;

    std::vector<long long> dp(states.size(), NEG);
    for (size_t s = 0; s < states.size(); ++s)
        if (states[s] == entry) dp[s] = 0;

    for (int c = 1; c <= m; ++c) {
        std::vector<long long> next(states.size(), NEG);
        for (size_t u = 0; u < states.size(); ++u) {
            if (dp[u] == NEG) continue;
            const auto& from = states[u];
            for (size_t t = 0; t < states.size(); ++t) {
                const auto& to = states[t];
                // In column c path i occupies rows [from_i, to_i]; the
                // intervals must be disjoint, i.e. to_i < from_{i+1}.
                bool ok = true;
                long long gain = 0;
                for (int i = 0; i < k && ok; ++i) {
                    if (to[static_cast<size_t>(i)] < from[static_cast<size_t>(i)]) ok = false;
                    else if (i + 1 < k && to[static_cast<size_t>(i)] >= from[static_cast<size_t>(i) + 1]) ok = false;
                    else
                        gain += csum[static_cast<size_t>(c)][static_cast<size_t>(to[static_cast<size_t>(i)])] -
                                csum[static_cast<size_t>(c)][static_cast<size_t>(from[static_cast<size_t>(i)]) - 1];
                }
                if (ok) next[t] = std::max(next[t], dp[u] + gain);
            }
        }
        dp = std::move(next);
    }

    std::vector<int> exit_rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) exit_rows[static_cast<size_t>(i)] = n - k + i + 1;
    for (size_t s = 0; s < states.size(); ++s)
        if (states[s] == exit_rows) return dp[s];
    throw InternalError("brute_g: exit state missing");
}

namespace {

// Shared engine for brute_h / brute_h_witness. Cells are visited in lex
// (col, row) order; a chain is legal iff the rows of its members are weakly
// increasing in that order, so the row of the last member is a full summary.
struct HSearch {
    const WeightMatrix& a;
    int k;
    std::vector<Cell> cells;
    long long nstates = 1;
    std::vector<long long> memo; // (cells+1) x nstates

    HSearch(const WeightMatrix& a_, int k_, long long budget) : a(a_), k(k_) {
        int m = a.cols(), n = a.rows();
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) cells.push_back({i, j});
        for (int c = 0; c < k; ++c) {
            nstates *= (n + 1);
            if (nstates * static_cast<long long>(cells.size() + 1) > budget)
                throw BudgetError("brute_h: state budget exceeded");
        }
        memo.assign(static_cast<size_t>(nstates) * (cells.size() + 1), -1);
        // Base row: after the last cell nothing more can be gained.
        for (long long s = 0; s < nstates; ++s)
            memo[static_cast<size_t>(cells.size()) * static_cast<size_t>(nstates) + static_cast<size_t>(s)] = 0;
        for (int t = static_cast<int>(cells.size()) - 1; t >= 0; --t)
            for (long long s = 0; s < nstates; ++s)
                solve(t, s);
    }

    long long& slot(int t, long long s) {
        return memo[static_cast<size_t>(t) * static_cast<size_t>(nstates) + static_cast<size_t>(s)];
    }

    int state_digit(long long s, int c) const {
        int n1 = a.rows() + 1;
        for (int i = 0; i < c; ++i) s /= n1;
        return static_cast<int>(s % n1);
    }

    void solve(int t, long long s) {
        const Cell& cell = cells[static_cast<size_t>(t)];
        long long best = slot(t + 1, s); // leave the cell unused
        int n1 = a.rows() + 1;
        long long stride = 1;
        for (int c = 0; c < k; ++c) {
            int last = state_digit(s, c);
            if (last <= cell.row) {
                long long s2 = s + (cell.row - last) * stride;
                best = std::max(best, a.at(cell.col, cell.row) + slot(t + 1, s2));
            }
            stride *= n1;
        }
        slot(t, s) = best;
    }

    long long value() const {
        return memo[0];
    }

    std::vector<std::vector<Cell>> witness() {
        std::vector<std::vector<Cell>> chains(static_cast<size_t>(k));
        long long s = 0;
        for (int t = 0; t < static_cast<int>(cells.size()); ++t) {
            const Cell& cell = cells[static_cast<size_t>(t)];
            long long want = slot(t, s);
            if (slot(t + 1, s) == want) continue; // skipping is optimal
            int n1 = a.rows() + 1;
            long long stride = 1;
            bool placed = false;
            for (int c = 0; c < k && !placed; ++c) {
                int last = state_digit(s, c);
                if (last <= cell.row) {
                    long long s2 = s + (cell.row - last) * stride;
                    if (a.at(cell.col, cell.row) + slot(t + 1, s2) == want) {
                        chains[static_cast<size_t>(c)].push_back(cell);
                        s = s2;
                        placed = true;
                    }
                }
                stride *= n1;
            }
            if (!placed) throw InternalError("brute_h: witness reconstruction failed");
        }
        return chains;
    }
};

std::vector<std::vector<Cell>> cover_by_lines(const WeightMatrix& a, int k) {
    // k >= min(cols, rows): rows (or columns) of the support cover every cell.
    std::vector<std::vector<Cell>> chains(static_cast<size_t>(k));
    if (a.rows() <= a.cols()) {
        for (int j = 1; j <= a.rows(); ++j)
            for (int i = 1; i <= a.cols(); ++i) chains[static_cast<size_t>(j) - 1].push_back({i, j});
    } else {
        for (int i = 1; i <= a.cols(); ++i)
            for (int j = 1; j <= a.rows(); ++j) chains[static_cast<size_t>(i) - 1].push_back({i, j});
    }
    return chains;
}

} // namespace

long long brute_h(const WeightMatrix& a, int k, long long budget) {
    if (k < 1) throw InputError("brute_h: k must be positive");
    if (a.cols() == 0 || a.rows() == 0) return 0;
    if (k >= std::min(a.cols(), a.rows())) return a.total();
    return HSearch(a, k, budget).value();
}

std::pair<long long, std::vector<std::vector<Cell>>> brute_h_witness(const WeightMatrix& a,
                                                                     int k, long long budget) {
    if (k < 1) throw InputError("brute_h: k must be positive");
    if (a.cols() == 0 || a.rows() == 0)
        return {0, std::vector<std::vector<Cell>>(static_cast<size_t>(k))};
    if (k >= std::min(a.cols(), a.rows())) return {a.total(), cover_by_lines(a, k)};
    HSearch hs(a, k, budget);
    return {hs.value(), hs.witness()};
}

bool is_chain_set(const std::vector<Cell>& cells) {
    std::vector<Cell> s = cells;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) return false;
        if (s[i + 1].row < s[i].row) return false;
    }
    return true;
}

namespace {

// Longest antichain of the componentwise order. Sorted by column with ties
// broken by descending row, an antichain is exactly a subsequence whose
// columns strictly increase while the rows strictly decrease.
int max_antichain(std::vector<Cell> s) {
    std::sort(s.begin(), s.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col < b.col;
        return a.row > b.row;
    });
    int best = 0;
    std::vector<int> len(s.size(), 1);
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (s[j].col < s[i].col && s[j].row > s[i].row)
                len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, len[i]);
    }
    return best;
}

bool kuhn_augment(int u, const std::vector<std::vector<int>>& succ,
                  std::vector<int>& match_from, std::vector<int>& match_to,
                  std::vector<char>& seen) {
    for (int w : succ[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (match_to[w] < 0 ||
            kuhn_augment(match_to[w], succ, match_from, match_to, seen)) {
            match_from[u] = w;
            match_to[w] = u;
            return true;
        }
    }
    return false;
}

// Fewest disjoint chain sets covering the cells, built from a maximum
// matching on the comparability graph: every unmatched-on-the-left cell
// starts a chain and matched edges link each cell to its successor. The
// number of chains equals the longest antichain.
std::vector<std::vector<Cell>> chain_partition(const std::set<Cell>& cells) {
    std::vector<Cell> v(cells.begin(), cells.end());
    int n = static_cast<int>(v.size());
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[i].col <= v[j].col && v[i].row <= v[j].row) succ[i].push_back(j);
    std::vector<int> match_from(n, -1);
    std::vector<int> match_to(n, -1);
    std::vector<char> seen;
    for (int u = 0; u < n; ++u) {
        seen.assign(n, 0);
        kuhn_augment(u, succ, match_from, match_to, seen);
    }
    std::vector<std::vector<Cell>> chains;
    for (int u = 0; u < n; ++u) {
        if (match_to[u] >= 0) continue;
        std::vector<Cell> ch;
        for (int w = u; w >= 0; w = match_from[w]) ch.push_back(v[w]);
        chains.push_back(std::move(ch));
    }
    return chains;
}

} // namespace

std::vector<std::vector<Cell>> greedy_maximalize(std::vector<std::vector<Cell>> family,
                                                 int cols, int rows) {
    std::set<Cell> used;
    for (auto& ch : family) {
        if (!is_chain_set(ch)) throw InputError("greedy_maximalize: not a chain set");
        for (const Cell& c : ch) {
            if (c.col < 1 || c.row < 1 || c.col > cols || c.row > rows)
                throw InputError("greedy_maximalize: cell outside the grid");
            if (!used.insert(c).second)
                throw InputError("greedy_maximalize: chains overlap");
        }
    }
    int k = static_cast<int>(family.size());
    // Grow the union rather than the individual chains: a cell joins whenever
    // the enlarged set still splits into k chains, i.e. its longest antichain
    // stays at most k. A rejection is final -- the blocking antichain only
    // ever gains company -- so a single sweep lands on a maximal union.
    std::vector<Cell> pool(used.begin(), used.end());
    for (int i = 1; i <= cols; ++i)
        for (int j = 1; j <= rows; ++j) {
            Cell c{i, j};
            if (used.count(c)) continue;
            pool.push_back(c);
            if (max_antichain(pool) <= k)
                used.insert(c);
            else
                pool.pop_back();
        }
    auto chains = chain_partition(used);
    if (static_cast<int>(chains.size()) > k)
        throw InternalError("greedy_maximalize: chain cover exceeded the family size");
    chains.resize(k);
    return chains;
}

bool check_offdiag(const std::vector<std::vector<Cell>>& family, int cols, int rows,
                   int k) {
    if (k < 1 || k > std::min(cols, rows))
        throw InputError("check_offdiag: need 1 <= k <= min(cols, rows)");
    std::set<Cell> cells;
    for (const auto& ch : family) cells.insert(ch.begin(), ch.end());
    for (int j = 1; j <= k; ++j) {
        if (!cells.count({j, k - j + 1})) return false;
        if (!cells.count({cols - j + 1, rows - k + j})) return false;
    }
    return true;
}

bool is_diagram_chain(const std::vector<Cell>& cells) {
    std::vector<Cell> s = cells;
    std::sort(s.begin(), s.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col < b.col;
        return a.row > b.row;
    });
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) return false;
        if (s[i + 1].row > s[i].row) return false;
    }
    return true;
}

std::vector<Cell> flip_rows(const std::vector<Cell>& cells, int rows) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (const Cell& c : cells) {
        if (c.row < 1 || c.row > rows)
            throw InputError("flip_rows: row outside the frame");
        out.push_back({c.col, rows + 1 - c.row});
    }
    return out;
}

std::pair<std::vector<Cell>, std::vector<Cell>> twist(const std::vector<Cell>& chi1,
                                                      const std::vector<Cell>& chi2) {
    if (!is_diagram_chain(chi1) || !is_diagram_chain(chi2))
        throw InputError("twist: arguments must be diagram chains");
    std::set<Cell> union_cells(chi1.begin(), chi1.end());
    for (const Cell& c : chi2)
        if (!union_cells.insert(c).second)
            throw InputError("twist: chains must be disjoint");

    Partition big = part_max(min_diagram_containing(chi1), min_diagram_containing(chi2));
    Partition small = part_min(min_diagram_containing(chi1), min_diagram_containing(chi2));
    auto bb = boundary_cells(big);
    std::set<Cell> big_boundary(bb.begin(), bb.end());

    std::vector<Cell> out1, out2;
    for (const Cell& c : union_cells)
        (big_boundary.count(c) ? out1 : out2).push_back(c);

    // The split is guaranteed to satisfy the rewiring contract; failures here
    // mean the boundary or min/max code is broken, so check them.
    auto sb = boundary_cells(small);
    std::set<Cell> small_boundary(sb.begin(), sb.end());
    Partition big_interior = interior(big);
    for (const Cell& c : out2) {
        if (!small_boundary.count(c))
            throw InternalError("twist: leftover cell misses the small boundary");
        if (!big_interior.contains_cell(c))
            throw InternalError("twist: leftover cell not interior");
    }
    if (min_diagram_containing(out1) != big)
        throw InternalError("twist: first chain does not span the union shape");
    if (!is_diagram_chain(out1) || !is_diagram_chain(out2))
        throw InternalError("twist: output is not a chain");
    return {std::move(out1), std::move(out2)};
}

std::vector<Partition> layers_decompose(std::vector<std::vector<Cell>> chains,
                                        const Partition& lambda) {
    std::set<Cell> seen;
    for (const auto& ch : chains) {
        if (!is_diagram_chain(ch)) throw InputError("layers_decompose: not a diagram chain");
        for (const Cell& c : ch) {
            if (!lambda.contains_cell(c))
                throw InputError("layers_decompose: chain leaves lambda");
            if (!seen.insert(c).second)
                throw InputError("layers_decompose: chains must be disjoint");
        }
    }

    int k = static_cast<int>(chains.size());
    std::vector<Partition> out(static_cast<size_t>(k));
    Partition ambient = lambda;
    for (int level = k; level >= 1; --level) {
        if (level < k) {
            // The remaining chains must have sunk into the current ambient
            // region when the previous layer was cut off.
            for (int idx = 0; idx < level; ++idx)
                for (const Cell& c : chains[static_cast<size_t>(idx)])
                    if (!ambient.contains_cell(c))
                        throw InternalError("layers_decompose: chain escapes ambient");
        }
        for (int low = 0; low + 1 < level; ++low) {
            auto [primary, leftover] = twist(chains[static_cast<size_t>(level) - 1],
                                             chains[static_cast<size_t>(low)]);
            chains[static_cast<size_t>(level) - 1] = std::move(primary);
            chains[static_cast<size_t>(low)] = std::move(leftover);
        }
        Partition shape = min_diagram_containing(chains[static_cast<size_t>(level) - 1]);
        if (!ambient.contains(shape))
            throw InternalError("layers_decompose: layer escapes ambient");
        out[static_cast<size_t>(level) - 1] = shape;
        ambient = interior(shape);
    }
    return out;
}

std::vector<std::vector<Cell>> straighten(const std::vector<std::vector<Cell>>& family,
                                          const WeightMatrix& a, int k) {
    int m = a.cols();
    int n = a.rows();
    if (k < 1 || k > std::min(m, n))
        throw InputError("straighten: need 1 <= k <= min(cols, rows)");
    if (static_cast<int>(family.size()) != k)
        throw InputError("straighten: family must have exactly k chains");
    std::set<Cell> used;
    for (const auto& ch : family) {
        if (!is_chain_set(ch)) throw InputError("straighten: not a NE-chain");
        for (const Cell& c : ch) {
            if (c.col < 1 || c.row < 1 || c.col > m || c.row > n)
                throw InputError("straighten: chain leaves the support");
            if (!used.insert(c).second) throw InputError("straighten: chains overlap");
        }
    }
    long long w_in = 0;
    for (const auto& ch : family) w_in += chain_weight(a, ch);

    // Saturate, flip into the diagram picture, and cut the rectangle into
    // nested layers whose boundaries carry all the chain cells.
    auto maximal = greedy_maximalize(family, m, n);
    std::vector<std::vector<Cell>> flipped;
    flipped.reserve(maximal.size());
    for (const auto& ch : maximal) flipped.push_back(flip_rows(ch, n));
    Partition rect((std::vector<int>(static_cast<size_t>(n), m)));
    auto layers = layers_decompose(std::move(flipped), rect);

    std::vector<std::vector<Cell>> out(static_cast<size_t>(k));
    std::set<Cell> taken;
    for (int i = 1; i <= k; ++i) {
        const Partition& li = layers[static_cast<size_t>(i) - 1];
        // A maximal family forces each layer boundary to reach both pinned
        // corners of its level.
        if (li.length() != n - k + i || li.part(1) != m - k + i)
            throw InternalError("straighten: layer endpoints not pinned");
        std::vector<Cell> cells = flip_rows(boundary_cells(li), n);
        std::sort(cells.begin(), cells.end());
        Cell corner{m - k + i, n - i + 1};
        if (!std::count(cells.begin(), cells.end(), corner))
            throw InternalError("straighten: pin corner missing from boundary");
        // Swap the vertical tail above the corner for a horizontal one; over
        // the whole family the dropped and added cell sets coincide.
        std::vector<Cell> path;
        for (const Cell& c : cells)
            if (!(c.col == corner.col && c.row > corner.row)) path.push_back(c);
        for (int col = corner.col + 1; col <= m; ++col) path.push_back({col, corner.row});

        int j = k - i + 1; // pinned start row of this path
        if (path.front() != Cell{1, j} || path.back() != Cell{m, n - k + j})
            throw InternalError("straighten: path endpoints not pinned");
        if (!is_up_right_path(path))
            throw InternalError("straighten: rerouted cells are not a path");
        for (const Cell& c : path)
            if (!taken.insert(c).second)
                throw InternalError("straighten: rerouted paths overlap");
        out[static_cast<size_t>(j) - 1] = std::move(path);
    }

    long long w_out = 0;
    for (const auto& ch : out) w_out += chain_weight(a, ch);
    if (w_out < w_in)
        throw InternalError("straighten: weight decreased");
    return out;
}

} // namespace schurlpp
