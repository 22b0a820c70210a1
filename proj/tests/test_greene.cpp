#include <doctest.h>

#include <algorithm>
#include <set>

#include "schurlpp/errors.hpp"
#include "schurlpp/greene.hpp"
#include "schurlpp/growth.hpp"
#include "schurlpp/partition.hpp"

using namespace schurlpp;

namespace {

std::set<Cell> cell_set(const std::vector<std::vector<Cell>>& family) {
    std::set<Cell> s;
    for (const auto& chain : family) s.insert(chain.begin(), chain.end());
    return s;
}

} // namespace

TEST_CASE("chain weight sums entries with zero extension") {
    WeightMatrix w(2, 2, {1, 3, 2, 4});
    CHECK(chain_weight(w, {{1, 1}, {2, 2}}) == 5);
    CHECK(chain_weight(w, {{5, 5}}) == 0);
    CHECK(chain_weight(w, {}) == 0);
}

TEST_CASE("path optimum on the worked 2x2 window") {
    WeightMatrix w(2, 2, {1, 3, 2, 4});
    CHECK(brute_g(w, 1) == 8); // (1,1)->(2,1)->(2,2): 1+3+4
    CHECK(brute_g(w, 2) == 10);
    CHECK(brute_g(w, 3) == 10); // beyond min(m, n): total mass
    CHECK(brute_h(w, 1) == 8);
    CHECK(brute_h(w, 2) == 10);
    CHECK(brute_h(w, 5) == 10);
    CHECK_THROWS_AS(brute_g(w, 0), InputError);
    CHECK_THROWS_AS(brute_h(w, 0), InputError);
}

TEST_CASE("exhaustive agreement of growth, paths and chains on tiny windows") {
    for (int mask = 0; mask < 81; ++mask) {
        int v = mask;
        WeightMatrix w(2, 2);
        for (int j = 1; j <= 2; ++j)
            for (int i = 1; i <= 2; ++i) {
                w.set(i, j, v % 3);
                v /= 3;
            }
        GrowthTable t = grow_rectangle(w);
        Partition lam = t.entry(2, 2);
        CHECK(lam.part(1) == brute_g(w, 1));
        CHECK(lam.part(1) == brute_h(w, 1));
        CHECK(lam.part(1) + lam.part(2) == brute_g(w, 2));
        CHECK(lam.part(1) + lam.part(2) == brute_h(w, 2));
    }
}

TEST_CASE("budget guards refuse explosive instances") {
    WeightMatrix big(30, 30);
    CHECK_THROWS_AS(brute_g(big, 15, 1000), BudgetError);
    CHECK_THROWS_AS(brute_h(big, 4, 1000), BudgetError);
}

TEST_CASE("witness families attain the chain optimum") {
    WeightMatrix w(3, 3, {4, 0, 1, 0, 3, 0, 2, 0, 5});
    for (int k = 1; k <= 3; ++k) {
        auto [value, family] = brute_h_witness(w, k);
        CHECK(value == brute_h(w, k));
        REQUIRE(static_cast<int>(family.size()) == k);
        long long total = 0;
        std::set<Cell> seen;
        for (const auto& chain : family) {
            CHECK(is_chain_set(chain));
            total += chain_weight(w, chain);
            for (const Cell& c : chain) CHECK(seen.insert(c).second); // disjoint
        }
        CHECK(total == value);
    }
}

TEST_CASE("chain-set predicate wants weakly increasing rows after sorting") {
    CHECK(is_chain_set({}));
    CHECK(is_chain_set({{1, 1}, {2, 1}, {2, 2}}));
    CHECK(is_chain_set({{2, 2}, {1, 1}})); // order of presentation is free
    CHECK(is_chain_set({{1, 1}, {1, 2}}));
    CHECK_FALSE(is_chain_set({{1, 2}, {2, 1}}));
    CHECK_FALSE(is_chain_set({{1, 1}, {1, 1}}));
}

TEST_CASE("greedy maximalization grows to a blocked family") {
    std::vector<std::vector<Cell>> family = {{}};
    auto out = greedy_maximalize(family, 2, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].size() == 3); // a full staircase through the window
    CHECK(is_chain_set(out[0]));
    CHECK(check_offdiag(out, 2, 2, 1));

    // every cell addition must now break the chain or the disjointness
    std::set<Cell> used = cell_set(out);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Cell c{i, j};
            if (used.count(c)) continue;
            std::vector<Cell> grown = out[0];
            grown.push_back(c);
            CHECK_FALSE(is_chain_set(grown));
        }
}

TEST_CASE("greedy maximalization preserves the input cells") {
    std::vector<std::vector<Cell>> family = {{{2, 1}}, {{1, 2}}};
    auto out = greedy_maximalize(family, 3, 3);
    std::set<Cell> used = cell_set(out);
    CHECK(used.count({2, 1}));
    CHECK(used.count({1, 2}));
    std::set<Cell> seen;
    for (const auto& chain : out) {
        CHECK(is_chain_set(chain));
        for (const Cell& c : chain) CHECK(seen.insert(c).second);
    }
}

TEST_CASE("off-diagonal corners of maximal families") {
    // the corner cells for k = 2 in a 3x3 window are
    // (1,2), (2,1) and (2,3), (3,2)
    std::vector<std::vector<Cell>> good = {
        {{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}},
        {{1, 2}, {1, 3}, {2, 3}},
    };
    CHECK(check_offdiag(good, 3, 3, 2));
    std::vector<std::vector<Cell>> bad = {{{1, 1}}, {{3, 3}}};
    CHECK_FALSE(check_offdiag(bad, 3, 3, 2));
    CHECK_THROWS_AS(check_offdiag(good, 3, 3, 4), InputError);
}

TEST_CASE("diagram chains run down-right in diagram coordinates") {
    CHECK(is_diagram_chain({}));
    CHECK(is_diagram_chain({{1, 3}, {2, 2}, {4, 2}, {5, 1}}));
    CHECK(is_diagram_chain({{2, 4}, {2, 2}, {2, 1}})); // vertical runs allowed
    CHECK_FALSE(is_diagram_chain({{1, 1}, {2, 2}}));
    CHECK_FALSE(is_diagram_chain({{1, 1}, {1, 1}}));
}

TEST_CASE("row flips translate between matrix and diagram pictures") {
    std::vector<Cell> cells = {{1, 2}, {3, 1}};
    std::vector<Cell> flipped = flip_rows(cells, 4);
    REQUIRE(flipped.size() == 2);
    CHECK(flipped[0] == Cell{1, 3});
    CHECK(flipped[1] == Cell{3, 4});
    CHECK(flip_rows(flipped, 4) == cells);
    CHECK_THROWS_AS(flip_rows({{1, 5}}, 4), InputError);
}

TEST_CASE("twist moves the union onto the bigger boundary") {
    auto [a, b] = twist({{1, 2}}, {{2, 1}});
    CHECK(b.empty());
    std::vector<Cell> sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());
    CHECK(sorted_a == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(min_diagram_containing(a) == Partition({2, 1}));

    // disjointness is required
    CHECK_THROWS_AS(twist({{1, 1}}, {{1, 1}}), InputError);
    // both inputs must be diagram chains
    CHECK_THROWS_AS(twist({{1, 1}, {2, 2}}, {}), InputError);

    // a twist that actually sinks a cell: the second output lands in the
    // interior of the united shape
    auto [c, d] = twist({{2, 2}}, {{1, 1}});
    CHECK(c == std::vector<Cell>{{2, 2}});
    CHECK(d == std::vector<Cell>{{1, 1}});
    Partition united = min_diagram_containing({{2, 2}, {1, 1}});
    CHECK(min_diagram_containing(c) == united);
    for (const Cell& cell : d) CHECK(interior(united).contains_cell(cell));
}

TEST_CASE("layer decomposition reproduces the worked instance") {
    std::vector<std::vector<Cell>> chains = {
        {{1, 3}, {4, 3}, {5, 1}},
        {{1, 2}, {3, 2}, {4, 2}, {4, 1}},
        {{2, 4}, {2, 2}, {2, 1}},
    };
    Partition lambda({5, 4, 4, 3, 2});
    std::vector<Partition> shapes = layers_decompose(chains, lambda);
    REQUIRE(shapes.size() == 3);
    CHECK(shapes[0] == Partition({2}));
    CHECK(shapes[1] == Partition({3, 3, 1}));
    CHECK(shapes[2] == Partition({5, 4, 4, 2}));

    // nesting: each shape sits inside the interior of the next
    for (size_t i = 0; i + 1 < shapes.size(); ++i)
        CHECK(interior(shapes[i + 1]).contains(shapes[i]));
    // coverage: every chain cell lies on some boundary
    for (const auto& chain : chains)
        for (const Cell& cell : chain) {
            bool covered = false;
            for (const Partition& s : shapes)
                for (const Cell& b : boundary_cells(s))
                    if (b == cell) covered = true;
            CHECK(covered);
        }
}

TEST_CASE("layer decomposition validates the family") {
    CHECK_THROWS_AS(layers_decompose({{{1, 1}}, {{1, 1}}}, Partition({2, 2})), InputError);
    CHECK_THROWS_AS(layers_decompose({{{3, 1}}}, Partition({2, 2})), InputError);
    CHECK(layers_decompose({}, Partition({2, 2})).empty());
}

TEST_CASE("straightening turns optimal chains into pinned disjoint paths") {
    WeightMatrix a(4, 4);
    a.set(1, 1, 3);
    a.set(2, 3, 2);
    a.set(3, 2, 5);
    a.set(4, 4, 1);
    a.set(2, 2, 2);
    for (int k = 1; k <= 3; ++k) {
        auto [value, family] = brute_h_witness(a, k);
        auto paths = straighten(family, a, k);
        REQUIRE(static_cast<int>(paths.size()) == k);
        long long total = 0;
        std::set<Cell> seen;
        for (int j = 0; j < k; ++j) {
            const auto& p = paths[static_cast<size_t>(j)];
            CHECK(is_up_right_path(p));
            CHECK(p.front() == Cell{1, j + 1});
            CHECK(p.back() == Cell{4, 4 - k + j + 1});
            total += chain_weight(a, p);
            for (const Cell& c : p) CHECK(seen.insert(c).second);
        }
        CHECK(total == value);
        CHECK(total == brute_g(a, k));
    }
    CHECK_THROWS_AS(straighten({{}, {}, {}, {}, {}}, a, 5), InputError);
}

TEST_CASE("straightening never loses weight on non-optimal families") {
    WeightMatrix a(3, 3, {1, 0, 4, 0, 2, 0, 3, 0, 1});
    std::vector<std::vector<Cell>> family = {{{1, 1}, {2, 2}}};
    long long before = 0;
    for (const auto& chain : family) before += chain_weight(a, chain);
    auto paths = straighten(family, a, 1);
    long long after = 0;
    for (const auto& p : paths) after += chain_weight(a, p);
    CHECK(after >= before);
    CHECK(is_up_right_path(paths[0]));
}
