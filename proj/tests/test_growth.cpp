#include <doctest.h>

#include <vector>

#include "schurlpp/errors.hpp"
#include "schurlpp/growth.hpp"
#include "schurlpp/matrix.hpp"
#include "schurlpp/path.hpp"

using namespace schurlpp;

TEST_CASE("forward rule on pinned examples") {
    CHECK(forward_rule({}, {}, {}, 3) == Partition({3}));
    CHECK(forward_rule({}, {}, {}, 0) == Partition{});
    CHECK(forward_rule({1}, {2}, {1}, 0) == Partition({2}));
    CHECK(forward_rule({1, 1}, {2, 1}, {1, 1}, 2) == Partition({4, 1}));
    CHECK(forward_rule({1}, {4}, {3}, 4) == Partition({8, 2}));
}

TEST_CASE("forward rule validates its inputs") {
    CHECK_THROWS_AS(forward_rule({}, {}, {}, -1), InputError);
    // side neighbours must interlace down to the corner
    CHECK_THROWS_AS(forward_rule({2}, {1}, {1}, 0), InputError);
    CHECK_THROWS_AS(forward_rule({}, {1, 1}, {}, 0), InputError);
}

TEST_CASE("mass identity is checked on every forward call") {
    uint64_t before = forward_rule_mass_checks();
    forward_rule({1}, {2}, {2}, 5);
    CHECK(forward_rule_mass_checks() == before + 1);
}

TEST_CASE("backward rule inverts the forward rule") {
    {
        auto [rho, m] = backward_rule({3}, {}, {});
        CHECK(rho == Partition{});
        CHECK(m == 3);
    }
    {
        auto [rho, m] = backward_rule({4, 1}, {2, 1}, {1, 1});
        CHECK(rho == Partition({1, 1}));
        CHECK(m == 2);
    }
    {
        auto [rho, m] = backward_rule({2, 2, 1}, {2, 2, 1}, {2, 2, 1});
        CHECK(rho == Partition({2, 2, 1}));
        CHECK(m == 0);
    }
    {
        auto [rho, m] = backward_rule({}, {}, {});
        CHECK(rho == Partition{});
        CHECK(m == 0);
    }
    CHECK_THROWS_AS(backward_rule({1}, {2}, {}), InputError);
}

TEST_CASE("forward and backward are mutually inverse on exhaustive small data") {
    std::vector<Partition> smalls;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            smalls.push_back(b == 0 ? (a == 0 ? Partition{} : Partition({a}))
                                    : Partition({a, b}));
    for (const Partition& rho : smalls)
        for (const Partition& mu : smalls)
            for (const Partition& nu : smalls) {
                if (!interlaces(mu, rho) || !interlaces(nu, rho)) continue;
                for (int m = 0; m <= 2; ++m) {
                    Partition lam = forward_rule(rho, mu, nu, m);
                    auto [rho2, m2] = backward_rule(lam, mu, nu);
                    CHECK(rho2 == rho);
                    CHECK(m2 == m);
                }
            }
}

TEST_CASE("fillings validate their value lists") {
    Filling f(Partition({2, 1}), {1, 0, 2});
    CHECK(f.at(1, 1) == 1);
    CHECK(f.at(2, 1) == 0);
    CHECK(f.at(1, 2) == 2);
    CHECK(f.at(2, 2) == 0); // outside the shape
    CHECK(f.at(0, 1) == 0);
    CHECK(f.total() == 3);
    CHECK_THROWS_AS(Filling(Partition({2, 1}), {1, 0}), InputError);
    CHECK_THROWS_AS(Filling(Partition({1}), {-1}), InputError);
}

TEST_CASE("growth table over a square window records every rectangle") {
    WeightMatrix w(2, 2, {1, 3, 2, 4});
    GrowthTable t = grow_rectangle(w);
    CHECK(t.entry(1, 1) == Partition({1}));
    CHECK(t.entry(2, 1) == Partition({4}));
    CHECK(t.entry(1, 2) == Partition({3}));
    CHECK(t.entry(2, 2) == Partition({8, 2}));
    CHECK(t.entry(0, 2).empty());
    CHECK(t.entry(2, 0).empty());
    CHECK_THROWS_AS(t.entry(3, 1), InputError);
}

TEST_CASE("column growth streams the same table") {
    WeightMatrix w(3, 2, {1, 0, 2, 3, 1, 1});
    GrowthTable t = grow_rectangle(w);
    ColumnGrowth cg(2);
    for (int i = 1; i <= 3; ++i) {
        std::vector<int> column = {w.at(i, 1), w.at(i, 2)};
        const std::vector<Partition>& col = cg.feed(column);
        REQUIRE(col.size() == 3);
        CHECK(col[0].empty());
        CHECK(col[1] == t.entry(i, 1));
        CHECK(col[2] == t.entry(i, 2));
    }
    CHECK(cg.columns_fed() == 3);
}

TEST_CASE("sequence along a path reads entries with empty axes") {
    WeightMatrix w(2, 2, {1, 3, 2, 4});
    GrowthTable t = grow_rectangle(w);
    DownRightPath g({0, 2}, "RRDD");
    std::vector<Partition> seq = sequence_along(t, g);
    REQUIRE(seq.size() == 5);
    CHECK(seq[0].empty());
    CHECK(seq[1] == Partition({3}));      // vertex (1, 2)
    CHECK(seq[2] == Partition({8, 2}));   // vertex (2, 2)
    CHECK(seq[3] == Partition({4}));      // vertex (2, 1)
    CHECK(seq[4].empty());
}

TEST_CASE("rsk map round-trips through its inverse") {
    DownRightPath g({0, 2}, "RRDD");
    Filling f(shape_of(g), {1, 0, 2, 1});
    std::vector<Partition> seq = rsk_map(f, g);
    REQUIRE(seq.size() == 5);
    CHECK(seq.front().empty());
    CHECK(seq.back().empty());
    Filling back = rsk_inverse(seq, g);
    CHECK(back.shape == f.shape);
    CHECK(back.values == f.values);
}

TEST_CASE("rsk map rejects fillings of the wrong shape") {
    DownRightPath g({0, 2}, "RRDD");
    CHECK_THROWS_AS(rsk_map(Filling(Partition({2, 1}), {1, 0, 2}), g), InputError);
}

TEST_CASE("rsk inverse characterizes the image exactly") {
    DownRightPath g({0, 1}, "RD");
    // wrong length
    CHECK_THROWS_AS(rsk_inverse({Partition{}, Partition{}}, g), InputError);
    // endpoints must be empty
    CHECK_THROWS_AS(rsk_inverse({Partition({1}), Partition({1}), Partition{}}, g), InputError);
    // interlacing must follow the letters
    DownRightPath g2({0, 2}, "RRDD");
    CHECK_THROWS_AS(
        rsk_inverse({Partition{}, Partition({1}), Partition({3, 2}), Partition({1}), Partition{}},
                    g2),
        InputError);
    // a valid image decodes
    Filling back = rsk_inverse({Partition{}, Partition({2}), Partition{}}, g);
    CHECK(back.values == std::vector<int>{2});
}

TEST_CASE("exhaustive round-trip over a staircase shape") {
    DownRightPath g({0, 2}, "RDRD");
    Partition shape = shape_of(g); // (2, 1)
    REQUIRE(shape == Partition({2, 1}));
    std::vector<int> v(3, 0);
    for (v[0] = 0; v[0] <= 2; ++v[0])
        for (v[1] = 0; v[1] <= 2; ++v[1])
            for (v[2] = 0; v[2] <= 2; ++v[2]) {
                Filling f(shape, v);
                Filling back = rsk_inverse(rsk_map(f, g), g);
                CHECK(back.values == v);
            }
}

TEST_CASE("symmetric paths and fillings reduce to the half sequence") {
    DownRightPath g({0, 2}, "RRDD");
    CHECK(is_symmetric_path(g));
    CHECK_FALSE(is_symmetric_path(DownRightPath({0, 2}, "DRRD")));

    Filling f(Partition({2, 2}), {1, 3, 3, 0});
    CHECK(is_symmetric_filling(f));
    CHECK_FALSE(is_symmetric_filling(Filling(Partition({2, 2}), {1, 3, 2, 0})));

    std::vector<Partition> half = rsk_symmetric(f, g);
    std::vector<Partition> full = rsk_map(f, g);
    REQUIRE(half.size() == 3);
    CHECK(half[0] == full[2]);
    CHECK(half[1] == full[3]);
    CHECK(half[2] == full[4]);
    // the full sequence is a palindrome
    for (size_t i = 0; i < full.size(); ++i) CHECK(full[i] == full[full.size() - 1 - i]);

    CHECK_THROWS_AS(rsk_symmetric(Filling(Partition({2, 2}), {1, 3, 2, 0}), g), InputError);
    CHECK_THROWS_AS(rsk_symmetric(f, DownRightPath({0, 2}, "DRRD")), InputError);
}
