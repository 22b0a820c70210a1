#include <doctest.h>

#include "schurlpp/errors.hpp"
#include "schurlpp/path.hpp"

using namespace schurlpp;

TEST_CASE("paths validate their word and stay in the quadrant") {
    DownRightPath g({0, 2}, "RRDD");
    CHECK(g.steps() == 4);
    CHECK(g.start() == Vertex{0, 2});
    CHECK(g.end() == Vertex{2, 0});
    CHECK(g.vertex(1) == Vertex{1, 2});
    CHECK(g.letter(1) == 'R');
    CHECK(g.letter(3) == 'D');
    CHECK_THROWS_AS(DownRightPath({0, 0}, "D"), InputError);
    CHECK_THROWS_AS(DownRightPath({-1, 0}, "R"), InputError);
    CHECK_THROWS_AS(DownRightPath({0, 1}, "RXD"), InputError);
}

TEST_CASE("span predicates read the endpoints") {
    CHECK(spans_quadrant(DownRightPath({0, 2}, "RRDD")));
    CHECK_FALSE(spans_quadrant(DownRightPath({1, 1}, "RD")));
    CHECK_FALSE(spans_quadrant(DownRightPath({0, 2}, "RRD")));
    CHECK(spans_half_quadrant(DownRightPath({1, 1}, "RD")));
    CHECK(spans_half_quadrant(DownRightPath({2, 2}, "DD")));
    CHECK(spans_half_quadrant(DownRightPath({0, 0}, "RR")));
    CHECK_FALSE(spans_half_quadrant(DownRightPath({0, 2}, "RRDD")));
}

TEST_CASE("the certified region of a spanning path is a staircase diagram") {
    DownRightPath g({0, 4}, "RRDRDDRRRD");
    Partition shape = shape_of(g);
    CHECK(shape == Partition({6, 3, 3, 2}));
    CHECK(shape.weight() == 14);

    CHECK(shape_of(DownRightPath({0, 1}, "RD")) == Partition({1}));
    CHECK(shape_of(DownRightPath({0, 0}, "")) == Partition{});
    CHECK(shape_of(DownRightPath({0, 2}, "DD")) == Partition{});
}

TEST_CASE("literal cells of a half path sit weakly below the diagonal") {
    std::vector<Cell> cells = path_shape_cells(DownRightPath({2, 2}, "DD"));
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == Cell{1, 1});
    CHECK(cells[1] == Cell{2, 1});
    CHECK(cells[2] == Cell{2, 2});
    for (const Cell& c : cells) CHECK(c.col >= c.row);
}

TEST_CASE("symmetrizing a half path completes the region across the diagonal") {
    CHECK(symmetrized_shape(DownRightPath({2, 2}, "DD")) == Partition({2, 2}));
    CHECK(symmetrized_shape(DownRightPath({2, 2}, "RDD")) == Partition({3, 3, 2}));
    CHECK(symmetrized_shape(DownRightPath({1, 1}, "D")) == Partition({1}));
    CHECK(symmetrized_shape(DownRightPath({0, 0}, "RR")) == Partition{});
}

TEST_CASE("boundary path round-trips through the shape") {
    Partition shape({3, 1});
    DownRightPath g = boundary_path(shape, 3, 2);
    CHECK(g.start() == Vertex{0, 2});
    CHECK(g.end() == Vertex{3, 0});
    CHECK(shape_of(g) == shape);

    CHECK(shape_of(boundary_path(Partition{}, 2, 2)) == Partition{});
    CHECK(shape_of(boundary_path(Partition({2, 2}), 2, 2)) == Partition({2, 2}));
    CHECK_THROWS_AS(boundary_path(Partition({4}), 3, 2), InputError);
    CHECK_THROWS_AS(boundary_path(Partition({1, 1, 1}), 3, 2), InputError);
}

TEST_CASE("elementary growth adds one cell per flip") {
    DownRightPath g({0, 2}, "RRDD");
    std::vector<DownRightPath> steps = elementary_growth_sequence(g);
    REQUIRE(steps.size() == 5); // empty shape plus one path per cell
    CHECK(steps.front().word() == "DDRR");
    CHECK(steps.back() == g);
    for (size_t i = 0; i + 1 < steps.size(); ++i) {
        long long before = shape_of(steps[i]).weight();
        long long after = shape_of(steps[i + 1]).weight();
        CHECK(after == before + 1);
        CHECK(shape_of(steps[i + 1]).contains(shape_of(steps[i])));
    }
}

TEST_CASE("chain predicates on vertex lists") {
    CHECK(is_ne_chain({{1, 1}, {2, 1}, {2, 2}}));
    CHECK(is_ne_chain({}));
    CHECK_FALSE(is_ne_chain({{2, 1}, {1, 2}}));
    CHECK_FALSE(is_ne_chain({{1, 1}, {1, 1}}));
    CHECK(is_up_right_path({{1, 1}, {2, 1}, {2, 2}}));
    CHECK_FALSE(is_up_right_path({{1, 1}, {2, 2}}));
    CHECK_FALSE(is_up_right_path({{1, 1}, {3, 1}}));
}
