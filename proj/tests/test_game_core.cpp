#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incidence/error.hpp"
#include "incidence/hypergraph.hpp"
#include "oracle.hpp"

using namespace incidence;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 5}, EdgeColor::Blue}}), ParseError);
    CHECK_THROWS_AS(Hypergraph::build(2, {{{}, EdgeColor::Blue}}), ParseError);
    CHECK_THROWS_AS(Hypergraph::build(2, {{{0, 1}, EdgeColor::Blue},
                                          {{0, 1}, EdgeColor::Blue}}),
                    ParseError);
    // Same vertex set under a different color is a distinct edge.
    CHECK_NOTHROW(Hypergraph::build(2, {{{0, 1}, EdgeColor::Blue},
                                        {{0, 1}, EdgeColor::Green}}));
    // Duplicates are legal in multi mode.
    CHECK_NOTHROW(Hypergraph::build(2, {{{0, 1}, EdgeColor::Blue},
                                        {{0, 1}, EdgeColor::Blue}},
                                    true));
}

TEST_CASE("degrees and pair multiplicity") {
    Hypergraph demo = make_demo_graph();
    CHECK(demo.vertex_count() == 7);
    CHECK(demo.edge_count() == 10);
    CHECK(demo.max_degree() == 4);
    std::multiset<int> degrees;
    for (int v = 0; v < 7; ++v) degrees.insert(demo.degree(v));
    CHECK(degrees == std::multiset<int>{2, 2, 3, 3, 3, 3, 4});
    CHECK(demo.max_pair_multiplicity() == 1);

    Hypergraph multi = Hypergraph::build(
        3, {{{0, 1, 2}, EdgeColor::Blue}, {{0, 1}, EdgeColor::Blue}});
    CHECK(multi.max_pair_multiplicity() == 2);
}

TEST_CASE("convention follows the colors") {
    CHECK(make_path(3, EdgeColor::Blue).convention() == Convention::MakerBreaker);
    CHECK(make_path(3, EdgeColor::Green).convention() == Convention::MakerMaker);
    CHECK(Hypergraph::build(2, {{{0}, EdgeColor::Blue}, {{1}, EdgeColor::Red}})
              .convention() == Convention::Partisan);
    CHECK(Hypergraph::build(3, {}).convention() == Convention::MakerBreaker);
}

TEST_CASE("terminal scoring on the demo endgame") {
    std::vector<VertexId> left{1, 4, 5, 6}, right{0, 2, 3};
    CHECK(Position{make_demo_graph(EdgeColor::Green), left, right}.terminal_score() == 2);
    CHECK(Position{make_demo_graph(EdgeColor::Blue), left, right}.terminal_score() == 4);
}

TEST_CASE("terminal scoring matches the reference on random boards") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        Position p = oracle::random_position(
            rng, oracle::random_hypergraph(rng, 6, 6, 3, true), 1.0);
        REQUIRE(p.terminal());
        CHECK(p.terminal_score() == oracle::terminal_score(p));
        CHECK(p.negated().terminal_score() == -p.terminal_score());
    }
}

TEST_CASE("negation swaps colors and claims") {
    Hypergraph g = Hypergraph::build(2, {{{0}, EdgeColor::Blue}, {{1}, EdgeColor::Red}});
    Position p{g, {0}, {}};
    Position q = p.negated();
    CHECK(q.graph().edges()[0].color == EdgeColor::Red);
    CHECK(q.graph().edges()[1].color == EdgeColor::Blue);
    CHECK(q.cell(0) == CellState::Right);
    CHECK(p.negated().negated().cells() == p.cells());
}

TEST_CASE("claims are validated") {
    Position p{make_path(3)};
    Position q = p.claim(Player::Left, 1);
    CHECK(q.cell(1) == CellState::Left);
    CHECK(p.cell(1) == CellState::Free); // claim copies
    CHECK_THROWS_AS(q.claim(Player::Right, 1), ParseError);
    CHECK_THROWS_AS(p.claim(Player::Left, 7), ParseError);
    CHECK_THROWS_AS((Position{make_path(3), {0}, {0}}), ParseError);
    CHECK_THROWS_AS(p.terminal_score(), ParseError);
}

TEST_CASE("disjoint sums concatenate boards") {
    Position sum = disjoint_sum(Position{make_path(3), {0}, {}},
                                Position{make_path(2), {}, {1}});
    CHECK(sum.vertex_count() == 5);
    CHECK(sum.graph().edge_count() == 3);
    CHECK(sum.cell(0) == CellState::Left);
    CHECK(sum.cell(4) == CellState::Right);
    CHECK(sum.graph().sum_offsets() == std::vector<int>{0, 3});
}

TEST_CASE("generators have the expected shapes") {
    CHECK(make_path(6).edge_count() == 5);
    CHECK(make_cycle(6).edge_count() == 6);
    CHECK(make_complete(5).edge_count() == 10);
    CHECK(make_star(4).vertex_count() == 5);
    CHECK(make_star(4).max_degree() == 4);
    CHECK(make_binary_tree(3).vertex_count() == 15);
    CHECK(make_union_paths({3, 4}).vertex_count() == 7);
    CHECK(make_union_paths({3, 4}).edge_count() == 5);
    CHECK(make_singleton_star(5).max_degree() == 5);
    CHECK(make_unique_move_board().vertex_count() == 14);
    CHECK(make_path(0).vertex_count() == 0);
    CHECK_THROWS_AS(make_path(-1), ParseError);
    CHECK_THROWS_AS(make_cycle(2), ParseError);
}
