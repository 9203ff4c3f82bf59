#include <catch_amalgamated.hpp>

#include <sstream>

#include "indgrid/graph.hpp"
#include "indgrid/graph_io.hpp"
#include "indgrid/families.hpp"

using namespace indgrid;

TEST_CASE("vertex sets") {
    VertexSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.to_vector() == std::vector<std::size_t>{0, 64, 129});
    s.erase(64);
    CHECK(s.count() == 2);
    auto full = VertexSet::full(130);
    CHECK(full.count() == 130);
    CHECK(s.is_subset_of(full));
    CHECK((full - s).count() == 128);
    CHECK_FALSE((full - s).intersects(s));
}

TEST_CASE("paths and cycles") {
    auto p = make_path(4);
    CHECK(p.labels() == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(p.edge_count() == 3);
    auto c = make_cycle(5);
    CHECK(c.edge_count() == 5);
    CHECK(c.adjacent(0, 4));
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("graph constructor rejects malformed input") {
    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Graph({"a"}, loop), std::invalid_argument);
    std::vector<Edge> none;
    CHECK_THROWS_AS(Graph({"a", "a"}, none), std::invalid_argument);
    std::vector<Edge> far{{0, 5}};
    CHECK_THROWS_AS(Graph({"a", "b"}, far), std::invalid_argument);
}

TEST_CASE("grid examples") {
    auto g = make_grid(3, 2);
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 7);
    CHECK(g.labels().front() == "(1,1)");
    CHECK(g.labels().back() == "(3,2)");
    CHECK(is_isomorphic_small(make_grid(2, 2), make_cycle(4)));
    CHECK(make_grid(1, 5).edge_count() == 4);
}

TEST_CASE("grid edge count is 2nk - n - k") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= 10; ++k) {
            auto g = make_grid(n, k);
            CHECK(g.order() == static_cast<std::size_t>(n * k));
            CHECK(g.edge_count() == static_cast<std::size_t>(2 * n * k - n - k));
            g.check_invariants();
        }
}

TEST_CASE("cartesian product of paths is the grid") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) CHECK(cartesian_product(make_path(n), make_path(k)) == make_grid(n, k));
    CHECK(is_isomorphic_small(cartesian_product(make_path(2), make_path(2)), make_cycle(4)));
    auto g = make_cycle(5);
    CHECK(is_isomorphic_small(cartesian_product(make_path(1), g), g));
    CHECK_THROWS(cartesian_product(Graph{}, g));
}

TEST_CASE("vertex deletion") {
    auto g = make_grid(3, 3);
    CHECK(delete_vertices(g, std::vector<std::string>{}) == g);
    auto p = delete_vertices(make_path(3), {"2"});
    CHECK(p.order() == 2);
    CHECK(p.edge_count() == 0);
    CHECK(delete_vertices(make_grid(4, 3), {"(4,2)"}) == make_XY(3, ThinnedColumn::X, 4));
    CHECK_THROWS(delete_vertices(g, {"(9,9)"}));
}

TEST_CASE("neighbourhoods") {
    auto g = make_grid(3, 3);
    CHECK(open_neighborhood(g, "(2,2)") == std::vector<std::string>{"(1,2)", "(2,1)", "(2,3)", "(3,2)"});
    CHECK(closed_neighborhood(g, "(1,1)") == std::vector<std::string>{"(1,1)", "(1,2)", "(2,1)"});
    CHECK_THROWS(open_neighborhood(g, "x"));
}

TEST_CASE("disjoint union and components") {
    std::vector<Edge> e{{0, 1}};
    Graph k2({"a", "b"}, e);
    auto u = disjoint_union(k2, k2);
    CHECK(u.order() == 4);
    CHECK(u.edge_count() == 2);
    CHECK(u.labels() == std::vector<std::string>{"0:a", "0:b", "1:a", "1:b"});
    CHECK(connected_components(u).size() == 2);
    CHECK(is_isomorphic_small(disjoint_union(make_cycle(5), Graph{}), make_cycle(5)));
    CHECK(connected_components(make_grid(4, 4)).size() == 1);
    CHECK(connected_components(Graph{}).empty());
    CHECK(connected_components(make_XY(3, ThinnedColumn::X, 1)).size() == 2);
}

TEST_CASE("small isomorphism") {
    std::vector<Edge> e{{0, 1}};
    Graph k2_plus_point({"a", "b", "c"}, e);
    CHECK_FALSE(is_isomorphic_small(make_path(3), k2_plus_point));
    std::vector<Edge> star{{1, 0}, {1, 2}};
    CHECK(is_isomorphic_small(Graph({"x", "y", "z"}, star), make_path(3)));
    CHECK_FALSE(is_isomorphic_small(make_path(4), make_cycle(4)));
}

TEST_CASE("graph text round trip") {
    for (auto g : {make_grid(3, 4), make_cycle(7), Graph{}, make_XY(5, ThinnedColumn::Y, 3)}) {
        std::istringstream in(write_graph_text(g));
        auto back = read_graph_text(in);
        CHECK(back == g);
        CHECK(graph_hash(back) == graph_hash(g));
    }
    CHECK(write_graph_text(make_path(2)) == "p 2\nv 1 1\nv 2 2\ne 1 2\n");
    CHECK(graph_hash_hex(make_path(2)).size() == 16);
    CHECK(graph_hash(make_path(3)) != graph_hash(make_path(4)));
}

TEST_CASE("graph text parse errors") {
    for (const char* bad : {"", "v 1 a\n", "p 2\nv 1 a\n", "p 2\nv 1 a\nv 2 b\ne 2 1\n", "p 2\nv 1 a\nv 2 b\ne 1 3\n",
                            "p 1\nv 2 a\n", "p 1\nv 1 a\nx\n", "p 2\nv 1 a\nv 2 a\n", "p 1\nv 1 a b\n", "p 1\np 1\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_graph_text(in), ParseError);
    }
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}
