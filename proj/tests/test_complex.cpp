#include <catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "indgrid/complex.hpp"
#include "indgrid/families.hpp"
#include "support.hpp"

using namespace indgrid;

namespace {

std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

TEST_CASE("face enumeration examples") {
    CHECK(enumerate_faces(make_cycle(5)).f_vector() == std::vector<std::uint64_t>{1, 5, 5});
    CHECK(enumerate_faces(make_path(2)).f_vector() == std::vector<std::uint64_t>{1, 2});
    auto empty = enumerate_faces(Graph{});
    CHECK(empty.f_vector() == std::vector<std::uint64_t>{1});
    CHECK(empty.total() == 1);
    CHECK(empty.count(-1) == 1);
    CHECK(enumerate_faces(make_grid(2, 2)).f_vector() == std::vector<std::uint64_t>{1, 4, 2});
}

TEST_CASE("faces are independent, sorted and complete") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testing::random_graph(rng, 12, 0.3);
        auto fs = enumerate_faces(g);
        CHECK(fs.f_vector() == testing::brute_force_f_vector(g));
        CHECK(count_faces(g) == fs.f_vector());
        for (const auto& list : fs.by_dim) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                auto f = list.face(i);
                CHECK(std::is_sorted(f.begin(), f.end()));
                for (std::size_t a = 0; a < f.size(); ++a)
                    for (std::size_t b = a + 1; b < f.size(); ++b) CHECK_FALSE(g.adjacent(f[a], f[b]));
                CHECK(list.find(f) == i);
                if (i > 0) {
                    auto p = list.face(i - 1);
                    CHECK(std::lexicographical_compare(p.begin(), p.end(), f.begin(), f.end()));
                }
            }
        }
        CHECK(independence_upper_bound(g) + 1 >= fs.f_vector().size());
    }
}

TEST_CASE("dimension cap and budget") {
    auto g = make_grid(4, 4);
    auto capped = enumerate_faces(g, EnumerationOptions{1, kDefaultFaceBudget});
    CHECK(capped.top_dim() == 1);
    CHECK(capped.count(1) == enumerate_faces(g).count(1));
    try {
        enumerate_faces(g, EnumerationOptions{std::nullopt, 50});
        FAIL("budget not enforced");
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget() == 50);
        CHECK(e.graph_order() == 16);
    }
    CHECK_THROWS_AS(count_faces(g, 50), BudgetExceeded);
    CHECK(face_count_exceeds(g, 50));
    CHECK_FALSE(face_count_exceeds(g, 1'000'000));
}

TEST_CASE("boundary matrices") {
    auto one = enumerate_faces(make_path(1));
    CHECK(boundary_matrix(one, 0, true).to_dense() == std::vector<std::vector<std::int64_t>>{{1}});
    CHECK(boundary_matrix(one, 0, false).rows() == 0);
    auto k3 = enumerate_faces(Graph({"a", "b", "c"}, std::vector<Edge>{}));
    auto d1 = boundary_matrix(k3, 1).to_dense();
    // columns {a,b},{a,c},{b,c}; boundary of {x,y} is y - x
    CHECK(d1 == std::vector<std::vector<std::int64_t>>{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    CHECK(boundary_matrix(k3, 2).to_dense() == std::vector<std::vector<std::int64_t>>{{1}, {-1}, {1}});
}

TEST_CASE("boundary of boundary vanishes") {
    for (bool reduced : {true, false}) {
        CHECK(boundary_squares_to_zero(boundary_matrices(enumerate_faces(make_grid(3, 3)), reduced)));
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 30; ++trial)
            CHECK(boundary_squares_to_zero(boundary_matrices(enumerate_faces(testing::random_graph(rng, 11, 0.25)), reduced)));
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(make_path(2)) == 2);
    CHECK(euler_characteristic(make_path(2), true) == 1);
    CHECK(euler_characteristic(make_grid(6, 4)) == -2);
    CHECK(euler_characteristic(Graph{}, true) == -1);
    CHECK(euler_from_f_vector({1, 5, 5}, false) == 0);
    CHECK(euler_from_f_vector({1, 5, 5}, true) == -1);
}

TEST_CASE("disjoint union joins complexes") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testing::random_graph(rng, 8, 0.3);
        auto h = testing::random_graph(rng, 8, 0.3);
        auto u = disjoint_union(g, h);
        const auto fg = enumerate_faces(g).f_vector(), fh = enumerate_faces(h).f_vector();
        CHECK(enumerate_faces(u).f_vector() == convolve(fg, fh));
        CHECK(euler_characteristic(u, true) == -euler_characteristic(g, true) * euler_characteristic(h, true));
    }
}

TEST_CASE("face dump format") {
    std::ostringstream out;
    auto g = make_path(3);
    write_face_dump(out, g, enumerate_faces(g));
    CHECK(out.str() == "c " + graph_hash_hex(g) + "\nf 0 1\nf 0 2\nf 0 3\nf 1 1 3\n");
}
