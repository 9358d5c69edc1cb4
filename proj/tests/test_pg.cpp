#include <catch2/catch_amalgamated.hpp>

#include "edom/ifpair.hpp"
#include "edom/pg.hpp"

using namespace edom;

TEST_CASE("PG(2,2) point-line design is the Fano plane") {
    auto F2 = GF::create(2, 1);
    auto des = pg_points_kspaces(2, F2, 1);
    auto P = classify(des.D);
    CHECK(P.v == 7);
    CHECK(P.b == 7);
    CHECK(P.k == 3);
    CHECK(P.r == 3);
    CHECK(P.lambda == 1);
    CHECK(P.is_symmetric_design);
}

TEST_CASE("PG(3,2) points and lines match the Gaussian binomial counts") {
    auto F2 = GF::create(2, 1);
    auto des = pg_points_kspaces(3, F2, 1);
    auto P = classify(des.D);
    CHECK(P.v == 15);
    CHECK(P.b == 35);
    CHECK(P.k == 3);
    CHECK(P.r == 7);
    CHECK(P.lambda == 1);
    CHECK(P.is_design);
    CHECK_FALSE(P.is_symmetric_design);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(pg_replication_number(3, 1, 2) == 7);
}

TEST_CASE("PG(2,4) point-line design is a (21,5,1) symmetric design") {
    auto F4 = GF::create(2, 2);
    auto des = pg_points_kspaces(2, F4, 1);
    auto P = classify(des.D);
    CHECK(P.v == 21);
    CHECK(P.k == 5);
    CHECK(P.lambda == 1);
    CHECK(P.is_symmetric_design);
}

TEST_CASE("classify agrees with the replication formula across small spaces") {
    struct Item {
        std::uint32_t n, p, h, k;
    };
    for (auto [n, p, h, k] : {Item{3, 2, 1, 2}, Item{3, 3, 1, 1}, Item{4, 2, 1, 2}, Item{4, 2, 1, 3}, Item{2, 5, 1, 1}}) {
        auto F = GF::create(p, h);
        auto des = pg_points_kspaces(n, F, k);
        auto P = classify(des.D);
        INFO("PG(" << n << "," << F.q() << ") k=" << k);
        REQUIRE(P.is_design);
        CHECK(*P.r == pg_replication_number(n, k, F.q()));
        CHECK(P.b == gaussian_binomial(n + 1, k + 1, F.q()));
    }
}

TEST_CASE("r exceeds v exactly for middle dimensions") {
    // arithmetic sweep over all theta_n <= 1000
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29}) {
        for (std::uint32_t n = 2; n <= 9; ++n) {
            std::uint64_t theta = 0, acc = 1;
            for (std::uint32_t i = 0; i <= n; ++i) {
                theta += acc;
                acc *= q;
            }
            if (theta > 1000) break;
            for (std::uint32_t k = 1; k <= n - 1; ++k) {
                std::uint64_t r = pg_replication_number(n, k, q);
                INFO("n=" << n << " q=" << q << " k=" << k);
                CHECK((r > theta) == (1 < k && k < n - 1));
            }
        }
    }
}

TEST_CASE("the standard polarity passes the polarity predicate") {
    auto F2 = GF::create(2, 1);
    auto des = pg_points_kspaces(2, F2, 1);
    auto sigma = pg_standard_polarity(des, F2);
    CHECK(is_polarity(des.D, sigma));

    // point (1,0,0) maps to the line X_0 = 0, i.e. the block of all points with
    // first coordinate zero
    ProjectiveSpace pg(F2, 2);
    std::uint32_t p = pg.point_index({1, 0, 0});
    std::vector<std::uint32_t> expect;
    for (std::uint32_t i = 0; i < 7; ++i)
        if (pg.point_coords(i)[0] == 0) expect.push_back(i);
    CHECK(des.D.block(sigma[p]) == expect);
}

TEST_CASE("absolute points of the PG(2,3) polarity are the self-orthogonal ones") {
    auto F3 = GF::create(3, 1);
    auto des = pg_points_kspaces(2, F3, 1);
    auto sigma = pg_standard_polarity(des, F3);
    auto R = polarity_graph(des.D, sigma);
    CHECK(R.absolute.count() == 4); // q + 1

    ProjectiveSpace pg(F3, 2);
    for (std::uint32_t i = 0; i < des.D.v(); ++i) {
        auto x = pg.point_coords(i);
        GFElem norm = 0;
        for (auto c : x) norm = F3.add(norm, F3.mul(c, c));
        CHECK(R.absolute.test(i) == (norm == 0));
    }
}

TEST_CASE("projective point indexing is a bijection") {
    for (auto [p, h, n] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 2, 2}, {3, 1, 3}, {2, 1, 4}}) {
        auto F = GF::create(p, h);
        ProjectiveSpace pg(F, n);
        for (std::uint32_t i = 0; i < pg.point_count(); ++i) {
            auto x = pg.point_coords(i);
            CHECK(pg.point_index(x) == i);
            CHECK(pg.normalize(x) == x);
        }
    }
}

TEST_CASE("Denniston arcs validate against the maximal-arc predicate") {
    SECTION("q=4, n=2: the hyperoval") {
        auto F4 = GF::create(2, 2);
        auto des = pg_points_kspaces(2, F4, 1);
        auto S = denniston_arc_points(F4, 2);
        CHECK(S.size() == 6);
        auto ord = is_maximal_arc(des.D, S);
        REQUIRE(ord.has_value());
        CHECK(*ord == 2);
    }
    SECTION("q=8, n=2") {
        auto F8 = GF::create(2, 3);
        auto des = pg_points_kspaces(2, F8, 1);
        auto S = denniston_arc_points(F8, 2);
        CHECK(S.size() == 10);
        CHECK(is_maximal_arc(des.D, S) == 2);
    }
    SECTION("q=16, n=4") {
        auto F16 = GF::create(2, 4);
        auto des = pg_points_kspaces(2, F16, 1);
        auto S = denniston_arc_points(F16, 4);
        CHECK(S.size() == 52); // (n-1)q + n
        CHECK(is_maximal_arc(des.D, S) == 4);
    }
    SECTION("rejections") {
        auto F8 = GF::create(2, 3);
        CHECK_THROWS_AS(denniston_arc_points(F8, 3), Error);
        auto F9 = GF::create(3, 2);
        CHECK_THROWS_AS(denniston_arc_points(F9, 3), Error);
    }
}
