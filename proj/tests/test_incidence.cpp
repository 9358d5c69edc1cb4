#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "edom/incidence.hpp"
#include "test_util.hpp"

using namespace edom;

TEST_CASE("classify recovers the Fano parameters") {
    auto P = classify(testutil::fano());
    CHECK(P.v == 7);
    CHECK(P.b == 7);
    CHECK(P.k == 3);
    CHECK(P.r == 3);
    CHECK(P.lambda == 1);
    CHECK(P.is_design);
    CHECK(P.is_sis);
    CHECK(P.is_symmetric_design);
    CHECK(P.connected);
    CHECK_FALSE(P.is_semi_biplane);
}

TEST_CASE("classify on non-uniform structures leaves k or r empty") {
    auto D = IncidenceStructure::from_blocks(4, {{0, 1}, {0, 1, 2}, {2, 3}});
    auto P = classify(D);
    CHECK_FALSE(P.k.has_value());
    CHECK(P.lambda == 2);
    CHECK_FALSE(P.is_design);
}

TEST_CASE("the single point-block structure fails the lambda >= 1 convention") {
    auto D = IncidenceStructure::from_blocks(1, {{0}});
    auto P = classify(D);
    CHECK(P.lambda == 0);
    CHECK_FALSE(P.is_design);
    CHECK_FALSE(P.is_sis);
}

TEST_CASE("design equations hold for classified designs") {
    auto P = classify(testutil::fano());
    REQUIRE(P.is_design);
    CHECK(static_cast<std::uint64_t>(P.v) * *P.r == static_cast<std::uint64_t>(P.b) * *P.k);
    CHECK(static_cast<std::uint64_t>(P.v - 1) * P.lambda == static_cast<std::uint64_t>(*P.r) * (*P.k - 1));
}

TEST_CASE("dual is an involution and preserves symmetric parameters") {
    auto D = testutil::fano();
    auto Dd = D.dual();
    CHECK(Dd.v() == 7);
    CHECK(Dd.b() == 7);
    auto Ddd = Dd.dual();
    CHECK(Ddd.blocks() == D.blocks());

    auto P = classify(Dd);
    CHECK(P.k == 3);
    CHECK(P.lambda == 1);
    CHECK(P.is_symmetric_design);

    auto E = IncidenceStructure::from_blocks(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    CHECK(E.dual().v() == 3);
    CHECK(E.dual().b() == 5);
    CHECK(E.dual().dual().blocks() == E.blocks());
}

TEST_CASE("double count identity") {
    for (const auto& D : {testutil::fano(), IncidenceStructure::from_blocks(6, {{0, 5}, {1, 2, 3}, {0, 2, 4}})}) {
        std::uint64_t from_points = 0, from_blocks = 0;
        for (std::uint32_t p = 0; p < D.v(); ++p) from_points += D.point_degree(p);
        for (std::uint32_t j = 0; j < D.b(); ++j) from_blocks += D.block_size(j);
        CHECK(from_points == from_blocks);
        CHECK(from_points == D.edge_count());
    }
}

TEST_CASE("inc round trip is byte identical on canonical form") {
    auto D = testutil::fano();
    std::ostringstream out1;
    write_inc(D, out1);
    std::istringstream in(out1.str());
    auto D2 = read_inc(in);
    std::ostringstream out2;
    write_inc(D2, out2);
    CHECK(out1.str() == out2.str());
    CHECK(D2.blocks() == D.blocks());
}

TEST_CASE("inc comments survive before the header only") {
    std::istringstream in("# family test\n# q 4\n3 2\n2 0 1\n2 1 2\n");
    std::vector<std::string> comments;
    auto D = read_inc(in, &comments);
    CHECK(comments == std::vector<std::string>{"family test", "q 4"});
    CHECK(D.v() == 3);
}

TEST_CASE("inc parser rejects malformed files") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_inc(in);
    };
    CHECK_THROWS_AS(parse("3 2\n2 0 1\n"), Error);        // missing block
    CHECK_THROWS_AS(parse("3 1\n2 0 3\n"), Error);        // index out of range
    CHECK_THROWS_AS(parse("3 1\n0\n"), Error);            // empty block
    CHECK_THROWS_AS(parse("3 1\n2 1 0\n"), Error);        // not increasing
    CHECK_THROWS_AS(parse("3 2\n2 0 1\n2 0 1\n"), Error); // duplicate block
    CHECK_THROWS_AS(parse("3 1\n2 0 1 \n"), Error);       // trailing whitespace
    CHECK_THROWS_AS(parse("x y\n"), Error);               // bad header

    try {
        parse("3 1\n2 0 3\n");
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("from_blocks validation") {
    CHECK_THROWS_AS(IncidenceStructure::from_blocks(3, {{}}), Error);
    CHECK_THROWS_AS(IncidenceStructure::from_blocks(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(IncidenceStructure::from_blocks(3, {{3}}), Error);
    CHECK_THROWS_AS(IncidenceStructure::from_blocks(3, {{0, 1}, {0, 1}}), Error);
}

TEST_CASE("canonical form sorts blocks lexicographically") {
    std::vector<std::uint32_t> perm;
    auto D = IncidenceStructure::from_blocks(4, {{1, 2}, {0, 3}, {0, 1}}, true, &perm);
    CHECK(D.block(0) == std::vector<std::uint32_t>{0, 1});
    CHECK(D.block(1) == std::vector<std::uint32_t>{0, 3});
    CHECK(D.block(2) == std::vector<std::uint32_t>{1, 2});
    CHECK(perm == std::vector<std::uint32_t>{2, 1, 0});
}
