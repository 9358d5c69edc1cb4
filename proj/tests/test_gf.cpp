#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "edom/gf.hpp"
#include "edom/rng.hpp"

using namespace edom;

namespace {

// Test-side oracle: trial division by every monic polynomial of degree 1..deg/2.
// Independent of the library's irreducibility machinery.
bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f, std::uint32_t p) {
    auto inv_mod = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2, b = x % p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    while (f.size() >= g.size()) {
        if (f.back() == 0) {
            f.pop_back();
            continue;
        }
        std::uint64_t c = f.back() * inv_mod(g.back()) % p;
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p * c - c * g[i] % p) % p);
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f.empty();
}

bool brute_force_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t h = f.size() - 1;
    for (std::size_t d = 1; d <= h / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("field_create picks deterministic moduli and generators") {
    auto F9 = GF::create(3, 2);
    CHECK(F9.q() == 9);
    // lexicographically first irreducible monic quadratic over GF(3) is x^2 + 1
    CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(brute_force_irreducible(F9.modulus(), 3));
    CHECK(F9.mult_order(F9.omega()) == 8);

    auto F2 = GF::create(2, 1);
    CHECK(F2.q() == 2);
    CHECK(F2.omega() == 1);

    auto F8 = GF::create(2, 3);
    CHECK(F8.q() == 8);
    // exhaustive order check of the chosen generator
    GFElem x = 1;
    std::uint32_t ord = 0;
    do {
        x = F8.mul(x, F8.omega());
        ++ord;
    } while (x != 1);
    CHECK(ord == 7);
}

TEST_CASE("field_create rejects bad input") {
    CHECK_THROWS_AS(GF::create(4, 1), Error);
    CHECK_THROWS_AS(GF::create(1, 1), Error);
    CHECK_THROWS_AS(GF::create(2, 33), Error);
    CHECK_NOTHROW(GF::create(2, 32)); // order exactly 2^32 is allowed
}

TEST_CASE("modulus is irreducible for a range of small fields") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {2, 6}}) {
        auto F = GF::create(p, h);
        INFO("GF(" << p << "^" << h << ")");
        CHECK(brute_force_irreducible(F.modulus(), p));
    }
}

TEST_CASE("quadratic character agrees with exhaustive squaring") {
    auto F5 = GF::create(5, 1);
    CHECK(F5.quadratic_character(4) == +1); // 4 = 2^2
    CHECK(F5.quadratic_character(0) == 0);

    auto F9 = GF::create(3, 2);
    CHECK(F9.quadratic_character(F9.neg(1)) == +1); // q = 1 mod 4 forces -1 square

    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}}) {
        auto F = GF::create(p, h);
        std::set<GFElem> squares;
        for (std::uint64_t a = 1; a < F.q(); ++a) squares.insert(F.mul(static_cast<GFElem>(a), static_cast<GFElem>(a)));
        for (std::uint64_t a = 0; a < F.q(); ++a) {
            int expected = a == 0 ? 0 : (squares.count(static_cast<GFElem>(a)) ? +1 : -1);
            REQUIRE(F.quadratic_character(static_cast<GFElem>(a)) == expected);
        }
    }
}

TEST_CASE("character is multiplicative on nonzero elements, exhaustively for q <= 121") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}}) {
        auto F = GF::create(p, h);
        for (std::uint64_t a = 1; a < F.q(); ++a)
            for (std::uint64_t b = 1; b < F.q(); ++b)
                REQUIRE(F.quadratic_character(F.mul(static_cast<GFElem>(a), static_cast<GFElem>(b))) ==
                        F.quadratic_character(static_cast<GFElem>(a)) * F.quadratic_character(static_cast<GFElem>(b)));
    }
}

TEST_CASE("quadratic character requires odd order") {
    auto F4 = GF::create(2, 2);
    CHECK_THROWS_AS(F4.quadratic_character(1), Error);
}

TEST_CASE("roots of unity") {
    auto F9 = GF::create(3, 2);
    GFElem z = F9.root_of_unity(4);
    CHECK(F9.pow(z, 4) == 1);
    CHECK(F9.pow(z, 2) != 1);
    CHECK(F9.root_of_unity(1) == 1);

    auto F8 = GF::create(2, 3);
    CHECK(F8.root_of_unity(7) == F8.omega());

    CHECK_THROWS_AS(F9.root_of_unity(5), Error);
}

TEST_CASE("field axioms hold for random triples") {
    SplitMix64 rng(20240817);
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 16}, {2, 8}, {3, 4}, {5, 3}, {65521, 1}, {251, 2}, {65521, 2}}) {
        auto F = GF::create(p, h);
        for (int t = 0; t < 300; ++t) {
            GFElem a = static_cast<GFElem>(rng.below(F.q()));
            GFElem b = static_cast<GFElem>(rng.below(F.q()));
            GFElem c = static_cast<GFElem>(rng.below(F.q()));
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.add(a, F.neg(a)) == 0);
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("coordinate map is a bijection onto GF(p)^h") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 12}, {3, 7}, {5, 4}, {7, 3}}) {
        auto F = GF::create(p, h);
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint64_t x = 0; x < F.q(); ++x) {
            auto c = F.coeffs(static_cast<GFElem>(x));
            REQUIRE(c.size() == h);
            REQUIRE(F.from_coeffs(c) == x);
            seen.insert(c);
        }
        REQUIRE(seen.size() == F.q());
    }
}

TEST_CASE("omega power basis coordinates reconstruct every element") {
    for (auto [p, h] : {std::pair<std::uint32_t, std::uint32_t>{2, 3}, {2, 4}, {3, 2}, {2, 7}, {5, 2}}) {
        auto F = GF::create(p, h);
        for (std::uint64_t x = 0; x < F.q(); ++x) {
            auto c = F.omega_coords(static_cast<GFElem>(x));
            GFElem acc = 0, w = 1;
            for (std::uint32_t i = 0; i < h; ++i) {
                GFElem term = F.mul(static_cast<GFElem>(c[i] % p), w);
                acc = F.add(acc, term);
                w = F.mul(w, F.omega());
            }
            REQUIRE(acc == x);
        }
    }
}

TEST_CASE("subfields are the fixed points of the Frobenius power") {
    auto F9 = GF::create(3, 2);
    CHECK(F9.subfield(1) == std::vector<GFElem>{0, 1, 2});

    auto F16 = GF::create(2, 4);
    auto sub = F16.subfield(2);
    REQUIRE(sub.size() == 4);
    // closed under addition and multiplication
    std::set<GFElem> s(sub.begin(), sub.end());
    for (auto a : sub)
        for (auto b : sub) {
            CHECK(s.count(F16.add(a, b)));
            CHECK(s.count(F16.mul(a, b)));
        }
    CHECK_THROWS_AS(F16.subfield(3), Error);
}
