#include <random>

#include "doctest.h"
#include "sally/errors.hpp"
#include "sally/ring_lang.hpp"
#include "properties.hpp"

using namespace sally;

namespace {

ParseError parse_error(const std::string& text) {
    try {
        parse_source(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parse a small file") {
    auto src = parse_source("char 101\nvars x y\nideal I = x^2, x*y, y^2\n");
    REQUIRE(src.find("I"));
    const IdealHandle& I = *src.find("I");
    CHECK(src.ring->characteristic() == 101);
    CHECK(I.gens().size() == 3);
    for (const Poly& g : I.gens()) {
        CHECK(g.is_homogeneous());
        CHECK(g.degree() == 2);
    }
    CHECK(src.ring->defining().empty());
}

TEST_CASE("grammar details") {
    auto src = parse_source(
        "# header comment\n"
        "char 7\n"
        "vars x y z   # trailing comment\n"
        "order lex\n"
        "mod x y - z^2\n"
        "ideal J = -3x^2 + 2 x*y, z y\n"
        "expect e0 = -4\n");
    const RingSpec& ring = *src.ring;
    CHECK(ring.poly_ring()->order == MonomialOrder::lex());
    REQUIRE(ring.defining().size() == 1);
    Poly x = ring.variable(0), y = ring.variable(1), z = ring.variable(2);
    CHECK(ring.defining()[0] == x * y - z * z);
    const IdealHandle& J = *src.find("J");
    CHECK(J.gens()[0] == (x * x).scaled(4) + (x * y).scaled(2));  // -3 = 4 mod 7
    CHECK(J.gens()[1] == y * z);
    CHECK(src.expected.at("e0") == -4);

    // large literals reduce mod p; a^k on integers is a power
    auto big = parse_source("char 7\nvars x\nideal I = 15x, 2^3 x\n");
    CHECK(big.find("I")->gens()[0] == Poly::variable(big.ring->poly_ring(), 0));
    CHECK(big.find("I")->gens()[1] == Poly::variable(big.ring->poly_ring(), 0));
}

TEST_CASE("parse errors carry positions") {
    auto e = parse_error("char 101\nvars x y\nideal I = x^2 + y\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
    CHECK(e.message().find("non-homogeneous") != std::string::npos);

    e = parse_error("char 101\nvars x y\nideal I = x*w\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 13);
    CHECK(e.message().find("unknown variable") != std::string::npos);

    e = parse_error("char 100\nvars x\n");
    CHECK(e.line() == 1);
    CHECK(e.message().find("not a prime") != std::string::npos);

    e = parse_error("char 101\nvars x y\nideal I = x\nideal I = y\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
    CHECK(e.message().find("duplicate ideal") != std::string::npos);

    e = parse_error("char 101\nvars x y\nideal I = x +\n");
    CHECK(e.line() == 3);
    CHECK(e.message().find("syntax error") != std::string::npos);

    e = parse_error("char 101\nvars x y\nideal I = (x)\n");
    CHECK(e.column() == 11);

    CHECK(parse_error("vars x\n").message().find("missing char") != std::string::npos);
    CHECK(parse_error("char 5\nvars x\nmod x\n").message().find("dimension") != std::string::npos);
    CHECK(parse_error("char 5\nvars x\nideal I = x^300\n").message().find("exponent") != std::string::npos);
}

TEST_CASE("catalog round-trips") {
    auto t = testing::catalog_round_trip();
    for (const auto& f : t.failures) FAIL_CHECK(f);
    CHECK(t.cases >= 24);
    for (const auto& inst : catalog())
        if (inst.ring->defining().empty()) CHECK(serialize(inst).find("\nmod ") == std::string::npos);
}

TEST_CASE("missing I or Q") {
    auto src = parse_source("char 5\nvars x y\nideal I = x, y\n");
    CHECK_THROWS_AS(to_instance(src, "t"), ParseError);
}

TEST_CASE("fuzzed inputs only produce parse errors") {
    auto t = testing::parser_fuzz(99, 3000);
    for (const auto& f : t.failures) FAIL_CHECK(f);
    CHECK(t.cases >= 3000);
}
