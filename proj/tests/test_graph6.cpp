#include <doctest.h>

#include <random>

#include "graphspark/families.hpp"
#include "graphspark/graph6.hpp"
#include "graphspark/random_gen.hpp"
#include "test_helpers.hpp"

using namespace graphspark;

TEST_CASE("decodes the 5-vertex star D?{") {
    // Frozen against an independent decoder: vertex 4 adjacent to all others.
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(g.has_edge(v, 4));
        CHECK(g.degree(v) == 1);
    }
    CHECK(encode_graph6(g) == "D?{");
}

TEST_CASE("decodes the one-vertex graph @") {
    Graph g = parse_graph6("@");
    CHECK(g.order() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(encode_graph6(g) == "@");
}

TEST_CASE("frozen encodings from an independent encoder") {
    CHECK(encode_graph6(generate(FamilySpec::parse("path:5"))) == "DhC");
    CHECK(encode_graph6(generate(FamilySpec::parse("cycle:4"))) == "Cl");
    CHECK(encode_graph6(generate(FamilySpec::parse("kbip:2,3"))) == "D]o");
    CHECK(encode_graph6(generate(FamilySpec::parse("friendship:3"))) == "F{eCG");
    CHECK(encode_graph6(generate(FamilySpec::parse("cart:(cycle:4)x(path:2)"))) == "GrG[QK");
    CHECK(encode_graph6(generate(FamilySpec::parse("path:13"))) == "LhCGGC@?G?_@?@");
    CHECK(encode_graph6(oracle::five_cycle_chords_graph()) == "Dxs");
}

TEST_CASE("parse accepts the >>graph6<< header and trailing newline") {
    CHECK(parse_graph6(">>graph6<<D?{") == parse_graph6("D?{"));
    CHECK(parse_graph6("D?{\n") == parse_graph6("D?{"));
}

TEST_CASE("round trip on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> ord(1, 40);
        Graph g = random_graph(rng, ord(rng));
        Graph back = parse_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("encode(parse(t)) is the identity on canonical lines") {
    for (const char* line : {"D?{", "@", "DhC", "Cl", "D]o", "F{eCG", "GrG[QK", "Dxs",
                             "LhCGGC@?G?_@?@", "Cs", "A_", "B?", "C`"})
        CHECK(encode_graph6(parse_graph6(line)) == line);
}

TEST_CASE("parse errors name the byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);       // truncated bit body
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);   // sparse6
    CHECK_THROWS_AS(parse_graph6("D? {"), ParseError);     // byte below 63
    CHECK_THROWS_AS(parse_graph6("?"), DomainError);       // order-0 graph

    try {
        parse_graph6("D?\x1f");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
    try {
        parse_graph6("D?");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("nonzero padding is rejected") {
    // n=5 uses 10 of 12 bits; "D?|" flips one of the two padding bits of "D?{".
    CHECK(parse_graph6("D?{").order() == 5);
    CHECK_THROWS_AS(parse_graph6("D?|"), ParseError);
}

TEST_CASE("multi-byte order header round trips") {
    for (int n : {63, VertexSet::capacity()}) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        std::string enc = encode_graph6(g);
        CHECK(enc.substr(0, 1) == "~");
        CHECK(parse_graph6(enc) == g);
    }
    // orders beyond the configured capacity are rejected, not truncated
    Graph big(VertexSet::capacity());
    std::string enc = encode_graph6(big);
    enc[3] = static_cast<char>(enc[3] + 1); // bump the order header
    CHECK_THROWS_AS(parse_graph6(enc), CapacityError);
}
