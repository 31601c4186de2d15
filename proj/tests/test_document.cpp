#include <doctest.h>

#include "pomo/document.hpp"
#include "pomo/errors.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::fixture;
using testsupport::fixture_path;

TEST_CASE("minimal document") {
    auto doc = parse_document("p a\np b\nrel a b\n");
    CHECK(doc.poset.size() == 2);
    CHECK(doc.poset.covers_pair(0, 1));
    CHECK(!doc.values.has_value());
    CHECK(doc.matching.edges.empty());
}

TEST_CASE("fig1 fixture parses fully") {
    auto doc = fixture("fig1.poset");
    CHECK(doc.poset.size() == 9);
    CHECK(doc.matching.edges.size() == 3);
    REQUIRE(doc.values.has_value());
    std::set<std::string> values;
    for (int i = 0; i < doc.poset.size(); ++i)
        values.insert(rational_string(doc.values->at(i)));
    CHECK(values == std::set<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("matching edges must be covers after reduction") {
    // a < c is a relation but not a cover once b sits between
    std::string text = "p a\np b\np c\nrel a b\nrel b c\nrel a c\nm a c\n";
    CHECK_THROWS_AS(parse_document(text), Error);
    try {
        parse_document(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ValidationError);
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_document("p a\nwobble a b\n", "bad");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("bad:2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_document("p a f=zzz\n"), Error);
    CHECK_THROWS_AS(parse_document("p a\np a\n"), Error);
    CHECK_THROWS_AS(parse_document("rel a b\n"), Error);
}

TEST_CASE("A lines must form a down-set") {
    CHECK_THROWS_AS(parse_document("p a\np b\nrel a b\nA b\n"), Error);
    auto doc = parse_document("p a\np b\nrel a b\nA a\n");
    CHECK(doc.has_down_set);
    CHECK(doc.down_set == std::vector<int>{0});
}

TEST_CASE("values must be Morse on the right domain") {
    CHECK_THROWS_AS(parse_document("p a f=1\np b f=0\nrel a b\n"), Error);
    // partial values fail absolutely...
    CHECK_THROWS_AS(parse_document("p a f=0\np b\nrel a b\n"), Error);
    // ...but values on exactly the complement of A are fine
    auto doc = parse_document("p a\np b f=1\nrel a b\nA a\n");
    CHECK(doc.values.has_value());
}

TEST_CASE("serialization round-trips every fixture") {
    for (const auto& name :
         {"fig1.poset", "fig2.poset", "fig3-left.poset", "fig3-right.poset", "fig4-x.poset",
          "fig4-y.poset", "fig4-join.poset", "fig5-left.poset", "fig5-right.poset",
          "fig6.poset"}) {
        auto doc = fixture(name);
        auto text = serialize(doc);
        auto reparsed = parse_document(text, doc.name);
        CHECK(serialize(reparsed) == text);
        CHECK(reparsed.poset.relation_pairs() == doc.poset.relation_pairs());
        CHECK(reparsed.matching.edges == doc.matching.edges);
        CHECK(reparsed.down_set == doc.down_set);
    }
}
