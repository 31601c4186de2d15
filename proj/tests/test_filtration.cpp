#include <doctest.h>

#include "pomo/errors.hpp"
#include "pomo/filtration.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::fixture;

namespace {

Matching edges_of(const Poset& X, std::vector<std::pair<std::string, std::string>> named) {
    Matching M;
    for (const auto& [a, b] : named) M.edges.emplace_back(X.index_of(a), X.index_of(b));
    M.canonicalize();
    return M;
}

std::vector<std::string> step_strings(const Poset& X, const RemovalTrace& trace) {
    std::vector<std::string> out;
    for (const auto& s : trace.steps) {
        if (s.is_pair)
            out.push_back("P(" + X.name_of(s.x) + "," + X.name_of(s.y) + ")");
        else
            out.push_back("C(" + X.name_of(s.x) + ")");
    }
    return out;
}

}  // namespace

TEST_CASE("antichain trace removes criticals in display order") {
    auto X = Poset::from_relations({"a", "b", "c"}, {});
    auto trace = removal_trace(X, height_function(X), Matching{});
    CHECK(step_strings(X, trace) == std::vector<std::string>{"C(a)", "C(b)", "C(c)"});
}

TEST_CASE("fully matched 2-chain empties through one pair removal") {
    auto X = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    auto trace = removal_trace(X, height_function(X), edges_of(X, {{"a", "b"}}));
    CHECK(step_strings(X, trace) == std::vector<std::string>{"P(a,b)"});
}

TEST_CASE("fig1 removal trace matches the theorem's procedure step by step") {
    auto doc = fixture("fig1.poset");
    auto trace = removal_trace(doc.poset, *doc.values, doc.matching);
    CHECK(step_strings(doc.poset, trace) ==
          std::vector<std::string>{"C(t1)", "P(m3,t2)", "C(m2)", "P(b3,t3)", "P(b1,m1)",
                                   "C(b2)"});
    // the last removal is a critical point of height 0
    CHECK(doc.poset.height_of(trace.steps.back().x) == 0);
}

TEST_CASE("fig1 filtration stages") {
    auto doc = fixture("fig1.poset");
    auto trace = removal_trace(doc.poset, *doc.values, doc.matching);
    auto F = build_filtration(trace, doc.poset, *doc.values, doc.matching);
    REQUIRE(F.levels.size() == 4);  // t = 0, 1, 2, 3

    // X_0 is the single critical point of minimum value
    CHECK(doc.poset.names_of(F.levels[0].lower) == std::vector<std::string>{"b2"});
    // no critical level is crossed at t=1
    CHECK(F.levels[1].critical.empty());
    // X_2 is a model of a wedge of two circles
    auto X2 = order_complex(doc.poset, F.levels[2].lower);
    CHECK(X2.euler_characteristic() == -1);
    auto h2 = reduced_homology(X2);
    CHECK(h2.betti(0) == 0);
    CHECK(h2.betti(1) == 2);
    // the critical point at t=2 cones over three isolated points
    REQUIRE(F.levels[2].critical.size() == 1);
    CHECK(F.levels[2].critical[0].link.size() == 3);
    CHECK(F.levels[2].critical[0].link_homology.betti(0) == 2);

    auto verify = verify_filtration(F);
    CHECK(verify.all_ok);
    CHECK(verify.global_euler_ok);
    // chi identity: 1 = 0 + [1 + (1-3) + (1-(-1))]
    CHECK(verify.chi_total == 1);
    CHECK(verify.chi_base == 0);
    CHECK(verify.cone_contribution == 1);
    CHECK(verify.final_matches_direct);
}

TEST_CASE("fig2 has no critical values strictly between 2 and 5") {
    auto doc = fixture("fig2.poset");
    auto trace = removal_trace(doc.poset, *doc.values, doc.matching);
    auto F = build_filtration(trace, doc.poset, *doc.values, doc.matching);
    for (const auto& level : F.levels) {
        if (level.t > Rational(2) && level.t < Rational(5)) CHECK(level.critical.empty());
    }
    CHECK(verify_filtration(F).all_ok);
}

TEST_CASE("relative filtration starts at A") {
    auto doc = fixture("fig6.poset");
    auto down = std::optional<std::vector<int>>(doc.down_set);
    auto trace = removal_trace(doc.poset, *doc.values, doc.matching, down);
    auto F = build_filtration(trace, doc.poset, *doc.values, doc.matching, down);
    CHECK(F.relative);
    CHECK(F.base.size() == 4);
    // base is a model of the circle
    auto hA = reduced_homology(order_complex(doc.poset, F.base));
    CHECK(hA.betti(1) == 1);

    auto verify = verify_filtration(F);
    CHECK(verify.all_ok);
    // chi(RP^2) = 1 = chi(S^1) + (1 - chi(S^1 link))
    CHECK(verify.chi_total == 1);
    CHECK(verify.chi_base == 0);
    CHECK(verify.cone_contribution == 1);
}

TEST_CASE("relative filtration with A = X is the single base stage") {
    auto X = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    std::vector<int> all = {0, 1};
    auto down = std::optional<std::vector<int>>(all);
    MorseFunction none = MorseFunction::total(2);  // no values needed: empty domain
    auto trace = removal_trace(X, none, Matching{}, down);
    CHECK(trace.steps.empty());
    auto F = build_filtration(trace, X, none, Matching{}, down);
    CHECK(F.levels.empty());
    auto verify = verify_filtration(F);
    CHECK(verify.all_ok);
    CHECK(verify.final_matches_direct);
}

TEST_CASE("permissive zero-critical matching breaks the global euler identity") {
    // the documented divergence: a pendant pair glues a cone over an empty
    // link, which the chi bookkeeping is designed to expose
    auto X = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    auto M = edges_of(X, {{"a", "b"}});
    auto trace = removal_trace(X, height_function(X), M);
    auto F = build_filtration(trace, X, height_function(X), M);
    auto verify = verify_filtration(F);
    CHECK(!verify.global_euler_ok);
    CHECK(!verify.all_ok);
}

TEST_CASE("cw summary on fig3-left reports the non-spherical link") {
    auto doc = fixture("fig3-left.poset");
    auto trace = removal_trace(doc.poset, *doc.values, doc.matching);
    auto F = build_filtration(trace, doc.poset, *doc.values, doc.matching);
    auto cw = cw_summary(F);
    REQUIRE(cw.entries.size() == 2);
    CHECK(!cw.all_spherical);
    bool saw_wedge = false;
    for (const auto& e : cw.entries) {
        if (doc.poset.name_of(e.element) == "x") {
            CHECK(e.cls.kind == CwClass::Other);
            CHECK(e.link_homology.betti(1) == 2);  // S^1 v S^1
            saw_wedge = true;
        }
    }
    CHECK(saw_wedge);
}

TEST_CASE("cw summary: face poset of the triangle boundary gives the circle's morse vector") {
    auto tri = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto P = face_poset(tri);
    auto trace = removal_trace(P, height_function(P), Matching{});
    auto F = build_filtration(trace, P, height_function(P), Matching{});
    auto cw = cw_summary(F);
    CHECK(cw.all_spherical);
    REQUIRE(cw.cells.size() >= 2);
    CHECK(cw.cells[0] == 3);
    CHECK(cw.cells[1] == 3);
    CHECK(cw.morse_inequalities_ok);
}

TEST_CASE("cw summary: trivial links above height zero give the discrete verdict") {
    auto X = Poset::from_relations({"a", "c"}, {{"a", "c"}});
    auto trace = removal_trace(X, height_function(X), Matching{});
    auto F = build_filtration(trace, X, height_function(X), Matching{});
    auto cw = cw_summary(F);
    CHECK(cw.discrete_space);
    CHECK(cw.component_count == 1);
}
