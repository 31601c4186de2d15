#include <doctest.h>

#include "pomo/collapse.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::random_complex;
using testsupport::seeded_rng;

namespace {

SimplicialComplex square() {
    return SimplicialComplex::from_simplices({"a", "b", "c", "d"},
                                             {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

bool is_point(const SimplicialComplex& L) {
    return L.simplex_count() == 1 && L.dimension() == 0;
}

}  // namespace

TEST_CASE("greedy collapse of a full simplex reaches a vertex") {
    auto full = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(is_point(greedy_collapse(full)));
}

TEST_CASE("the 4-cycle has no free faces") {
    auto result = greedy_collapse(square());
    CHECK(result.simplex_count() == square().simplex_count());
}

TEST_CASE("cones collapse to a point greedily") {
    auto rng = seeded_rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        auto base = random_complex(rng, 4 + static_cast<int>(rng() % 3), 4, 3);
        CHECK(is_point(greedy_collapse(cone("apex", base))));
    }
}

TEST_CASE("collapse preserves homology") {
    auto rng = seeded_rng(52);
    for (int trial = 0; trial < 15; ++trial) {
        auto L = random_complex(rng, 5 + static_cast<int>(rng() % 3), 5, 4);
        auto collapsed = greedy_collapse(L);
        CHECK(reduced_homology(L) == reduced_homology(collapsed));
    }
}

TEST_CASE("triviality verdicts") {
    SimplicialComplex empty;
    auto v_empty = triviality_verdict(empty, 1000);
    CHECK(v_empty.status == Triviality::HomologyTrivialUnresolved);
    CHECK(v_empty.empty_complex);

    auto pt = cone("v", empty);
    CHECK(triviality_verdict(pt, 1000).status == Triviality::CollapsibleCertified);

    auto v_circle = triviality_verdict(square(), 1000);
    CHECK(v_circle.status == Triviality::NotTrivial);
    REQUIRE(v_circle.witness.has_value());
    CHECK(v_circle.witness->dim == 1);
    CHECK(v_circle.witness->betti == 1);

    auto disc = cone("v", square());
    CHECK(triviality_verdict(disc, 1000).status == Triviality::CollapsibleCertified);
}

TEST_CASE("budget exhaustion degrades to unresolved, never to a false certificate") {
    auto disc = cone("v", square());
    auto v = triviality_verdict(disc, 0);
    // greedy still certifies without touching the budgeted search
    CHECK(v.status == Triviality::CollapsibleCertified);
}
