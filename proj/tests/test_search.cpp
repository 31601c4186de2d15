#include <doctest.h>

#include "pomo/errors.hpp"
#include "pomo/search.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::fixture;
using testsupport::random_poset;
using testsupport::seeded_rng;

namespace {

Poset circle4() {
    return Poset::from_relations({"a", "b", "c", "d"},
                                 {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// independent oracle: enumerate every subset of cover edges and validate it
// directly (no pruning, no pool precomputation)
int oracle_min_critical(const Poset& X, Mode mode) {
    auto covers = X.cover_pairs();
    const int m = static_cast<int>(covers.size());
    REQUIRE(m <= 16);
    int best = X.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Matching M;
        std::vector<bool> used(X.size(), false);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            auto [a, b] = covers[i];
            if (used[a] || used[b]) ok = false;
            used[a] = used[b] = true;
            M.edges.push_back(covers[i]);
        }
        if (!ok) continue;
        MorseFunction f;
        try {
            f = synthesize_function(X, M);
        } catch (const Error&) {
            continue;  // cyclic or unsynthesizable: admissible for no function
        }
        if (validate_matching(X, f, M, mode).accepted)
            best = std::min(best, X.size() - 2 * static_cast<int>(M.edges.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("greedy on a 2-chain: strict finds nothing, permissive matches the pair") {
    auto X = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    auto h = height_function(X);
    CHECK(greedy_matching(X, h, ScanOrder::Lex).edges.empty());
    auto permissive = greedy_matching(X, h, ScanOrder::Lex, 0, Mode::Permissive);
    CHECK(permissive.edges.size() == 1);
}

TEST_CASE("greedy with lex order finds a 2-critical matching on fig5-right") {
    auto doc = fixture("fig5-right.poset");
    auto M = greedy_matching(doc.poset, *doc.values, ScanOrder::Lex);
    CHECK(M.edges.size() == 3);
    auto rep = validate_matching(doc.poset, *doc.values, M, Mode::Strict);
    CHECK(rep.accepted);
    CHECK(rep.critical.size() == 2);
}

TEST_CASE("greedy on chain-cones reaches one critical point") {
    // odd-length chains are the clean case: the cone over a chain is again a
    // chain, and greedy pairs everything above the bottom
    for (int n : {3, 5, 7, 9}) {
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> rels;
        for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
        for (int i = 0; i + 1 < n; ++i) rels.emplace_back(names[i], names[i + 1]);
        auto X = Poset::from_relations(names, rels);
        auto M = greedy_matching(X, height_function(X), ScanOrder::Lex);
        CHECK(X.size() - 2 * static_cast<int>(M.edges.size()) == 1);
    }
}

TEST_CASE("greedy output always re-validates on cone posets") {
    // a maximum does not guarantee admissible edges (a cone over an
    // antichain has none: every deleted top link is a disjoint point set),
    // so only validity and parity are asserted here
    auto rng = seeded_rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto base = random_poset(rng, 2 + static_cast<int>(rng() % 5), 0.35);
        auto top = Poset::from_relations({"TOP"}, {});
        auto X = join(base, top);
        auto M = greedy_matching(X, height_function(X), ScanOrder::Lex);
        const int critical = X.size() - 2 * static_cast<int>(M.edges.size());
        CHECK(critical >= 0);
        CHECK((X.size() - critical) % 2 == 0);
        CHECK(validate_matching(X, height_function(X), M, Mode::Strict).accepted);
    }

    auto fan = join(Poset::from_relations({"a", "b", "c", "d"}, {}),
                    Poset::from_relations({"TOP"}, {}));
    CHECK(greedy_matching(fan, height_function(fan), ScanOrder::Lex).edges.empty());
}

TEST_CASE("exhaustive minimum on the circle model is two critical points") {
    auto result = exhaustive_min(circle4());
    CHECK(result.certified);
    CHECK(result.critical_count == 2);
    CHECK(result.critical_count == oracle_min_critical(circle4(), Mode::Strict));
}

TEST_CASE("exhaustive minimum matches the brute-force oracle on random posets") {
    auto rng = seeded_rng(72);
    int checked = 0;
    for (int trial = 0; trial < 30 && checked < 12; ++trial) {
        auto P = random_poset(rng, 2 + static_cast<int>(rng() % 5), 0.4);
        if (P.cover_pairs().size() > 12) continue;
        ++checked;
        for (Mode mode : {Mode::Strict, Mode::Permissive}) {
            auto result = exhaustive_min(P, 12, mode);
            CHECK(result.critical_count == oracle_min_critical(P, mode));
        }
    }
    CHECK(checked >= 8);
}

TEST_CASE("fig5-left optima: 4 critical points permissively, 6 strictly") {
    auto doc = fixture("fig5-left.poset");
    auto permissive = exhaustive_min(doc.poset, 12, Mode::Permissive);
    CHECK(permissive.certified);
    CHECK(permissive.critical_count == 4);
    auto strict = exhaustive_min(doc.poset, 12, Mode::Strict);
    CHECK(strict.critical_count == 6);
}

TEST_CASE("search result chain: exhaustive <= minimize <= greedy") {
    auto rng = seeded_rng(73);
    for (int trial = 0; trial < 8; ++trial) {
        auto P = random_poset(rng, 3 + static_cast<int>(rng() % 6), 0.35);
        auto h = height_function(P);
        auto greedy = greedy_matching(P, h, ScanOrder::Lex);
        const int greedy_critical = P.size() - 2 * static_cast<int>(greedy.edges.size());
        auto mini = minimize_critical(P, 8, 7);
        auto exact = exhaustive_min(P);
        CHECK(exact.critical_count <= mini.critical_count);
        CHECK(mini.critical_count <= greedy_critical);
        // parity invariant
        CHECK((P.size() - exact.critical_count) % 2 == 0);
        CHECK(exact.critical_count >= 0);
    }
}

TEST_CASE("fixed seeds reproduce results") {
    auto doc = fixture("fig5-left.poset");
    auto a = minimize_critical(doc.poset, 16, 42);
    auto b = minimize_critical(doc.poset, 16, 42);
    CHECK(a.best.edges == b.best.edges);
    CHECK(a.critical_count == b.critical_count);
    CHECK(a.candidates == b.candidates);
}

TEST_CASE("exhaustive rejects oversized inputs") {
    auto rng = seeded_rng(74);
    auto P = random_poset(rng, 13, 0.3);
    CHECK_THROWS_AS(exhaustive_min(P), Error);
}

TEST_CASE("emitted matchings re-validate under their synthesized function") {
    auto rng = seeded_rng(75);
    for (int trial = 0; trial < 6; ++trial) {
        auto P = random_poset(rng, 3 + static_cast<int>(rng() % 7), 0.3);
        auto result = minimize_critical(P, 8, trial);
        auto rep = validate_matching(P, result.function, result.best, Mode::Strict);
        CHECK(rep.accepted);
    }
}
