#include <doctest.h>

#include <set>

#include "pomo/complex.hpp"
#include "pomo/errors.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::oracle_chains;
using testsupport::random_poset;
using testsupport::seeded_rng;

namespace {

Poset circle4() {
    return Poset::from_relations({"a", "b", "c", "d"},
                                 {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("order complex of a chain is a full simplex") {
    auto X = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto K = order_complex(X);
    CHECK(K.simplex_count() == 7);
    CHECK(K.dimension() == 2);
    CHECK(K.count_in_dim(2) == 1);
}

TEST_CASE("order complex of the 4-point circle model") {
    auto K = order_complex(circle4());
    CHECK(K.count_in_dim(0) == 4);
    CHECK(K.count_in_dim(1) == 4);
    CHECK(K.dimension() == 1);
}

TEST_CASE("chain enumeration agrees with the subset oracle") {
    auto rng = seeded_rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto P = random_poset(rng, 1 + static_cast<int>(rng() % 9), 0.35);
        auto K = order_complex(P);
        auto expected = oracle_chains(P);
        std::set<Simplex> got;
        for (const auto& s : K.all_simplices()) got.insert(s);
        CHECK(got == expected);
    }
}

TEST_CASE("cone construction") {
    SimplicialComplex empty;
    auto pt = cone("v", empty);
    CHECK(pt.simplex_count() == 1);
    CHECK(pt.dimension() == 0);

    auto two = SimplicialComplex::from_simplices({"a", "b"}, {{0}, {1}});
    auto path = cone("v", two);
    CHECK(path.count_in_dim(0) == 3);
    CHECK(path.count_in_dim(1) == 2);

    CHECK_THROWS_AS(cone("a", two), Error);
}

TEST_CASE("euler characteristics") {
    SimplicialComplex empty;
    CHECK(empty.euler_characteristic() == 0);
    auto pt = cone("v", empty);
    CHECK(pt.euler_characteristic() == 1);
    CHECK(order_complex(circle4()).euler_characteristic() == 0);
}

TEST_CASE("face poset of a single edge") {
    auto edge = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
    auto P = face_poset(edge);
    CHECK(P.size() == 3);
    CHECK(P.less(P.index_of("{a}"), P.index_of("{a,b}")));
    CHECK(P.less(P.index_of("{b}"), P.index_of("{a,b}")));
    CHECK(!P.comparable(P.index_of("{a}"), P.index_of("{b}")));
}

TEST_CASE("barycentric subdivision of the triangle boundary is a hexagon") {
    auto P = face_poset(triangle_boundary());
    CHECK(P.size() == 6);
    auto sd = order_complex(P);
    CHECK(sd.count_in_dim(0) == 6);
    CHECK(sd.count_in_dim(1) == 6);
    CHECK(sd.dimension() == 1);
}

TEST_CASE("simplicial join matches the order complex of the poset join") {
    auto labels = [](const SimplicialComplex& L) {
        std::set<std::string> out;
        for (const auto& s : L.all_simplices()) out.insert(L.simplex_label(s));
        return out;
    };
    auto rng = seeded_rng(22);
    for (int trial = 0; trial < 12; ++trial) {
        auto A = random_poset(rng, 1 + static_cast<int>(rng() % 4), 0.4);
        auto B = random_poset(rng, 1 + static_cast<int>(rng() % 4), 0.4);
        // random_poset reuses e0, e1, ... so join always prefixes L./R.
        auto from_posets = order_complex(join(A, B));

        // K(A) * K(B) built directly, with the same renaming
        std::vector<std::string> a_names, b_names;
        for (const auto& nm : A.elements()) a_names.push_back("L." + nm);
        for (const auto& nm : B.elements()) b_names.push_back("R." + nm);
        auto KA = SimplicialComplex::from_simplices(a_names, order_complex(A).all_simplices());
        auto KB = SimplicialComplex::from_simplices(b_names, order_complex(B).all_simplices());
        auto direct = simplicial_join(KA, KB);

        CHECK(labels(from_posets) == labels(direct));
    }
}
