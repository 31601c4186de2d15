#include <doctest.h>

#include "pomo/errors.hpp"
#include "pomo/snf.hpp"
#include "support.hpp"

using namespace pomo;
using testsupport::oracle_minor_invariants;
using testsupport::oracle_rank;
using testsupport::random_complex;
using testsupport::seeded_rng;
using testsupport::to_rational;

namespace {

IntMatrix from_dense(const std::vector<std::vector<int>>& rows) {
    IntMatrix M(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c)
            if (rows[r][c] != 0) M.set(r, c, rows[r][c]);
    return M;
}

}  // namespace

TEST_CASE("boundary of a single edge anchors the sign convention") {
    auto edge = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
    auto d1 = boundary_matrix(edge, 1);
    REQUIRE(d1.rows == 2);
    REQUIRE(d1.cols == 1);
    CHECK(d1.at(0, 0) == -1);
    CHECK(d1.at(1, 0) == 1);
}

TEST_CASE("augmentation composes to zero with the edge boundary") {
    auto tri = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto product = multiply(boundary_matrix(tri, 0), boundary_matrix(tri, 1));
    CHECK(product.is_zero());
}

TEST_CASE("boundary squared vanishes on random complexes") {
    auto rng = seeded_rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto L = random_complex(rng, 5 + static_cast<int>(rng() % 3), 4, 4);
        for (int d = 1; d <= L.dimension(); ++d) {
            auto product = multiply(boundary_matrix(L, d - 1), boundary_matrix(L, d));
            CHECK(product.is_zero());
        }
    }
    CHECK_THROWS_AS(boundary_matrix(SimplicialComplex{}, 0), Error);
}

TEST_CASE("smith normal form of pinned examples") {
    auto s = smith_normal_form(from_dense({{2, 4}, {4, 4}}));
    CHECK(s.rank == 2);
    REQUIRE(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 2);
    CHECK(s.invariant_factors[1] == 4);
    CHECK(s.torsion() == std::vector<Integer>{2, 4});

    auto diag = smith_normal_form(from_dense({{6, 0}, {0, 4}}));
    CHECK(diag.invariant_factors == std::vector<Integer>{2, 12});

    auto zero = smith_normal_form(from_dense({{0, 0}, {0, 0}}));
    CHECK(zero.rank == 0);

    auto single = smith_normal_form(from_dense({{5}}));
    CHECK(single.invariant_factors == std::vector<Integer>{5});
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    auto rng = seeded_rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const int R = 1 + static_cast<int>(rng() % 4);
        const int C = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> rows(R, std::vector<int>(C));
        std::vector<std::vector<Integer>> dense(R, std::vector<Integer>(C));
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) {
                rows[r][c] = static_cast<int>(rng() % 9) - 4;
                dense[r][c] = rows[r][c];
            }
        auto s = smith_normal_form(from_dense(rows));
        auto expected = oracle_minor_invariants(dense);
        REQUIRE(s.rank == static_cast<int>(expected.size()));
        for (int k = 0; k < s.rank; ++k)
            CHECK(s.invariant_factors[k] == boost::multiprecision::abs(expected[k]));
    }
}

TEST_CASE("smith rank agrees with rational elimination on larger matrices") {
    auto rng = seeded_rng(33);
    for (int trial = 0; trial < 15; ++trial) {
        const int R = 4 + static_cast<int>(rng() % 6);
        const int C = 4 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> rows(R, std::vector<int>(C));
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) rows[r][c] = static_cast<int>(rng() % 7) - 3;
        auto M = from_dense(rows);
        CHECK(smith_normal_form(M).rank == oracle_rank(to_rational(M)));
    }
}
