#pragma once

// Test-only helpers: independent oracles and random generators. Everything
// here deliberately avoids the library's computation paths it is used to
// check (rational elimination instead of SNF, subset scans instead of the
// chain enumerator, explicit path walks instead of the DAG check).

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pomo/document.hpp"
#include "pomo/morse.hpp"
#include "pomo/numbers.hpp"
#include "pomo/poset.hpp"
#include "pomo/snf.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(POMO_FIXTURE_DIR) + "/" + name;
}

inline pomo::PosetDocument fixture(const std::string& name) {
    return pomo::load_document(fixture_path(name));
}

// rank over Q by plain Gaussian elimination on a dense rational matrix
inline int oracle_rank(std::vector<std::vector<pomo::Rational>> m) {
    const int R = static_cast<int>(m.size());
    const int C = R ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int pivot = -1;
        for (int r = rank; r < R; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < R; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            pomo::Rational factor = m[r][col] / m[rank][col];
            for (int c = col; c < C; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<pomo::Rational>> to_rational(const pomo::IntMatrix& M) {
    std::vector<std::vector<pomo::Rational>> m(M.rows,
                                               std::vector<pomo::Rational>(M.cols, 0));
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) m[r][c] = pomo::Rational(v);
    return m;
}

// invariant factors via d_k = gcd of all k x k minors (tiny matrices only)
inline std::vector<pomo::Integer> oracle_minor_invariants(
    const std::vector<std::vector<pomo::Integer>>& m) {
    using pomo::Integer;
    const int R = static_cast<int>(m.size());
    const int C = R ? static_cast<int>(m[0].size()) : 0;

    auto determinant = [](auto&& self, const std::vector<std::vector<Integer>>& a) -> Integer {
        const int n = static_cast<int>(a.size());
        if (n == 1) return a[0][0];
        Integer det = 0;
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<Integer>> minor;
            for (int r = 1; r < n; ++r) {
                std::vector<Integer> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Integer term = a[0][j] * self(self, minor);
            det += (j % 2 == 0) ? term : -term;
        }
        return det;
    };

    std::vector<Integer> gcds;  // gcd of k-minors, k = 1..
    for (int k = 1; k <= std::min(R, C); ++k) {
        Integer g = 0;
        // enumerate k-subsets of rows and columns
        std::vector<int> ridx(k), cidx(k);
        std::iota(ridx.begin(), ridx.end(), 0);
        bool rows_done = false;
        while (!rows_done) {
            std::iota(cidx.begin(), cidx.end(), 0);
            bool cols_done = false;
            while (!cols_done) {
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[ridx[i]][cidx[j]];
                g = boost::multiprecision::gcd(g, determinant(determinant, sub));
                // next column combination
                int pos = k - 1;
                while (pos >= 0 && cidx[pos] == C - k + pos) --pos;
                if (pos < 0) {
                    cols_done = true;
                } else {
                    ++cidx[pos];
                    for (int q = pos + 1; q < k; ++q) cidx[q] = cidx[q - 1] + 1;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && ridx[pos] == R - k + pos) --pos;
            if (pos < 0) {
                rows_done = true;
            } else {
                ++ridx[pos];
                for (int q = pos + 1; q < k; ++q) ridx[q] = ridx[q - 1] + 1;
            }
        }
        if (g == 0) break;
        gcds.push_back(g);
    }

    std::vector<Integer> factors;
    for (std::size_t k = 0; k < gcds.size(); ++k)
        factors.push_back(k == 0 ? gcds[0] : gcds[k] / gcds[k - 1]);
    return factors;
}

// every non-empty subset that is totally ordered, by brute force
inline std::set<std::vector<int>> oracle_chains(const pomo::Poset& X) {
    std::set<std::vector<int>> chains;
    const int n = X.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        bool chain = true;
        for (std::size_t i = 0; i < subset.size() && chain; ++i)
            for (std::size_t j = i + 1; j < subset.size() && chain; ++j)
                if (!X.comparable(subset[i], subset[j])) chain = false;
        if (chain) chains.insert(subset);
    }
    return chains;
}

// directed-path check of the interval property by explicit DFS enumeration
inline bool oracle_path_property(const pomo::Poset& X, const pomo::MorseFunction& f,
                                 const pomo::Matching& M) {
    auto G = pomo::reversed_digraph(X, M);
    const int n = G.n;
    bool ok = true;
    std::vector<int> path;
    auto walk = [&](auto&& self, int v) -> void {
        if (!ok) return;
        path.push_back(v);
        if (path.size() >= 2) {
            for (int z = 0; z < n && ok; ++z) {
                if (f.at(path.front()) < f.at(z) && f.at(z) < f.at(path.back())) ok = false;
            }
        }
        // paths in an acyclic digraph: no revisit bookkeeping needed
        for (int w : G.out[v]) self(self, w);
        path.pop_back();
    };
    for (int v = 0; v < n && ok; ++v) walk(walk, v);
    return ok;
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// random poset on n elements: random up-edges on an index linear extension
inline pomo::Poset random_poset(std::mt19937_64& rng, int n, double edge_prob) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) pairs.emplace_back(names[i], names[j]);
    return pomo::Poset::from_relations(names, pairs);
}

// random complex from random facets over v vertices
inline pomo::SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int facets,
                                              int max_facet) {
    std::vector<std::string> names;
    for (int i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<int> size_dist(1, max_facet);
    std::uniform_int_distribution<int> vert_dist(0, vertices - 1);
    std::vector<pomo::Simplex> sims;
    for (int k = 0; k < facets; ++k) {
        std::set<int> facet;
        const int target = size_dist(rng);
        while (static_cast<int>(facet.size()) < target) facet.insert(vert_dist(rng));
        sims.emplace_back(facet.begin(), facet.end());
    }
    return pomo::SimplicialComplex::from_simplices(names, sims);
}

}  // namespace testsupport
