#include "pomo/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "pomo/errors.hpp"

namespace pomo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Condition (1) is function-independent, so verdicts are shared across a
// whole search via this cache.
class Condition1Cache {
public:
    Condition1Cache(const Poset& X, long long budget) : X_(X), budget_(budget) {}

    bool passes(std::pair<int, int> edge, Mode mode) {
        auto it = verdicts_.find(edge);
        if (it == verdicts_.end()) {
            std::vector<int> link;
            for (int v : X_.principal_down(edge.second, true))
                if (v != edge.first) link.push_back(v);
            it = verdicts_
                     .emplace(edge, triviality_verdict(order_complex(X_, link), budget_))
                     .first;
        }
        switch (it->second.status) {
            case Triviality::CollapsibleCertified: return true;
            case Triviality::NotTrivial: return false;
            case Triviality::HomologyTrivialUnresolved: return mode == Mode::Permissive;
        }
        return false;
    }

private:
    const Poset& X_;
    long long budget_;
    std::map<std::pair<int, int>, TrivialityVerdict> verdicts_;
};

bool matching_acyclic(const Poset& X, const std::vector<std::pair<int, int>>& edges) {
    Matching M{edges};
    return is_acyclic(X, M).acyclic;
}

// Acyclicity of the matched-pair contraction of the up-oriented cover
// digraph: exactly the synthesizability condition.
bool contraction_acyclic(const Poset& X, const std::vector<std::pair<int, int>>& edges) {
    const int n = X.size();
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    for (const auto& [x, y] : edges) {
        rep[x] = std::min(x, y);
        rep[y] = std::min(x, y);
    }
    std::vector<std::set<int>> succ(n);
    for (const auto& [a, b] : X.cover_pairs())
        if (rep[a] != rep[b]) succ[rep[a]].insert(rep[b]);

    std::vector<int> state(n, 0);
    bool cyclic = false;
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (int w : succ[v]) {
            if (state[w] == 1) cyclic = true;
            if (state[w] == 0) self(self, w);
            if (cyclic) return;
        }
        state[v] = 2;
    };
    for (int i = 0; i < n && !cyclic; ++i)
        if (rep[i] == i && state[i] == 0) dfs(dfs, i);
    return !cyclic;
}

}  // namespace

Matching greedy_matching(const Poset& X, const MorseFunction& f, ScanOrder order,
                         std::uint64_t seed, Mode mode, long long budget) {
    auto fcheck = validate_function(X, f);
    if (!fcheck.ok)
        fail(ErrorKind::ValidationError, "greedy_matching requires a valid Morse function");

    auto edges = X.cover_pairs();
    switch (order) {
        case ScanOrder::Lex: break;  // already (lower, upper)-sorted
        case ScanOrder::ByF:
            std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
                if (f.at(a.first) != f.at(b.first)) return f.at(a.first) < f.at(b.first);
                return f.at(a.second) < f.at(b.second);
            });
            break;
        case ScanOrder::Random: {
            std::mt19937_64 rng(seed);
            std::shuffle(edges.begin(), edges.end(), rng);
            break;
        }
    }

    Condition1Cache cond1(X, budget);
    Matching M;
    std::vector<bool> used(X.size(), false);
    for (const auto& e : edges) {
        if (used[e.first] || used[e.second]) continue;
        if (!cond1.passes(e, mode)) continue;

        // condition (2) under the given function
        bool cond2 = true;
        for (int z = 0; z < X.size() && cond2; ++z) {
            if (z == e.first || z == e.second) continue;
            if (f.at(e.first) < f.at(z) && f.at(z) < f.at(e.second)) cond2 = false;
        }
        if (!cond2) continue;

        auto tentative = M.edges;
        tentative.push_back(e);
        if (!matching_acyclic(X, tentative)) continue;

        M.edges = std::move(tentative);
        used[e.first] = used[e.second] = true;
    }
    M.canonicalize();
    return M;
}

namespace {

// Greedy construction in the synthesized-function regime: condition (2) is
// discharged later by synthesize_function, so an edge only needs condition
// (1), the matching property, H_M-acyclicity and a synthesizable
// contraction.
Matching greedy_for_synthesis(const Poset& X, std::vector<std::pair<int, int>> edges,
                              Condition1Cache& cond1, Mode mode) {
    Matching M;
    std::vector<bool> used(X.size(), false);
    for (const auto& e : edges) {
        if (used[e.first] || used[e.second]) continue;
        if (!cond1.passes(e, mode)) continue;
        auto tentative = M.edges;
        tentative.push_back(e);
        if (!matching_acyclic(X, tentative)) continue;
        if (!contraction_acyclic(X, tentative)) continue;
        M.edges = std::move(tentative);
        used[e.first] = used[e.second] = true;
    }
    M.canonicalize();
    return M;
}

SearchResult finish_result(const Poset& X, Matching best, Mode mode, long long budget,
                           long long candidates, Clock::time_point start, bool certified) {
    SearchResult out;
    out.best = std::move(best);
    out.best.canonicalize();
    out.critical_count = X.size() - 2 * static_cast<int>(out.best.edges.size());
    out.function = synthesize_function(X, out.best);
    out.synthesized = true;
    out.certified = certified;
    out.candidates = candidates;
    out.mode = mode;

    // every emitted matching re-validates
    auto rep = validate_matching(X, out.function, out.best, mode, std::nullopt, budget);
    if (!rep.accepted)
        fail(ErrorKind::InvariantBroken, "search produced a matching that fails validation");
    out.seconds = seconds_since(start);
    return out;
}

}  // namespace

SearchResult minimize_critical(const Poset& X, int restarts, std::uint64_t seed, Mode mode,
                               long long budget) {
    const auto start = Clock::now();
    Condition1Cache cond1(X, budget);
    const auto base_edges = X.cover_pairs();

    Matching best;
    bool have_best = false;
    long long candidates = 0;

    for (int r = 0; r < std::max(restarts, 1); ++r) {
        auto edges = base_edges;
        if (r > 0) {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
            std::shuffle(edges.begin(), edges.end(), rng);
        }
        Matching M = greedy_for_synthesis(X, edges, cond1, mode);
        ++candidates;

        // local improvement: drop one edge, try to add two others
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t drop = 0; drop < M.edges.size() && !improved; ++drop) {
                auto reduced = M.edges;
                reduced.erase(reduced.begin() + static_cast<long>(drop));
                std::vector<bool> used(X.size(), false);
                for (const auto& [x, y] : reduced) used[x] = used[y] = true;

                for (std::size_t i = 0; i < base_edges.size() && !improved; ++i) {
                    const auto& e1 = base_edges[i];
                    if (used[e1.first] || used[e1.second]) continue;
                    if (!cond1.passes(e1, mode)) continue;
                    auto with_one = reduced;
                    with_one.push_back(e1);
                    if (!matching_acyclic(X, with_one)) continue;
                    if (!contraction_acyclic(X, with_one)) continue;
                    for (std::size_t j = i + 1; j < base_edges.size() && !improved; ++j) {
                        const auto& e2 = base_edges[j];
                        if (e2.first == e1.first || e2.first == e1.second ||
                            e2.second == e1.first || e2.second == e1.second)
                            continue;
                        if (used[e2.first] || used[e2.second]) continue;
                        if (!cond1.passes(e2, mode)) continue;
                        auto with_two = with_one;
                        with_two.push_back(e2);
                        ++candidates;
                        if (!matching_acyclic(X, with_two)) continue;
                        if (!contraction_acyclic(X, with_two)) continue;
                        M.edges = with_two;
                        M.canonicalize();
                        improved = true;
                    }
                }
            }
        }

        M.canonicalize();
        if (!have_best || M.edges.size() > best.edges.size() ||
            (M.edges.size() == best.edges.size() && M.edges < best.edges)) {
            best = M;
            have_best = true;
        }
    }
    return finish_result(X, best, mode, budget, candidates, start, /*certified=*/false);
}

SearchResult exhaustive_min(const Poset& X, int limit, Mode mode, long long budget) {
    if (X.size() > limit)
        fail(ErrorKind::TooLarge, "exhaustive search limited to " + std::to_string(limit) +
                                      " elements (" + std::to_string(X.size()) + " given)");
    const auto start = Clock::now();
    Condition1Cache cond1(X, budget);

    // pool: cover edges passing condition (1) under the requested mode
    std::vector<std::pair<int, int>> pool;
    for (const auto& e : X.cover_pairs())
        if (cond1.passes(e, mode)) pool.push_back(e);

    Matching best;
    bool have_best = false;
    long long candidates = 1;  // the empty matching

    std::vector<std::pair<int, int>> current;
    std::vector<bool> used(X.size(), false);

    auto consider = [&](const std::vector<std::pair<int, int>>& edges) {
        if (!contraction_acyclic(X, edges)) return;
        Matching m{edges};
        m.canonicalize();
        if (!have_best || m.edges.size() > best.edges.size() ||
            (m.edges.size() == best.edges.size() && m.edges < best.edges)) {
            best = std::move(m);
            have_best = true;
        }
    };
    consider(current);

    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == pool.size()) return;
        // not enough edges left to beat the incumbent
        if (current.size() + (pool.size() - i) < best.edges.size()) return;
        // include pool[i]
        const auto& e = pool[i];
        if (!used[e.first] && !used[e.second]) {
            current.push_back(e);
            // supersets of a cyclic matching stay cyclic: safe to prune
            if (matching_acyclic(X, current)) {
                ++candidates;
                used[e.first] = used[e.second] = true;
                consider(current);
                self(self, i + 1);
                used[e.first] = used[e.second] = false;
            }
            current.pop_back();
        }
        self(self, i + 1);
    };
    dfs(dfs, 0);

    return finish_result(X, best, mode, budget, candidates, start, /*certified=*/true);
}

}  // namespace pomo
