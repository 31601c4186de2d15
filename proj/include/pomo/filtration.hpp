#pragma once

#include <optional>
#include <vector>

#include "pomo/homology.hpp"
#include "pomo/morse.hpp"
#include "pomo/poset.hpp"

namespace pomo {

struct RemovalStep {
    bool is_pair = false;
    int x = -1;  // the removed source
    int y = -1;  // its matched cover for pair steps, -1 otherwise
};

struct RemovalTrace {
    std::vector<RemovalStep> steps;
};

// Repeatedly removes the source node of H_M (restricted to the remaining
// complement) with maximum f-value, ties broken by display order: critical
// maximal sources are removed alone, otherwise the source's unique cover
// must be maximal and matched to it and the pair is removed together.
// Stops when only the down-set (or nothing) remains. Requires an accepted
// matching; throws InvariantBroken when the theorem's removal invariant
// fails, which signals an invalid validation upstream.
RemovalTrace removal_trace(const Poset& X, const MorseFunction& f, const Matching& M,
                           const std::optional<std::vector<int>>& down_set = std::nullopt);

struct CriticalInfo {
    int element = -1;
    std::vector<int> link;  // descending link in X, sorted
    HomologySummary link_homology;
};

struct FiltrationLevel {
    Rational t;
    std::vector<CriticalInfo> critical;
    std::vector<std::pair<int, int>> pairs;  // matched pairs with f(x)=t, reverse removal order
    std::vector<int> lower;  // X_i  = X~_{i-1} + critical
    std::vector<int> upper;  // X~_i = X_i + pairs
};

struct Filtration {
    Poset host;
    MorseFunction function;
    std::vector<int> base;  // A in relative mode, empty otherwise
    bool relative = false;
    std::vector<FiltrationLevel> levels;
};

Filtration build_filtration(const RemovalTrace& trace, const Poset& X, const MorseFunction& f,
                            const Matching& M,
                            const std::optional<std::vector<int>>& down_set = std::nullopt);

struct StageCheck {
    int level = 0;
    bool homology_equal = false;   // K(X_i) vs K(X~_i), reduced
    bool euler_ok = false;         // chi(K(X_i)) = chi(K(X~_{i-1})) + sum (1 - chi(link))
    long long chi_lower = 0;
    long long chi_upper = 0;
};

struct StageReport {
    bool all_ok = false;
    std::vector<StageCheck> stages;
    bool global_euler_ok = false;  // chi(K(X)) = chi(K(A)) + sum over criticals
    long long chi_total = 0;
    long long chi_base = 0;
    long long cone_contribution = 0;
    bool final_matches_direct = false;  // last stage homology == homology(K(X))
};

// Exact homology/Euler-level verification of the cone-gluing description;
// failures indicate a broken invariant upstream and are reported, not thrown.
StageReport verify_filtration(const Filtration& F);

struct CwClass {
    enum Kind { Empty, Sphere, Trivial, Other } kind = Other;
    int sphere_dim = -1;  // for Sphere
};

struct CwEntry {
    int element = -1;
    Rational t;
    int height = 0;
    CwClass cls;
    HomologySummary link_homology;
};

struct CwSummary {
    std::vector<CwEntry> entries;
    bool all_spherical = false;       // every link empty or a homology sphere
    std::vector<long long> cells;     // Morse vector when all_spherical
    std::vector<long long> betti;     // of K(X), unreduced-free part by dim
    bool morse_inequalities_ok = false;
    bool discrete_space = false;      // all links above height 0 trivial
    long long component_count = 0;    // number of empty-link criticals
};

CwSummary cw_summary(const Filtration& F);

}  // namespace pomo
