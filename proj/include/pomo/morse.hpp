#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pomo/collapse.hpp"
#include "pomo/numbers.hpp"
#include "pomo/poset.hpp"

namespace pomo {

// Exact-rational function on (part of) a poset, indexed by display order.
// Entries may be absent in relative mode, where the function lives on the
// complement of the down-set.
struct MorseFunction {
    std::vector<std::optional<Rational>> values;

    static MorseFunction total(int n) { return MorseFunction{std::vector<std::optional<Rational>>(static_cast<std::size_t>(n))}; }
    bool defined(int i) const { return values[i].has_value(); }
    const Rational& at(int i) const;  // throws MissingValue
    void set(int i, Rational v) { values[i] = std::move(v); }
};

// values(x) = height_of(x); always a valid Morse function.
MorseFunction height_function(const Poset& X);

struct FunctionCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> violation;  // first bad cover, display order
};

// Strict increase along covers of X, or of the subposet induced on `domain`.
FunctionCheck validate_function(const Poset& X, const MorseFunction& f);
FunctionCheck validate_function(const Poset& X, const MorseFunction& f,
                                const std::vector<int>& domain);

// f(x) < f(y) iff g(x) < g(y) for all pairs in the (sub)domain.
bool functions_equivalent(const Poset& X, const MorseFunction& f, const MorseFunction& g);
bool functions_equivalent(const Poset& X, const MorseFunction& f, const MorseFunction& g,
                          const std::vector<int>& domain);

// Matching on the Hasse diagram: vertex-disjoint cover pairs (lower, upper).
struct Matching {
    std::vector<std::pair<int, int>> edges;

    void canonicalize();
    bool contains_element(int v) const;
    std::optional<int> partner(int v) const;
};

struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;
};

// H_M: matched covers oriented upward, all other covers downward. The
// domain variant restricts to the subposet induced on `domain`.
// Throws NotAMatching on shared endpoints or non-cover edges.
Digraph reversed_digraph(const Poset& X, const Matching& M);
Digraph reversed_digraph(const Poset& X, const Matching& M, const std::vector<int>& domain);

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<int> cycle;  // one directed cycle when not acyclic
};

AcyclicityResult is_acyclic(const Digraph& G);
AcyclicityResult is_acyclic(const Poset& X, const Matching& M);

enum class Mode { Strict, Permissive };

struct EdgeReport {
    std::pair<int, int> edge;
    TrivialityVerdict condition1;
    bool condition2 = false;
    std::optional<int> condition2_witness;  // z with f(x) < f(z) < f(y)

    bool admissible(Mode mode) const;
};

// Condition (1): triviality of K(U^_y - {x}), taken in the full poset even
// in relative mode. Condition (2): no z (in X, or in the complement of A)
// with f(x) < f(z) < f(y).
EdgeReport edge_admissible(const Poset& X, const MorseFunction& f,
                           std::pair<int, int> edge, long long budget,
                           const std::optional<std::vector<int>>& down_set = std::nullopt);

struct AdmissibilityReport {
    Mode mode = Mode::Strict;
    bool relative = false;
    bool accepted = false;
    bool acyclic = false;
    std::vector<int> cycle;             // witness when not acyclic
    std::vector<EdgeReport> edges;      // one per matching edge, input order
    std::vector<int> critical;          // unmatched elements of the domain
    std::vector<std::string> reasons;   // rejection reasons
    std::vector<std::string> warnings;  // permissive-mode acceptances etc.
};

// Full admissibility check. Strict mode requires every edge's condition (1)
// to be CollapsibleCertified; permissive accepts HomologyTrivialUnresolved
// with a warning. `down_set` switches to the relative theory on (X, A);
// throws NotADownSet if A is not a down-set.
AdmissibilityReport validate_matching(const Poset& X, const MorseFunction& f,
                                      const Matching& M, Mode mode,
                                      const std::optional<std::vector<int>>& down_set = std::nullopt,
                                      long long budget = 100000);

struct PathPropertyResult {
    bool holds = true;
    std::vector<int> path;  // violating directed path when !holds
    int z = -1;
};

// Checks, over every directed path x_0..x_r in H_M, that no z satisfies
// f(x_0) < f(z) < f(x_r). A witness indicates a validator bug upstream.
PathPropertyResult check_path_property(const Poset& X, const MorseFunction& f,
                                       const Matching& M,
                                       const std::optional<std::vector<int>>& down_set = std::nullopt);

// Builds f with validate_function passing and condition (2) holding on
// every matched edge: matched pairs are contracted in the up-oriented cover
// digraph, the contraction is leveled by longest path, and pairs receive
// (k, k+1/2). Throws CyclicMatching if H_M has a cycle and SynthesisFailed
// if no function with consecutive pair values exists (the contracted
// digraph can be cyclic even for acyclic matchings). The postcondition is
// re-checked, never assumed.
MorseFunction synthesize_function(const Poset& X, const Matching& M);

struct JoinMorseData {
    Poset join_poset;
    MorseFunction function;
    Matching matching;
    AdmissibilityReport report;  // re-verification of the induced data
};

// Induced Morse data on the ordinal sum: g is shifted by
// (max f - min g + 1) so every X-value lies below every Y-value, and the
// matchings are united. Inputs must validate (throws InputNotValidated);
// the induced structure is re-verified rather than trusted.
JoinMorseData induced_join_morse(const Poset& X, const MorseFunction& f, const Matching& M,
                                 const Poset& Y, const MorseFunction& g, const Matching& N,
                                 Mode mode = Mode::Permissive, long long budget = 100000);

}  // namespace pomo
