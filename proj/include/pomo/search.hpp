#pragma once

#include <cstdint>
#include <string>

#include "pomo/morse.hpp"

namespace pomo {

enum class ScanOrder { Lex, ByF, Random };

// Scans cover edges in the given order and adds an edge whenever the
// matching property, acyclicity and both admissibility conditions (under
// `mode`) are preserved.
Matching greedy_matching(const Poset& X, const MorseFunction& f, ScanOrder order,
                         std::uint64_t seed = 0, Mode mode = Mode::Strict,
                         long long budget = 100000);

struct SearchResult {
    Matching best;
    int critical_count = 0;
    MorseFunction function;     // given or synthesized
    bool synthesized = false;
    bool certified = false;     // true for exhaustive results
    long long candidates = 0;   // matchings examined
    double seconds = 0.0;
    Mode mode = Mode::Strict;
};

// Multi-restart randomized greedy with one round of local improvement
// (drop one edge, try to add two); functions are synthesized per candidate.
SearchResult minimize_critical(const Poset& X, int restarts = 32, std::uint64_t seed = 0,
                               Mode mode = Mode::Strict, long long budget = 100000);

// Enumerates every matching on the condition-(1)-admissible cover edges
// with acyclicity pruning; condition (2) is discharged by synthesis. The
// returned minimum is certified over the space of all (function, matching)
// pairs. Throws TooLarge above `limit` elements.
SearchResult exhaustive_min(const Poset& X, int limit = 12, Mode mode = Mode::Strict,
                            long long budget = 100000);

}  // namespace pomo
